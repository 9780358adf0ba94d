#![allow(dead_code)]

use dlproof::el::{Axiom, Concept, TBox};
use dlproof::{DerivationStructure, Proof, Sentence, VertexId};

pub fn n(s: &str) -> Concept {
    Concept::name(s)
}

/// `{A ⊑ B, B ⊑ ∃r.A}` and the goal `A ⊑ B ⊓ ∃r.A`.
pub fn loop_tbox() -> (TBox, Axiom) {
    let t = [Axiom::atomic("A", "B"), Axiom::gci(n("B"), Concept::some("r", n("A")))].into_iter().collect();
    (t, Axiom::gci(n("A"), Concept::and(n("B"), Concept::some("r", n("A")))))
}

/// `{C ⊑ ∃r.D, A ⊑ C, ∃r.⊤ ⊑ B}` and the goal `A ⊑ B`.
pub fn role_tbox() -> (TBox, Axiom) {
    let t = [
        Axiom::gci(n("C"), Concept::some("r", n("D"))),
        Axiom::atomic("A", "C"),
        Axiom::gci(Concept::some("r", Concept::Top), n("B")),
    ]
    .into_iter()
    .collect();
    (t, Axiom::atomic("A", "B"))
}

/// Vertices derivable inside `allowed`, starting from theory vertices and premise-free edges.
fn closure<L: Sentence>(d: &DerivationStructure<L>, allowed: u64) -> u64 {
    let g = &d.graph;
    let mut got = 0u64;
    for v in g.vertices() {
        if allowed & (1 << v.index()) != 0 && d.is_theory(v) {
            got |= 1 << v.index();
        }
    }
    loop {
        let before = got;
        for e in g.edges() {
            let c = 1u64 << e.conclusion.index();
            if allowed & c != 0 && got & c == 0 && e.premises.iter().all(|p| got & (1 << p.index()) != 0) {
                got |= c;
            }
        }
        if got == before {
            return got;
        }
    }
}

/// Smallest vertex set from which a vertex labeled `eta` is derivable, by subset enumeration.
pub fn brute_min_proof_size<L: Sentence>(d: &DerivationStructure<L>, eta: &L) -> Option<usize> {
    let g = &d.graph;
    let count = g.vertex_count();
    assert!(count <= 20, "enumeration is limited to 20 vertices");
    let goals: u64 = g.vertices_labeled(eta).fold(0, |acc, v| acc | 1 << v.index());
    (0u64..1 << count)
        .filter(|&s| s & goals != 0 && closure(d, s) & goals != 0)
        .map(|s| s.count_ones() as usize)
        .min()
}

/// Minimal tree size per vertex by value iteration: theory vertices weigh 1,
/// every other vertex `1 + Σ` over its cheapest incoming edge.
pub fn fixpoint_tree_weights<L: Sentence>(d: &DerivationStructure<L>) -> Vec<Option<u64>> {
    let g = &d.graph;
    let mut w: Vec<Option<u64>> = g.vertices().map(|v| d.is_theory(v).then_some(1)).collect();
    loop {
        let mut changed = false;
        for e in g.edges() {
            let sum = e.premises.iter().try_fold(1u64, |acc, p| w[p.index()].map(|x| acc.saturating_add(x)));
            if let Some(s) = sum {
                let c = e.conclusion.index();
                if w[c].is_none_or(|old| s < old) {
                    w[c] = Some(s);
                    changed = true;
                }
            }
        }
        if !changed {
            return w;
        }
    }
}

pub fn oracle_tree_weight<L: Sentence>(d: &DerivationStructure<L>, eta: &L) -> Option<u64> {
    let w = fixpoint_tree_weights(d);
    d.graph.vertices_labeled(eta).filter_map(|v| w[v.index()]).min()
}

/// All tree-proof sizes up to `limit` (at most 63) for every vertex, as bit masks.
pub fn achievable_tree_sizes<L: Sentence>(d: &DerivationStructure<L>, limit: usize) -> Vec<u64> {
    assert!(limit < 64);
    let g = &d.graph;
    let keep = (1u64 << (limit + 1)) - 1;
    let mut sizes: Vec<u64> = g.vertices().map(|v| if d.is_theory(v) { 1 << 1 } else { 0 }).collect();
    loop {
        let mut changed = false;
        for e in g.edges() {
            let mut acc = 1u64 << 1;
            for p in &e.premises {
                let s = sizes[p.index()];
                let mut next = 0;
                for a in 0..=limit {
                    if acc & (1 << a) != 0 {
                        next |= (s << a) & keep;
                    }
                }
                acc = next;
            }
            let c = e.conclusion.index();
            if sizes[c] | acc != sizes[c] {
                sizes[c] |= acc;
                changed = true;
            }
        }
        if !changed {
            return sizes;
        }
    }
}

/// Edges of a proof as `(sorted premise labels, conclusion label, tag)`, sorted.
pub fn edge_shape<L: Sentence>(p: &Proof<L>) -> Vec<(Vec<String>, String, String)> {
    let g = p.graph();
    let mut out: Vec<_> = g
        .edges()
        .iter()
        .map(|e| {
            let mut ps: Vec<String> = e.premises.iter().map(|&v| g.label(v).to_string()).collect();
            ps.sort();
            (ps, g.label(e.conclusion).to_string(), e.tag.clone())
        })
        .collect();
    out.sort();
    out
}

pub fn leaves_of<L: Sentence>(p: &Proof<L>) -> Vec<L> {
    let g = p.graph();
    g.leaves().into_iter().map(|v: VertexId| g.label(v).clone()).collect()
}

/// Normal-form completion: every axiom is rewritten into `A ⊑ B`, `A₁ ⊓ A₂ ⊑ B`,
/// `A ⊑ ∃r.B`, `∃r.A ⊑ B` over names, `⊤` and fresh names, then subsumers are closed.
pub struct Completion {
    sub: Vec<(String, String)>,
    conj: Vec<(String, String, String)>,
    exists_rhs: Vec<(String, String, String)>,
    exists_lhs: Vec<(String, String, String)>,
    roles: Vec<(String, String)>,
    fresh: usize,
}

const TOP: &str = "⊤";

impl Completion {
    pub fn new(t: &TBox) -> Self {
        let mut c = Completion {
            sub: Vec::new(),
            conj: Vec::new(),
            exists_rhs: Vec::new(),
            exists_lhs: Vec::new(),
            roles: Vec::new(),
            fresh: 0,
        };
        for ax in t.axioms() {
            match ax {
                Axiom::Gci(l, r) => c.gci(l, r),
                Axiom::Equivalence(l, r) => {
                    c.gci(l, r);
                    c.gci(r, l);
                }
                Axiom::RoleInclusion(r, s) => c.roles.push((r.to_string(), s.to_string())),
            }
        }
        c
    }

    fn fresh(&mut self) -> String {
        self.fresh += 1;
        format!("_X{}", self.fresh)
    }

    fn atom(&mut self, c: &Concept, lhs: bool) -> String {
        match c {
            Concept::Top => TOP.to_string(),
            Concept::Name(n) => n.to_string(),
            _ => {
                let x = self.fresh();
                if lhs {
                    self.gci(c, &Concept::name(&x));
                } else {
                    self.gci(&Concept::name(&x), c);
                }
                x
            }
        }
    }

    fn gci(&mut self, l: &Concept, r: &Concept) {
        match r {
            Concept::And(a, b) => {
                self.gci(l, a);
                self.gci(l, b);
            }
            Concept::Some(role, f) => {
                let lhs = self.atom(l, true);
                let rhs = self.atom(f, false);
                self.exists_rhs.push((lhs, role.to_string(), rhs));
            }
            Concept::Top => {}
            Concept::Name(b) => match l {
                Concept::Top | Concept::Name(_) => {
                    let a = self.atom(l, true);
                    self.sub.push((a, b.to_string()));
                }
                Concept::And(x, y) => {
                    let x = self.atom(x, true);
                    let y = self.atom(y, true);
                    self.conj.push((x, y, b.to_string()));
                }
                Concept::Some(role, f) => {
                    let f = self.atom(f, true);
                    self.exists_lhs.push((role.to_string(), f, b.to_string()));
                }
            },
        }
    }

    /// Whether `a ⊑ b` follows, for concept names `a` and `b`.
    pub fn entails(&self, a: &str, b: &str) -> bool {
        use std::collections::{BTreeMap, BTreeSet};
        let mut names: BTreeSet<String> = [a.to_string(), TOP.to_string()].into();
        for (x, y) in &self.sub {
            names.extend([x.clone(), y.clone()]);
        }
        for (x, y, z) in &self.conj {
            names.extend([x.clone(), y.clone(), z.clone()]);
        }
        for (x, _, z) in &self.exists_rhs {
            names.extend([x.clone(), z.clone()]);
        }
        for (_, y, z) in &self.exists_lhs {
            names.extend([y.clone(), z.clone()]);
        }
        let mut s: BTreeMap<String, BTreeSet<String>> =
            names.iter().map(|n| (n.clone(), [n.clone(), TOP.to_string()].into())).collect();
        let mut r: BTreeSet<(String, String, String)> = BTreeSet::new();
        loop {
            let mut changed = false;
            for x in &names {
                let mut add = Vec::new();
                let sx = &s[x];
                for (p, q) in &self.sub {
                    if sx.contains(p) {
                        add.push(q.clone());
                    }
                }
                for (p, q, z) in &self.conj {
                    if sx.contains(p) && sx.contains(q) {
                        add.push(z.clone());
                    }
                }
                for (role, y) in r.iter().filter(|(u, _, _)| u == x).map(|(_, role, y)| (role, y)) {
                    for (role2, f, z) in &self.exists_lhs {
                        if self.role_sub(role, role2) && s[y].contains(f) {
                            add.push(z.clone());
                        }
                    }
                }
                let entry = s.get_mut(x).unwrap();
                for z in add {
                    changed |= entry.insert(z);
                }
            }
            for (p, role, z) in &self.exists_rhs {
                for x in &names {
                    if s[x].contains(p) {
                        changed |= r.insert((x.clone(), role.clone(), z.clone()));
                    }
                }
            }
            if !changed {
                break;
            }
        }
        b == TOP || s[a].contains(b)
    }

    fn role_sub(&self, r: &str, s: &str) -> bool {
        let mut seen = vec![r.to_string()];
        let mut i = 0;
        while i < seen.len() {
            if seen[i] == s {
                return true;
            }
            for (x, y) in &self.roles {
                if *x == seen[i] && !seen.contains(y) {
                    seen.push(y.clone());
                }
            }
            i += 1;
        }
        false
    }
}
