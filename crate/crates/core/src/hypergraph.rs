//! Labeled directed hypergraphs, derivation structures and proofs.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::hash::Hash;

use indexmap::IndexSet;
use thiserror::Error;

/// A sentence that can label a vertex.
pub trait Sentence: Clone + Eq + Hash + fmt::Debug + fmt::Display {
    /// Symbol count: names, roles and constructor occurrences (the inclusion sign counts once).
    fn size(&self) -> usize;
    /// Constructor occurrences only.
    fn constructor_count(&self) -> usize;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId(pub u32);

impl EdgeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A hyperedge `(S, d)`. Premises are kept sorted and duplicate-free.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hyperedge {
    pub premises: Vec<VertexId>,
    pub conclusion: VertexId,
    /// Rule name, forgotten symbol, or any caller-chosen annotation.
    pub tag: String,
}

/// A directed hypergraph with sentence labels.
///
/// Edges form a set: adding an edge with the same premises and conclusion as an
/// existing one returns the existing id. Several vertices may carry the same label.
#[derive(Clone)]
pub struct Hypergraph<L> {
    labels: Vec<L>,
    provenance: Vec<Option<VertexId>>,
    edges: Vec<Hyperedge>,
    incoming: Vec<Vec<EdgeId>>,
    outgoing: Vec<Vec<EdgeId>>,
    edge_index: HashMap<(Box<[VertexId]>, VertexId), EdgeId>,
    label_index: HashMap<L, VertexId>,
}

impl<L: Sentence> Default for Hypergraph<L> {
    fn default() -> Self {
        Hypergraph {
            labels: Vec::new(),
            provenance: Vec::new(),
            edges: Vec::new(),
            incoming: Vec::new(),
            outgoing: Vec::new(),
            edge_index: HashMap::new(),
            label_index: HashMap::new(),
        }
    }
}

impl<L: fmt::Debug> fmt::Debug for Hypergraph<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Hypergraph {{")?;
        for (i, l) in self.labels.iter().enumerate() {
            writeln!(f, "  v{i}: {l:?}")?;
        }
        for e in &self.edges {
            let ps: Vec<String> = e.premises.iter().map(|p| p.to_string()).collect();
            writeln!(f, "  [{}] -> {} ({})", ps.join(", "), e.conclusion, e.tag)?;
        }
        write!(f, "}}")
    }
}

impl<L: Sentence> Hypergraph<L> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a fresh vertex, even if another vertex already has this label.
    pub fn add_vertex(&mut self, label: L) -> VertexId {
        self.add_vertex_with_provenance(label, None)
    }

    pub fn add_vertex_with_provenance(&mut self, label: L, origin: Option<VertexId>) -> VertexId {
        let id = VertexId(self.labels.len() as u32);
        self.label_index.entry(label.clone()).or_insert(id);
        self.labels.push(label);
        self.provenance.push(origin);
        self.incoming.push(Vec::new());
        self.outgoing.push(Vec::new());
        id
    }

    /// Returns the vertex labeled `label`, creating it if needed. The flag is true when created.
    pub fn intern(&mut self, label: L) -> (VertexId, bool) {
        if let Some(&v) = self.label_index.get(&label) {
            (v, false)
        } else {
            (self.add_vertex(label), true)
        }
    }

    /// The lowest-id vertex carrying `label`.
    pub fn vertex_of(&self, label: &L) -> Option<VertexId> {
        self.label_index.get(label).copied()
    }

    /// All vertices carrying `label`, in id order.
    pub fn vertices_labeled<'a>(&'a self, label: &'a L) -> impl Iterator<Item = VertexId> + 'a {
        self.vertices().filter(move |&v| self.label(v) == label)
    }

    /// Adds the edge `(premises, conclusion)`; returns the existing id if already present.
    ///
    /// Panics if an endpoint is not a vertex of this hypergraph.
    pub fn add_edge(
        &mut self,
        premises: impl IntoIterator<Item = VertexId>,
        conclusion: VertexId,
        tag: impl Into<String>,
    ) -> EdgeId {
        self.try_add_edge(premises, conclusion, tag).0
    }

    /// Like [`Hypergraph::add_edge`], also reporting whether the edge is new.
    pub fn try_add_edge(
        &mut self,
        premises: impl IntoIterator<Item = VertexId>,
        conclusion: VertexId,
        tag: impl Into<String>,
    ) -> (EdgeId, bool) {
        let mut premises: Vec<VertexId> = premises.into_iter().collect();
        premises.sort_unstable();
        premises.dedup();
        let n = self.labels.len();
        assert!(conclusion.index() < n, "conclusion {conclusion} is not a vertex");
        for p in &premises {
            assert!(p.index() < n, "premise {p} is not a vertex");
        }
        let key = (premises.clone().into_boxed_slice(), conclusion);
        if let Some(&e) = self.edge_index.get(&key) {
            return (e, false);
        }
        let id = EdgeId(self.edges.len() as u32);
        for p in &premises {
            self.outgoing[p.index()].push(id);
        }
        self.incoming[conclusion.index()].push(id);
        self.edges.push(Hyperedge { premises, conclusion, tag: tag.into() });
        self.edge_index.insert(key, id);
        (id, true)
    }

    pub fn find_edge(&self, premises: &[VertexId], conclusion: VertexId) -> Option<EdgeId> {
        let mut ps = premises.to_vec();
        ps.sort_unstable();
        ps.dedup();
        self.edge_index.get(&(ps.into_boxed_slice(), conclusion)).copied()
    }

    pub fn label(&self, v: VertexId) -> &L {
        &self.labels[v.index()]
    }

    pub fn labels(&self) -> &[L] {
        &self.labels
    }

    pub fn provenance(&self, v: VertexId) -> Option<VertexId> {
        self.provenance[v.index()]
    }

    pub fn edge(&self, e: EdgeId) -> &Hyperedge {
        &self.edges[e.index()]
    }

    pub fn edges(&self) -> &[Hyperedge] {
        &self.edges
    }

    pub fn edge_ids(&self) -> impl ExactSizeIterator<Item = EdgeId> {
        (0..self.edges.len() as u32).map(EdgeId)
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = VertexId> {
        (0..self.labels.len() as u32).map(VertexId)
    }

    pub fn incoming(&self, v: VertexId) -> &[EdgeId] {
        &self.incoming[v.index()]
    }

    pub fn outgoing(&self, v: VertexId) -> &[EdgeId] {
        &self.outgoing[v.index()]
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Vertices without incoming hyperedges.
    pub fn leaves(&self) -> Vec<VertexId> {
        self.vertices().filter(|&v| self.incoming(v).is_empty()).collect()
    }

    /// Vertices that are not a premise of any hyperedge.
    pub fn sinks(&self) -> Vec<VertexId> {
        self.vertices().filter(|&v| self.outgoing(v).is_empty()).collect()
    }

    /// A premises-before-conclusions vertex order, or `None` if there is a cycle.
    pub fn topological_order(&self) -> Option<Vec<VertexId>> {
        // in-degree counts edge-premise incidences feeding each conclusion
        let mut indeg = vec![0usize; self.vertex_count()];
        for e in &self.edges {
            indeg[e.conclusion.index()] += e.premises.len();
        }
        let mut stack: Vec<VertexId> =
            self.vertices().filter(|v| indeg[v.index()] == 0).collect();
        stack.reverse();
        let mut order = Vec::with_capacity(self.vertex_count());
        while let Some(v) = stack.pop() {
            order.push(v);
            for &e in self.outgoing(v) {
                let d = self.edges[e.index()].conclusion;
                indeg[d.index()] -= 1;
                if indeg[d.index()] == 0 {
                    stack.push(d);
                }
            }
        }
        (order.len() == self.vertex_count()).then_some(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    /// Sum over edges of the conclusion size plus all premise sizes.
    pub fn label_size(&self) -> usize {
        self.edges
            .iter()
            .map(|e| {
                self.label(e.conclusion).size()
                    + e.premises.iter().map(|&p| self.label(p).size()).sum::<usize>()
            })
            .sum()
    }

    /// Vertices from which `target` is reachable, including `target`.
    pub fn ancestors(&self, target: VertexId) -> Vec<bool> {
        let mut seen = vec![false; self.vertex_count()];
        let mut stack = vec![target];
        seen[target.index()] = true;
        while let Some(v) = stack.pop() {
            for &e in self.incoming(v) {
                for &p in &self.edges[e.index()].premises {
                    if !seen[p.index()] {
                        seen[p.index()] = true;
                        stack.push(p);
                    }
                }
            }
        }
        seen
    }
}

/// A grounded, sound hypergraph over a theory.
///
/// Groundedness and soundness are not enforced on construction; use
/// [`DerivationStructure::is_grounded`] and [`DerivationStructure::is_sound`].
#[derive(Clone, Debug)]
pub struct DerivationStructure<L> {
    pub graph: Hypergraph<L>,
    pub theory: IndexSet<L>,
}

impl<L: Sentence> DerivationStructure<L> {
    pub fn new(theory: impl IntoIterator<Item = L>) -> Self {
        DerivationStructure { graph: Hypergraph::new(), theory: theory.into_iter().collect() }
    }

    pub fn is_theory(&self, v: VertexId) -> bool {
        self.theory.contains(self.graph.label(v))
    }

    /// Every leaf is labeled by a theory sentence.
    pub fn is_grounded(&self) -> bool {
        self.graph.leaves().into_iter().all(|v| self.is_theory(v))
    }

    pub fn is_sound(&self, checker: &dyn RuleChecker<L>) -> bool {
        self.graph.edge_ids().all(|e| edge_passes(&self.graph, e, checker))
    }

    /// The substructure induced by the given edges plus the given extra vertices.
    ///
    /// Vertices keep their relative order; each new vertex records the original id as provenance.
    pub fn substructure(
        &self,
        edges: impl IntoIterator<Item = EdgeId>,
        extra: impl IntoIterator<Item = VertexId>,
    ) -> (DerivationStructure<L>, Vec<Option<VertexId>>) {
        let edges: Vec<EdgeId> = edges.into_iter().collect();
        let mut keep = vec![false; self.graph.vertex_count()];
        for v in extra {
            keep[v.index()] = true;
        }
        for &e in &edges {
            let edge = self.graph.edge(e);
            keep[edge.conclusion.index()] = true;
            for p in &edge.premises {
                keep[p.index()] = true;
            }
        }
        let mut map = vec![None; self.graph.vertex_count()];
        let mut sub = DerivationStructure {
            graph: Hypergraph::new(),
            theory: self.theory.clone(),
        };
        for v in self.graph.vertices() {
            if keep[v.index()] {
                map[v.index()] =
                    Some(sub.graph.add_vertex_with_provenance(self.graph.label(v).clone(), Some(v)));
            }
        }
        for &e in &edges {
            let edge = self.graph.edge(e);
            sub.graph.add_edge(
                edge.premises.iter().map(|p| map[p.index()].unwrap()),
                map[edge.conclusion.index()].unwrap(),
                edge.tag.clone(),
            );
        }
        (sub, map)
    }
}

/// Validity predicate for a single inference step.
pub trait RuleChecker<L> {
    fn name(&self) -> &str;
    fn check(&self, premises: &[&L], conclusion: &L) -> bool;
}

fn edge_passes<L: Sentence>(g: &Hypergraph<L>, e: EdgeId, checker: &dyn RuleChecker<L>) -> bool {
    let edge = g.edge(e);
    let premises: Vec<&L> = edge.premises.iter().map(|&p| g.label(p)).collect();
    checker.check(&premises, g.label(edge.conclusion))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProofViolation {
    #[error("the hypergraph contains a cycle")]
    Cycle,
    #[error("the hypergraph has no sink")]
    NoSink,
    #[error("the hypergraph has {0} sinks")]
    MultipleSinks(usize),
    #[error("the sink is labeled {found}, expected {expected}")]
    WrongSinkLabel { found: String, expected: String },
    #[error("leaf {vertex} is labeled {label}, which is not in the theory")]
    UngroundedLeaf { vertex: VertexId, label: String },
    #[error("edge {edge} into {conclusion} is rejected by the {checker} checker")]
    UnsoundEdge { edge: u32, conclusion: String, checker: String },
}

/// Checks that `structure` is a proof of `eta`; returns the sink on success.
///
/// Conditions are checked in the order cycle, sinks, groundedness, edges.
pub fn check_proof<L: Sentence>(
    structure: &DerivationStructure<L>,
    eta: &L,
    checker: &dyn RuleChecker<L>,
) -> Result<VertexId, ProofViolation> {
    let g = &structure.graph;
    if !g.is_acyclic() {
        return Err(ProofViolation::Cycle);
    }
    let sinks = g.sinks();
    let sink = match sinks.as_slice() {
        [] => return Err(ProofViolation::NoSink),
        [s] => *s,
        many => return Err(ProofViolation::MultipleSinks(many.len())),
    };
    if g.label(sink) != eta {
        return Err(ProofViolation::WrongSinkLabel {
            found: g.label(sink).to_string(),
            expected: eta.to_string(),
        });
    }
    for v in g.leaves() {
        if !structure.is_theory(v) {
            return Err(ProofViolation::UngroundedLeaf { vertex: v, label: g.label(v).to_string() });
        }
    }
    for e in g.edge_ids() {
        if !edge_passes(g, e, checker) {
            return Err(ProofViolation::UnsoundEdge {
                edge: e.0,
                conclusion: g.label(g.edge(e).conclusion).to_string(),
                checker: checker.name().to_string(),
            });
        }
    }
    Ok(sink)
}

/// Boolean form of [`check_proof`].
pub fn is_proof<L: Sentence>(
    structure: &DerivationStructure<L>,
    eta: &L,
    checker: &dyn RuleChecker<L>,
) -> bool {
    check_proof(structure, eta, checker).is_ok()
}

/// An acyclic derivation structure with a single sink.
#[derive(Clone, Debug)]
pub struct Proof<L> {
    pub structure: DerivationStructure<L>,
    pub sink: VertexId,
}

impl<L: Sentence> Proof<L> {
    /// Validates `structure` as a proof of `eta`.
    pub fn new(
        structure: DerivationStructure<L>,
        eta: &L,
        checker: &dyn RuleChecker<L>,
    ) -> Result<Self, ProofViolation> {
        let sink = check_proof(&structure, eta, checker)?;
        Ok(Proof { structure, sink })
    }

    pub fn graph(&self) -> &Hypergraph<L> {
        &self.structure.graph
    }

    pub fn goal(&self) -> &L {
        self.structure.graph.label(self.sink)
    }

    pub fn vertex_count(&self) -> usize {
        self.structure.graph.vertex_count()
    }

    pub fn label_size(&self) -> usize {
        self.structure.graph.label_size()
    }

    /// Copies shared vertices until the hypergraph is a tree rooted at the sink.
    ///
    /// Every copy records the id it was copied from in this proof as provenance.
    pub fn unravel(&self) -> TreeProof<L> {
        let g = &self.structure.graph;
        let mut out = DerivationStructure {
            graph: Hypergraph::new(),
            theory: self.structure.theory.clone(),
        };
        // iterative post-order copy: (vertex, expanded?)
        enum Task {
            Enter(VertexId),
            Exit(VertexId),
        }
        let mut tasks = vec![Task::Enter(self.sink)];
        let mut results: Vec<VertexId> = Vec::new();
        while let Some(t) = tasks.pop() {
            match t {
                Task::Enter(v) => {
                    tasks.push(Task::Exit(v));
                    for &e in g.incoming(v).iter().rev() {
                        for &p in g.edge(e).premises.iter().rev() {
                            tasks.push(Task::Enter(p));
                        }
                    }
                }
                Task::Exit(v) => {
                    let n: usize = g.incoming(v).iter().map(|&e| g.edge(e).premises.len()).sum();
                    let children = results.split_off(results.len() - n);
                    let copy = out.graph.add_vertex_with_provenance(g.label(v).clone(), Some(v));
                    let mut it = children.into_iter();
                    for &e in g.incoming(v) {
                        let edge = g.edge(e);
                        let ps: Vec<VertexId> = it.by_ref().take(edge.premises.len()).collect();
                        out.graph.add_edge(ps, copy, edge.tag.clone());
                    }
                    results.push(copy);
                }
            }
        }
        let sink = results.pop().expect("sink copy");
        TreeProof(Proof { structure: out, sink })
    }

    /// No proper substructure is a proof of the same goal.
    pub fn is_non_redundant(&self) -> bool {
        let g = &self.structure.graph;
        let goal = self.goal();
        let reach = g.ancestors(self.sink);
        g.vertices().all(|v| {
            let incoming = g.incoming(v).len();
            reach[v.index()]
                && incoming <= 1
                && !(incoming == 1 && self.structure.is_theory(v))
                && (v == self.sink || g.label(v) != goal)
        })
    }
}

/// A proof whose hypergraph is a tree rooted at the sink.
#[derive(Clone, Debug)]
pub struct TreeProof<L>(pub Proof<L>);

impl<L: Sentence> TreeProof<L> {
    pub fn proof(&self) -> &Proof<L> {
        &self.0
    }

    pub fn into_proof(self) -> Proof<L> {
        self.0
    }

    pub fn vertex_count(&self) -> usize {
        self.0.vertex_count()
    }

    /// Every non-root vertex is a premise of exactly one edge and every vertex has
    /// at most one incoming edge.
    pub fn is_tree(&self) -> bool {
        let g = self.0.graph();
        g.is_acyclic()
            && g.vertices().all(|v| {
                g.incoming(v).len() <= 1
                    && if v == self.0.sink {
                        g.outgoing(v).is_empty()
                    } else {
                        g.outgoing(v).len() == 1
                    }
            })
    }
}

/// A label- and edge-preserving vertex map between two hypergraphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMapping {
    pub assignment: Vec<VertexId>,
}

impl VertexMapping {
    pub fn get(&self, v: VertexId) -> VertexId {
        self.assignment[v.index()]
    }

    /// Verifies the homomorphism conditions directly.
    pub fn is_homomorphism<L: Sentence>(&self, from: &Hypergraph<L>, to: &Hypergraph<L>) -> bool {
        self.assignment.len() == from.vertex_count()
            && from.vertices().all(|v| from.label(v) == to.label(self.get(v)))
            && from.edges().iter().all(|e| {
                let ps: Vec<VertexId> = e.premises.iter().map(|&p| self.get(p)).collect();
                to.find_edge(&ps, self.get(e.conclusion)).is_some()
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("search budget of {0} node expansions exhausted")]
pub struct BudgetExceeded(pub u64);

/// Backtracking search for a homomorphism `from → to`.
///
/// Vertices are assigned premises-first, picking the ready vertex with the fewest
/// candidates; each edge is checked as soon as all its endpoints are assigned.
pub fn find_homomorphism<L: Sentence>(
    from: &Hypergraph<L>,
    to: &Hypergraph<L>,
    budget: u64,
) -> Result<Option<VertexMapping>, BudgetExceeded> {
    let mut by_label: HashMap<&L, Vec<VertexId>> = HashMap::new();
    for v in to.vertices() {
        by_label.entry(to.label(v)).or_default().push(v);
    }
    let mut candidates: Vec<Vec<VertexId>> = Vec::with_capacity(from.vertex_count());
    for v in from.vertices() {
        match by_label.get(from.label(v)) {
            Some(c) => candidates.push(c.clone()),
            None => return Ok(None),
        }
    }
    // edges touching each vertex, and distinct endpoint counts
    let mut touching: Vec<Vec<usize>> = vec![Vec::new(); from.vertex_count()];
    let mut open: Vec<usize> = Vec::with_capacity(from.edge_count());
    for (i, e) in from.edges().iter().enumerate() {
        let mut ends: HashSet<VertexId> = e.premises.iter().copied().collect();
        ends.insert(e.conclusion);
        for v in &ends {
            touching[v.index()].push(i);
        }
        open.push(ends.len());
    }
    let mut search = HomSearch {
        from,
        to,
        candidates,
        touching,
        open,
        assignment: vec![None; from.vertex_count()],
        expansions: 0,
        budget,
    };
    if search.run()? {
        Ok(Some(VertexMapping {
            assignment: search.assignment.into_iter().map(Option::unwrap).collect(),
        }))
    } else {
        Ok(None)
    }
}

struct HomSearch<'a, L> {
    from: &'a Hypergraph<L>,
    to: &'a Hypergraph<L>,
    candidates: Vec<Vec<VertexId>>,
    touching: Vec<Vec<usize>>,
    open: Vec<usize>,
    assignment: Vec<Option<VertexId>>,
    expansions: u64,
    budget: u64,
}

impl<L: Sentence> HomSearch<'_, L> {
    fn ready(&self, v: VertexId) -> bool {
        self.from.incoming(v).iter().all(|&e| {
            self.from.edge(e).premises.iter().all(|p| *p == v || self.assignment[p.index()].is_some())
        })
    }

    fn pick(&self) -> Option<VertexId> {
        let unassigned = self.from.vertices().filter(|v| self.assignment[v.index()].is_none());
        let mut best: Option<(bool, usize, VertexId)> = None;
        for v in unassigned {
            // prefer ready vertices, then fewest candidates
            let key = (!self.ready(v), self.candidates[v.index()].len(), v);
            if best.is_none_or(|b| key < b) {
                best = Some(key);
            }
        }
        best.map(|b| b.2)
    }

    fn edge_ok(&self, i: usize) -> bool {
        let e = &self.from.edges()[i];
        let ps: Vec<VertexId> = e.premises.iter().map(|p| self.assignment[p.index()].unwrap()).collect();
        self.to.find_edge(&ps, self.assignment[e.conclusion.index()].unwrap()).is_some()
    }

    fn run(&mut self) -> Result<bool, BudgetExceeded> {
        let Some(v) = self.pick() else {
            return Ok(true);
        };
        let cands = self.candidates[v.index()].clone();
        for c in cands {
            self.expansions += 1;
            if self.expansions > self.budget {
                return Err(BudgetExceeded(self.budget));
            }
            self.assignment[v.index()] = Some(c);
            let touching = self.touching[v.index()].clone();
            let mut ok = true;
            for &i in &touching {
                self.open[i] -= 1;
                if self.open[i] == 0 && ok && !self.edge_ok(i) {
                    ok = false;
                }
            }
            if ok && self.run()? {
                return Ok(true);
            }
            for &i in &touching {
                self.open[i] += 1;
            }
            self.assignment[v.index()] = None;
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Clone, Debug, PartialEq, Eq, Hash)]
    struct S(&'static str);

    impl fmt::Display for S {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            f.write_str(self.0)
        }
    }

    impl Sentence for S {
        fn size(&self) -> usize {
            self.0.len()
        }
        fn constructor_count(&self) -> usize {
            0
        }
    }

    struct Any;
    impl RuleChecker<S> for Any {
        fn name(&self) -> &str {
            "any"
        }
        fn check(&self, _: &[&S], _: &S) -> bool {
            true
        }
    }

    fn diamond() -> DerivationStructure<S> {
        let mut d = DerivationStructure::new([S("a")]);
        let a = d.graph.add_vertex(S("a"));
        let b = d.graph.add_vertex(S("b"));
        let c = d.graph.add_vertex(S("c"));
        let g = d.graph.add_vertex(S("g"));
        d.graph.add_edge([a], b, "");
        d.graph.add_edge([a], c, "");
        d.graph.add_edge([b, c], g, "");
        d
    }

    #[test]
    fn edges_are_a_set() {
        let mut h: Hypergraph<S> = Hypergraph::new();
        let a = h.add_vertex(S("a"));
        let b = h.add_vertex(S("b"));
        let e1 = h.add_edge([a, a], b, "x");
        let e2 = h.add_edge([a], b, "y");
        assert_eq!(e1, e2);
        assert_eq!(h.edge(e1).premises, vec![a]);
        assert_eq!(h.edge(e1).tag, "x");
    }

    #[test]
    fn empty_premise_edge_makes_non_leaf() {
        let mut h: Hypergraph<S> = Hypergraph::new();
        let a = h.add_vertex(S("a"));
        assert_eq!(h.leaves(), vec![a]);
        h.add_edge([], a, "");
        assert!(h.leaves().is_empty());
        assert!(Hypergraph::<S>::new().leaves().is_empty());
    }

    #[test]
    fn self_premise_is_a_cycle() {
        let mut h: Hypergraph<S> = Hypergraph::new();
        let a = h.add_vertex(S("a"));
        let b = h.add_vertex(S("b"));
        h.add_edge([a, b], b, "");
        assert!(!h.is_acyclic());
    }

    #[test]
    fn unravel_duplicates_shared_vertices() {
        let d = diamond();
        let p = Proof::new(d, &S("g"), &Any).unwrap();
        assert!(p.is_non_redundant());
        let t = p.unravel();
        assert_eq!(t.vertex_count(), 5);
        assert!(t.is_tree());
        assert!(Proof::new(t.0.structure.clone(), &S("g"), &Any).is_ok());
        let prov: Vec<_> = t.0.graph().vertices().map(|v| t.0.graph().provenance(v).unwrap()).collect();
        assert_eq!(prov.iter().filter(|v| v.0 == 0).count(), 2);
    }

    #[test]
    fn check_proof_reports_kinds() {
        let mut d = diamond();
        assert_eq!(check_proof(&d, &S("b"), &Any), Err(ProofViolation::WrongSinkLabel {
            found: "g".into(),
            expected: "b".into(),
        }));
        let x = d.graph.add_vertex(S("x"));
        assert_eq!(check_proof(&d, &S("g"), &Any), Err(ProofViolation::MultipleSinks(2)));
        d.graph.add_edge([x], VertexId(0), "");
        assert!(matches!(check_proof(&d, &S("g"), &Any), Err(ProofViolation::UngroundedLeaf { .. })));
    }

    #[test]
    fn homomorphism_into_self_is_identity_compatible() {
        let d = diamond();
        let h = find_homomorphism(&d.graph, &d.graph, 1000).unwrap().unwrap();
        assert!(h.is_homomorphism(&d.graph, &d.graph));
        assert_eq!(h.assignment, d.graph.vertices().collect::<Vec<_>>());
    }

    #[test]
    fn homomorphism_budget() {
        let d = diamond();
        assert_eq!(find_homomorphism(&d.graph, &d.graph, 2), Err(BudgetExceeded(2)));
    }

    #[test]
    fn redundancy_detected() {
        let mut d = diamond();
        d.graph.add_edge([VertexId(1)], VertexId(3), "");
        let p = Proof::new(d, &S("g"), &Any).unwrap();
        assert!(!p.is_non_redundant());
    }
}
