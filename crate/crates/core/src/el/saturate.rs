use std::collections::{HashMap, HashSet, VecDeque};

use indexmap::IndexSet;

use super::syntax::{Axiom, Concept, Symbol, TBox};
use crate::error::CapacityError;
use crate::hypergraph::{DerivationStructure, VertexId};

/// Which concepts act as left-hand sides ("contexts") of derived sentences.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ContextPolicy {
    /// Every concept of the universe is a context.
    #[default]
    AllSubconcepts,
    /// Only the goal's left-hand side and fillers of derived existentials, as in ELK.
    GoalDirected,
}

#[derive(Clone, Debug)]
pub struct SaturationConfig {
    pub contexts: ContextPolicy,
    pub max_concepts: usize,
    pub max_vertices: usize,
}

impl Default for SaturationConfig {
    fn default() -> Self {
        SaturationConfig { contexts: ContextPolicy::AllSubconcepts, max_concepts: 100_000, max_vertices: 2_000_000 }
    }
}

impl SaturationConfig {
    pub fn goal_directed() -> Self {
        SaturationConfig { contexts: ContextPolicy::GoalDirected, ..Default::default() }
    }
}

pub const R0: &str = "R0";
pub const R_TOP: &str = "R⊤";
pub const R_SUB: &str = "R⊑";
pub const R_AND1: &str = "R⊓1-";
pub const R_AND2: &str = "R⊓2-";
pub const R_AND_PLUS: &str = "R⊓+";
pub const R_EXISTS: &str = "R∃";
pub const R_H: &str = "RH";

#[derive(Clone, Copy, Debug)]
enum Shape {
    Top,
    Name,
    And(u32, u32),
    Some(u32, u32),
}

/// The concepts rules may be instantiated with, interned by id.
struct Universe {
    concepts: IndexSet<Concept>,
    shape: Vec<Shape>,
    roles: IndexSet<Symbol>,
    conj: HashMap<(u32, u32), u32>,
    /// For each concept D: pairs (E, D⊓E or E⊓D) present in the universe.
    conj_partners: Vec<Vec<(u32, u32)>>,
    exists: HashMap<(u32, u32), u32>,
    top: Option<u32>,
    cap: usize,
}

impl Universe {
    fn new(cap: usize) -> Self {
        Universe {
            concepts: IndexSet::new(),
            shape: Vec::new(),
            roles: IndexSet::new(),
            conj: HashMap::new(),
            conj_partners: Vec::new(),
            exists: HashMap::new(),
            top: None,
            cap,
        }
    }

    fn role(&mut self, r: &Symbol) -> u32 {
        self.roles.insert_full(r.clone()).0 as u32
    }

    fn add(&mut self, c: &Concept) -> Result<u32, CapacityError> {
        if let Some(i) = self.concepts.get_index_of(c) {
            return Ok(i as u32);
        }
        let shape = match c {
            Concept::Top => Shape::Top,
            Concept::Name(_) => Shape::Name,
            Concept::And(l, r) => Shape::And(self.add(l)?, self.add(r)?),
            Concept::Some(role, f) => {
                let f = self.add(f)?;
                Shape::Some(self.role(role), f)
            }
        };
        if self.concepts.len() >= self.cap {
            return Err(CapacityError::new("max_concepts", self.cap));
        }
        let id = self.concepts.insert_full(c.clone()).0 as u32;
        self.shape.push(shape);
        self.conj_partners.push(Vec::new());
        match shape {
            Shape::Top => self.top = Some(id),
            Shape::Name => {}
            Shape::And(l, r) => {
                self.conj.insert((l, r), id);
                self.conj_partners[l as usize].push((r, id));
                if l != r {
                    self.conj_partners[r as usize].push((l, id));
                }
            }
            Shape::Some(role, f) => {
                self.exists.insert((role, f), id);
            }
        }
        Ok(id)
    }

    fn concept(&self, id: u32) -> &Concept {
        &self.concepts[id as usize]
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Key {
    Gci(u32, u32),
    Role(u32, u32),
}

struct Saturator {
    policy: ContextPolicy,
    max_vertices: usize,
    u: Universe,
    ds: DerivationStructure<Axiom>,
    key_vertex: HashMap<Key, VertexId>,
    keys: Vec<Key>,
    processed: Vec<bool>,
    contexts: Vec<bool>,
    by_lhs: HashMap<u32, Vec<VertexId>>,
    by_rhs: HashMap<u32, Vec<VertexId>>,
    ex_by_filler: HashMap<u32, Vec<VertexId>>,
    ex_by_role: HashMap<u32, Vec<VertexId>>,
    role_sup: HashMap<u32, Vec<(u32, VertexId)>>,
    queue: VecDeque<VertexId>,
}

/// Saturates `tbox` for goal `eta` with the default configuration.
pub fn saturate(tbox: &TBox, eta: &Axiom) -> Result<DerivationStructure<Axiom>, CapacityError> {
    saturate_with(tbox, eta, &SaturationConfig::default())
}

/// Builds the derivation structure of all ELK rule instances over the subconcepts of
/// `tbox` and `eta`, plus the role-inclusion lifting `C⊑∃r.D, r⊑s ⊢ C⊑∃s.D`.
///
/// One vertex per sentence. Told axioms are vertices; `R0` and `R⊤` instances are
/// edges without premises. Instances whose conclusion is one of their premises are omitted.
pub fn saturate_with(
    tbox: &TBox,
    eta: &Axiom,
    config: &SaturationConfig,
) -> Result<DerivationStructure<Axiom>, CapacityError> {
    let mut u = Universe::new(config.max_concepts);
    let mut gcis = Vec::new();
    let mut ris = Vec::new();
    for ax in tbox.axioms().chain(std::iter::once(eta)) {
        match ax {
            Axiom::Gci(l, r) | Axiom::Equivalence(l, r) => {
                gcis.push((u.add(l)?, u.add(r)?));
            }
            Axiom::RoleInclusion(s, t) => {
                ris.push((u.role(s), u.role(t)));
            }
        }
    }
    // goal sentence is not told
    let goal_key = match eta {
        Axiom::Gci(..) | Axiom::Equivalence(..) => gcis.pop(),
        Axiom::RoleInclusion(..) => {
            ris.pop();
            None
        }
    };
    close_under_role_inclusions(&mut u, &ris)?;

    let mut s = Saturator {
        policy: config.contexts,
        max_vertices: config.max_vertices,
        contexts: vec![false; u.concepts.len()],
        u,
        ds: DerivationStructure::new(tbox.axioms().cloned()),
        key_vertex: HashMap::new(),
        keys: Vec::new(),
        processed: Vec::new(),
        by_lhs: HashMap::new(),
        by_rhs: HashMap::new(),
        ex_by_filler: HashMap::new(),
        ex_by_role: HashMap::new(),
        role_sup: HashMap::new(),
        queue: VecDeque::new(),
    };
    for ax in tbox.axioms() {
        let key = match ax {
            Axiom::Gci(l, r) | Axiom::Equivalence(l, r) => Key::Gci(s.id_of(l), s.id_of(r)),
            Axiom::RoleInclusion(a, b) => Key::Role(s.role_id(a), s.role_id(b)),
        };
        s.vertex(key)?;
    }
    match s.policy {
        ContextPolicy::AllSubconcepts => {
            for c in 0..s.u.concepts.len() as u32 {
                s.activate(c)?;
            }
        }
        ContextPolicy::GoalDirected => {
            if let Some((l, _)) = goal_key {
                s.activate(l)?;
            }
        }
    }
    while let Some(v) = s.queue.pop_front() {
        s.process(v, true)?;
    }
    Ok(s.ds)
}

fn close_under_role_inclusions(u: &mut Universe, ris: &[(u32, u32)]) -> Result<(), CapacityError> {
    if ris.is_empty() {
        return Ok(());
    }
    let mut sup: HashMap<u32, HashSet<u32>> = HashMap::new();
    for &(a, b) in ris {
        sup.entry(a).or_default().insert(b);
    }
    // transitive closure
    loop {
        let mut changed = false;
        let snapshot: Vec<(u32, Vec<u32>)> = sup.iter().map(|(k, v)| (*k, v.iter().copied().collect())).collect();
        for (a, bs) in snapshot {
            for b in bs {
                if let Some(cs) = sup.get(&b).cloned() {
                    let entry = sup.get_mut(&a).unwrap();
                    for c in cs {
                        changed |= entry.insert(c);
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    let mut i = 0;
    while i < u.concepts.len() {
        if let Shape::Some(r, f) = u.shape[i] {
            if let Some(ss) = sup.get(&r) {
                let filler = u.concept(f).clone();
                let mut ss: Vec<u32> = ss.iter().copied().collect();
                ss.sort_unstable();
                for s in ss {
                    let role = u.roles[s as usize].clone();
                    u.add(&Concept::Some(role, Box::new(filler.clone())))?;
                }
            }
        }
        i += 1;
    }
    Ok(())
}

impl Saturator {
    fn id_of(&self, c: &Concept) -> u32 {
        self.u.concepts.get_index_of(c).expect("concept in universe") as u32
    }

    fn role_id(&self, r: &Symbol) -> u32 {
        self.u.roles.get_index_of(r).expect("role in universe") as u32
    }

    fn is_ctx(&self, c: u32) -> bool {
        self.contexts[c as usize]
    }

    fn label(&self, key: Key) -> Axiom {
        match key {
            Key::Gci(l, r) => Axiom::Gci(self.u.concept(l).clone(), self.u.concept(r).clone()),
            Key::Role(a, b) => Axiom::RoleInclusion(self.u.roles[a as usize].clone(), self.u.roles[b as usize].clone()),
        }
    }

    fn vertex(&mut self, key: Key) -> Result<VertexId, CapacityError> {
        if let Some(&v) = self.key_vertex.get(&key) {
            return Ok(v);
        }
        if self.keys.len() >= self.max_vertices {
            return Err(CapacityError::new("max_vertices", self.max_vertices));
        }
        let v = self.ds.graph.add_vertex(self.label(key));
        self.key_vertex.insert(key, v);
        self.keys.push(key);
        self.processed.push(false);
        self.queue.push_back(v);
        Ok(v)
    }

    fn conclude(&mut self, premises: &[VertexId], l: u32, r: u32, tag: &str) -> Result<(), CapacityError> {
        let key = Key::Gci(l, r);
        if premises.iter().any(|&p| self.keys[p.index()] == key) {
            return Ok(());
        }
        let v = self.vertex(key)?;
        self.ds.graph.add_edge(premises.iter().copied(), v, tag);
        Ok(())
    }

    fn activate(&mut self, c: u32) -> Result<(), CapacityError> {
        if self.contexts[c as usize] {
            return Ok(());
        }
        self.contexts[c as usize] = true;
        self.conclude(&[], c, c, R0)?;
        if let Some(t) = self.u.top {
            self.conclude(&[], c, t, R_TOP)?;
        }
        if self.policy == ContextPolicy::GoalDirected {
            // sentences with this left-hand side were matched before it was a context
            let earlier = self.by_lhs.get(&c).cloned().unwrap_or_default();
            for v in earlier {
                self.process(v, false)?;
            }
        }
        Ok(())
    }

    fn processed_gci(&self, l: u32, r: u32) -> Option<VertexId> {
        self.key_vertex.get(&Key::Gci(l, r)).copied().filter(|v| self.processed[v.index()])
    }

    fn process(&mut self, v: VertexId, first_time: bool) -> Result<(), CapacityError> {
        match self.keys[v.index()] {
            Key::Gci(c, d) => self.process_gci(v, c, d, first_time),
            Key::Role(a, b) => {
                if first_time {
                    self.processed[v.index()] = true;
                    self.role_sup.entry(a).or_default().push((b, v));
                }
                let partners = self.ex_by_role.get(&a).cloned().unwrap_or_default();
                for w in partners {
                    if let Key::Gci(x, e) = self.keys[w.index()] {
                        if let Shape::Some(_, f) = self.u.shape[e as usize] {
                            if self.is_ctx(x) {
                                if let Some(&t) = self.u.exists.get(&(b, f)) {
                                    self.conclude(&[w, v], x, t, R_H)?;
                                }
                            }
                        }
                    }
                }
                Ok(())
            }
        }
    }

    fn process_gci(&mut self, v: VertexId, c: u32, d: u32, first_time: bool) -> Result<(), CapacityError> {
        if first_time {
            self.processed[v.index()] = true;
            self.by_lhs.entry(c).or_default().push(v);
            self.by_rhs.entry(d).or_default().push(v);
            if let Shape::Some(r, f) = self.u.shape[d as usize] {
                self.ex_by_filler.entry(f).or_default().push(v);
                self.ex_by_role.entry(r).or_default().push(v);
            }
        }
        let ctx = self.is_ctx(c);
        if ctx {
            if let Shape::Some(_, f) = self.u.shape[d as usize] {
                if self.policy == ContextPolicy::GoalDirected {
                    self.activate(f)?;
                }
            }
            // R⊓-
            if let Shape::And(d1, d2) = self.u.shape[d as usize] {
                self.conclude(&[v], c, d1, R_AND1)?;
                self.conclude(&[v], c, d2, R_AND2)?;
            }
            // R⊓+
            let partners = self.u.conj_partners[d as usize].clone();
            for (e, conj) in partners {
                if let Some(w) = self.processed_gci(c, e) {
                    self.conclude(&[v, w], c, conj, R_AND_PLUS)?;
                }
            }
            // R⊑ and R∃ with v as first premise
            let next = self.by_lhs.get(&d).cloned().unwrap_or_default();
            for w in &next {
                let Key::Gci(_, e) = self.keys[w.index()] else { continue };
                self.conclude(&[v, *w], c, e, R_SUB)?;
            }
            if let Shape::Some(r, f) = self.u.shape[d as usize] {
                let inner = self.by_lhs.get(&f).cloned().unwrap_or_default();
                for w in inner {
                    let Key::Gci(_, e) = self.keys[w.index()] else { continue };
                    if let Some(&t) = self.u.exists.get(&(r, e)) {
                        self.conclude(&[v, w], c, t, R_EXISTS)?;
                    }
                }
                let sups = self.role_sup.get(&r).cloned().unwrap_or_default();
                for (s, rv) in sups {
                    if let Some(&t) = self.u.exists.get(&(s, f)) {
                        self.conclude(&[v, rv], c, t, R_H)?;
                    }
                }
            }
        }
        if !first_time {
            return Ok(());
        }
        // v as second premise `D ⊑ E` with D = c, E = d
        let before = self.by_rhs.get(&c).cloned().unwrap_or_default();
        for w in before {
            let Key::Gci(x, _) = self.keys[w.index()] else { continue };
            if self.is_ctx(x) {
                self.conclude(&[w, v], x, d, R_SUB)?;
            }
        }
        let outer = self.ex_by_filler.get(&c).cloned().unwrap_or_default();
        for w in outer {
            let Key::Gci(x, ex) = self.keys[w.index()] else { continue };
            let Shape::Some(r, _) = self.u.shape[ex as usize] else { continue };
            if self.is_ctx(x) {
                if let Some(&t) = self.u.exists.get(&(r, d)) {
                    self.conclude(&[w, v], x, t, R_EXISTS)?;
                }
            }
        }
        Ok(())
    }
}

/// Whether `tbox ⊨ eta`, decided by goal-directed saturation.
pub fn entails(tbox: &TBox, eta: &Axiom) -> Result<bool, CapacityError> {
    if tbox.contains(eta) {
        return Ok(true);
    }
    match eta {
        Axiom::RoleInclusion(r, s) => Ok(role_subsumed(tbox, r, s)),
        Axiom::Equivalence(l, rr) => Ok(entails(tbox, &Axiom::Gci(l.clone(), rr.clone()))?
            && entails(tbox, &Axiom::Gci(rr.clone(), l.clone()))?),
        Axiom::Gci(..) => {
            let ds = saturate_with(tbox, eta, &SaturationConfig::goal_directed())?;
            Ok(ds.graph.vertex_of(eta).is_some())
        }
    }
}

fn role_subsumed(tbox: &TBox, r: &Symbol, s: &Symbol) -> bool {
    let mut seen: HashSet<&Symbol> = HashSet::from([r]);
    let mut stack = vec![r];
    while let Some(x) = stack.pop() {
        if x == s {
            return true;
        }
        for ax in tbox.axioms() {
            if let Axiom::RoleInclusion(a, b) = ax {
                if a == x && seen.insert(b) {
                    stack.push(b);
                }
            }
        }
    }
    false
}
