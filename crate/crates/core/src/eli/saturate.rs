use std::collections::{HashMap, HashSet, VecDeque};

use indexmap::IndexSet;

use super::syntax::{EliAxiom, EliRhs, NameConjunction, Role};
use crate::el::Symbol;
use crate::error::CapacityError;
use crate::hypergraph::{DerivationStructure, VertexId};

pub const CR1: &str = "CR1";
pub const CR2: &str = "CR2";
pub const CR3: &str = "CR3";
pub const CR4: &str = "CR4";

/// Bounds on the saturation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EliCaps {
    /// Largest conjunction a rule may create.
    pub max_width: usize,
    pub max_vertices: usize,
}

impl Default for EliCaps {
    fn default() -> Self {
        EliCaps { max_width: 8, max_vertices: 200_000 }
    }
}

/// Conjunctions treated as contexts: left-hand sides, existential fillers,
/// single concept names, and the goal's left-hand side.
pub(crate) fn appearing(ax: &EliAxiom, out: &mut impl FnMut(NameConjunction)) {
    out(ax.lhs.clone());
    for n in ax.lhs.names() {
        out(NameConjunction::of([n.clone()]));
    }
    match &ax.rhs {
        EliRhs::Name(a) | EliRhs::Forall(_, a) => out(NameConjunction::of([a.clone()])),
        EliRhs::Exists(_, m) => {
            out(m.clone());
            for n in m.names() {
                out(NameConjunction::of([n.clone()]));
            }
        }
    }
}

/// Saturates `tbox` under CR1–CR4.
///
/// One vertex per sentence; conjunctions compare as sets. CR1 instances are premise-free edges.
pub fn saturate_eli(
    tbox: &[EliAxiom],
    eta: &EliAxiom,
    caps: EliCaps,
) -> Result<DerivationStructure<EliAxiom>, CapacityError> {
    let mut s = Saturator {
        ds: DerivationStructure::new(tbox.iter().cloned()),
        caps,
        queue: VecDeque::new(),
        contexts: IndexSet::new(),
        ctx_with_name: HashMap::new(),
        names_of: HashMap::new(),
        by_lhs: HashMap::new(),
        lhs_by_name: HashMap::new(),
        top_lhs: Vec::new(),
        ex_by_filler: HashMap::new(),
        ex_by_lhs: HashMap::new(),
        fa_by_lhs: HashMap::new(),
        processed: HashSet::new(),
    };
    for ax in tbox {
        s.vertex(ax.clone())?;
    }
    s.context(eta.lhs.clone())?;
    while let Some(v) = s.queue.pop_front() {
        s.process(v)?;
    }
    Ok(s.ds)
}

struct Saturator {
    ds: DerivationStructure<EliAxiom>,
    caps: EliCaps,
    queue: VecDeque<VertexId>,
    contexts: IndexSet<NameConjunction>,
    /// Contexts `M` with a processed `M ⊑ A`, by `A`.
    ctx_with_name: HashMap<Symbol, Vec<NameConjunction>>,
    names_of: HashMap<NameConjunction, (HashSet<Symbol>, Vec<VertexId>)>,
    by_lhs: HashMap<NameConjunction, Vec<VertexId>>,
    /// Distinct non-empty left-hand sides of processed sentences, by member name.
    lhs_by_name: HashMap<Symbol, Vec<NameConjunction>>,
    top_lhs: Vec<VertexId>,
    ex_by_filler: HashMap<(Role, NameConjunction), Vec<VertexId>>,
    ex_by_lhs: HashMap<(NameConjunction, Role), Vec<VertexId>>,
    fa_by_lhs: HashMap<(NameConjunction, Role), Vec<VertexId>>,
    processed: HashSet<VertexId>,
}

impl Saturator {
    fn vertex(&mut self, label: EliAxiom) -> Result<VertexId, CapacityError> {
        if let Some(v) = self.ds.graph.vertex_of(&label) {
            return Ok(v);
        }
        if self.ds.graph.vertex_count() >= self.caps.max_vertices {
            return Err(CapacityError::new("eli_vertices", self.caps.max_vertices));
        }
        if label.lhs.len() > self.caps.max_width {
            return Err(CapacityError::new("eli_width", self.caps.max_width));
        }
        if let EliRhs::Exists(_, m) = &label.rhs {
            if m.len() > self.caps.max_width {
                return Err(CapacityError::new("eli_width", self.caps.max_width));
            }
        }
        let (v, _) = self.ds.graph.intern(label);
        self.queue.push_back(v);
        Ok(v)
    }

    fn edge(&mut self, premises: Vec<VertexId>, conclusion: EliAxiom, tag: &str) -> Result<(), CapacityError> {
        let c = self.vertex(conclusion)?;
        if premises.contains(&c) {
            return Ok(());
        }
        self.ds.graph.add_edge(premises, c, tag);
        Ok(())
    }

    fn context(&mut self, k: NameConjunction) -> Result<(), CapacityError> {
        if self.contexts.contains(&k) {
            return Ok(());
        }
        self.contexts.insert(k.clone());
        for a in k.0.clone() {
            self.edge(Vec::new(), EliAxiom::name(k.clone(), a), CR1)?;
        }
        for t in self.top_lhs.clone() {
            let rhs = self.ds.graph.label(t).rhs.clone();
            self.edge(vec![t], EliAxiom { lhs: k.clone(), rhs }, CR2)?;
        }
        Ok(())
    }

    fn process(&mut self, v: VertexId) -> Result<(), CapacityError> {
        if !self.processed.insert(v) {
            return Ok(());
        }
        let ax = self.ds.graph.label(v).clone();
        let mut found = Vec::new();
        appearing(&ax, &mut |k| found.push(k));
        for k in found {
            self.context(k)?;
        }
        let lhs = ax.lhs.clone();

        // index as the K ⊑ C premise of CR2
        let first_with_lhs = !self.by_lhs.contains_key(&lhs);
        self.by_lhs.entry(lhs.clone()).or_default().push(v);
        if lhs.is_empty() {
            self.top_lhs.push(v);
            for m in self.contexts.clone() {
                self.edge(vec![v], EliAxiom { lhs: m, rhs: ax.rhs.clone() }, CR2)?;
            }
        } else {
            if first_with_lhs {
                for a in lhs.names() {
                    self.lhs_by_name.entry(a.clone()).or_default().push(lhs.clone());
                }
            }
            let pivot = lhs.names().next().unwrap().clone();
            for m in self.ctx_with_name.get(&pivot).cloned().unwrap_or_default() {
                if let Some(prem) = self.covering(&m, &lhs) {
                    let mut ps = prem;
                    ps.push(v);
                    self.edge(ps, EliAxiom { lhs: m, rhs: ax.rhs.clone() }, CR2)?;
                }
            }
        }

        match &ax.rhs {
            EliRhs::Name(a) => {
                let entry = self.names_of.entry(lhs.clone()).or_default();
                if entry.0.insert(a.clone()) {
                    entry.1.push(v);
                    self.ctx_with_name.entry(a.clone()).or_default().push(lhs.clone());
                }
                // M ⊑ A as a covering premise of CR2
                for k in self.lhs_by_name.get(a).cloned().unwrap_or_default() {
                    let Some(prem) = self.covering(&lhs, &k) else { continue };
                    for kc in self.by_lhs.get(&k).cloned().unwrap_or_default() {
                        let mut ps = prem.clone();
                        ps.push(kc);
                        let rhs = self.ds.graph.label(kc).rhs.clone();
                        self.edge(ps, EliAxiom { lhs: lhs.clone(), rhs }, CR2)?;
                    }
                }
            }
            EliRhs::Exists(r, l) => {
                self.ex_by_filler.entry((r.clone(), l.clone())).or_default().push(v);
                self.ex_by_lhs.entry((lhs.clone(), r.clone())).or_default().push(v);
                // CR3 with L ⊑ ∀r⁻.A
                for q in self.fa_by_lhs.get(&(l.clone(), r.inv())).cloned().unwrap_or_default() {
                    let EliRhs::Forall(_, a) = &self.ds.graph.label(q).rhs else { unreachable!() };
                    let c = EliAxiom::name(lhs.clone(), a.clone());
                    self.edge(vec![v, q], c, CR3)?;
                }
                // CR4 with L ⊑ ∀r.A
                for q in self.fa_by_lhs.get(&(lhs.clone(), r.clone())).cloned().unwrap_or_default() {
                    let EliRhs::Forall(_, a) = &self.ds.graph.label(q).rhs else { unreachable!() };
                    let c = EliAxiom::exists(lhs.clone(), r.clone(), l.with(a.clone()));
                    self.edge(vec![v, q], c, CR4)?;
                }
            }
            EliRhs::Forall(s, a) => {
                self.fa_by_lhs.entry((lhs.clone(), s.clone())).or_default().push(v);
                for p in self.ex_by_filler.get(&(s.inv(), lhs.clone())).cloned().unwrap_or_default() {
                    let m = self.ds.graph.label(p).lhs.clone();
                    self.edge(vec![p, v], EliAxiom::name(m, a.clone()), CR3)?;
                }
                for p in self.ex_by_lhs.get(&(lhs.clone(), s.clone())).cloned().unwrap_or_default() {
                    let EliRhs::Exists(_, m) = &self.ds.graph.label(p).rhs else { unreachable!() };
                    let c = EliAxiom::exists(lhs.clone(), s.clone(), m.with(a.clone()));
                    self.edge(vec![p, v], c, CR4)?;
                }
            }
        }
        Ok(())
    }

    /// Processed vertices `M ⊑ A` for every `A ∈ K`, if all exist.
    fn covering(&self, m: &NameConjunction, k: &NameConjunction) -> Option<Vec<VertexId>> {
        let (names, _) = self.names_of.get(m)?;
        if !k.names().all(|a| names.contains(a)) {
            return None;
        }
        Some(
            k.names()
                .map(|a| self.ds.graph.vertex_of(&EliAxiom::name(m.clone(), a.clone())).unwrap())
                .collect(),
        )
    }
}
