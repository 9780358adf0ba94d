use std::collections::BTreeSet;

use super::syntax::{Axiom, Concept, Signed, Symbol, TBox};
use crate::hypergraph::{DerivationStructure, Proof};

/// A fresh concept name introduced as an abbreviation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Definition {
    pub name: Symbol,
    pub concept: Concept,
}

/// The definitions introduced by [`normalize`], in introduction order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NormalizationTrace {
    pub definitions: Vec<Definition>,
}

impl NormalizationTrace {
    pub fn is_empty(&self) -> bool {
        self.definitions.is_empty()
    }

    fn expand_concept(&self, c: &Concept) -> Concept {
        self.definitions.iter().rev().fold(c.clone(), |acc, d| acc.substitute(&d.name, &d.concept))
    }

    /// Replaces introduced names by their definitions.
    pub fn expand(&self, a: &Axiom) -> Axiom {
        match a {
            Axiom::Gci(l, r) => Axiom::Gci(self.expand_concept(l), self.expand_concept(r)),
            Axiom::Equivalence(l, r) => Axiom::Equivalence(self.expand_concept(l), self.expand_concept(r)),
            other => other.clone(),
        }
    }
}

/// Makes both sides of the goal concept names by defining fresh names `X ≡ C`.
///
/// Returns the extended TBox, the rewritten goal, and the trace of definitions.
pub fn normalize(tbox: &TBox, eta: &Axiom) -> (TBox, Axiom, NormalizationTrace) {
    let Axiom::Gci(lhs, rhs) = eta else {
        return (tbox.clone(), eta.clone(), NormalizationTrace::default());
    };
    let mut used: BTreeSet<Signed> = tbox.signature().clone();
    for s in eta.signature() {
        used.insert(s);
    }
    let mut out = tbox.clone();
    let mut trace = NormalizationTrace::default();
    let mut side = |c: &Concept| -> Concept {
        if c.is_name() {
            return c.clone();
        }
        let name = fresh(&used);
        used.insert(Signed::concept(name.clone()));
        out.insert(Axiom::Equivalence(Concept::Name(name.clone()), c.clone()));
        trace.definitions.push(Definition { name: name.clone(), concept: c.clone() });
        Concept::Name(name)
    };
    let l = side(lhs);
    let r = side(rhs);
    (out, Axiom::Gci(l, r), trace)
}

fn fresh(used: &BTreeSet<Signed>) -> Symbol {
    let taken = |s: &str| used.contains(&Signed::concept(s));
    if !taken("X") {
        return Symbol::new("X");
    }
    (1..).map(|i| format!("X{i}")).find(|s| !taken(s)).map(|s| Symbol::new(&s)).unwrap()
}

/// Rewrites a proof over a normalized TBox back into the original vocabulary.
///
/// Labels are expanded through the trace. Leaves stemming from definition axioms
/// become tautologies `C ⊑ C` and receive a premise-free `R0` edge.
pub fn fold(proof: &Proof<Axiom>, trace: &NormalizationTrace, original: &TBox) -> Proof<Axiom> {
    let g = proof.graph();
    let mut ds = DerivationStructure::new(original.axioms().cloned());
    for v in g.vertices() {
        ds.graph.add_vertex_with_provenance(trace.expand(g.label(v)), Some(v));
    }
    for e in g.edges() {
        ds.graph.add_edge(e.premises.iter().copied(), e.conclusion, e.tag.clone());
    }
    for v in ds.graph.vertices().collect::<Vec<_>>() {
        if ds.graph.incoming(v).is_empty() && !ds.is_theory(v) {
            if let Axiom::Gci(l, r) = ds.graph.label(v) {
                if l == r {
                    ds.graph.add_edge([], v, super::saturate::R0);
                }
            }
        }
    }
    Proof { structure: ds, sink: proof.sink }
}
