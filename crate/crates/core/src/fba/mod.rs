//! Proofs built from a sequence of forgetting steps linked by justifications.

mod external;
mod forget;
mod order;

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

pub use external::{validate_step, ExternalForgetter};
pub use forget::forget_symbol;
pub use order::forgetting_order;

use crate::el::{entails, Axiom, Signed, TBox};
use crate::error::CapacityError;
use crate::hypergraph::{DerivationStructure, Proof, VertexId};
use crate::justify::{one_justification, ElEntailment, JustifyError};

/// Tag of the final step when no symbol could be forgotten.
pub const JUSTIFICATION_TAG: &str = "justification";

/// Computes the result of forgetting one symbol, or `None` when it cannot.
pub trait Forgetter {
    fn forget(&self, tbox: &TBox, x: &Signed) -> Option<TBox>;
}

/// The built-in forgetter, see [`forget_symbol`].
#[derive(Clone, Copy, Debug, Default)]
pub struct InternalForgetter;

impl Forgetter for InternalForgetter {
    fn forget(&self, tbox: &TBox, x: &Signed) -> Option<TBox> {
        forget_symbol(tbox, x)
    }
}

pub struct FbaOptions<'a> {
    /// Symbols to try before the default priority.
    pub order: Vec<Signed>,
    /// Justify a sentence in the latest TBox that does not contain it.
    pub skip_trivial: bool,
    /// Take premises from one TBox further back when that justification is not larger.
    pub earlier_tbox: bool,
    pub forgetter: &'a dyn Forgetter,
}

impl Default for FbaOptions<'_> {
    fn default() -> Self {
        FbaOptions { order: Vec::new(), skip_trivial: true, earlier_tbox: true, forgetter: &InternalForgetter }
    }
}

/// `tboxes[0]` is a justification of the goal; `steps[i]` is the symbol forgotten
/// between `tboxes[i]` and `tboxes[i + 1]`, or `None` for the closing step to `{goal}`.
/// Each later TBox is a justification of the goal within the forgetting result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FbaTrace {
    pub tboxes: Vec<TBox>,
    pub steps: Vec<Option<Signed>>,
    pub goal: Axiom,
}

impl FbaTrace {
    pub fn step_tag(&self, i: usize) -> String {
        match &self.steps[i] {
            Some(s) => s.name.to_string(),
            None => JUSTIFICATION_TAG.to_string(),
        }
    }
}

#[derive(Debug, Error)]
pub enum FbaError {
    #[error("the theory does not entail the goal")]
    NotEntailed,
    #[error(transparent)]
    Capacity(#[from] CapacityError),
}

impl From<JustifyError<Axiom>> for FbaError {
    fn from(e: JustifyError<Axiom>) -> Self {
        match e {
            JustifyError::NotEntailed | JustifyError::Incomplete { .. } => FbaError::NotEntailed,
            JustifyError::Capacity(c) => FbaError::Capacity(c),
        }
    }
}

fn justify(tbox: &TBox, goal: &Axiom) -> Result<TBox, FbaError> {
    Ok(one_justification(&tbox.to_vec(), goal, &ElEntailment)?.axioms.into_iter().collect())
}

/// Forgets every symbol outside the goal's signature, one at a time.
pub fn fba_trace(tbox: &TBox, eta: &Axiom, opts: &FbaOptions<'_>) -> Result<FbaTrace, FbaError> {
    let protected: BTreeSet<Signed> = eta.signature();
    let mut tboxes = vec![justify(tbox, eta)?];
    let mut steps = Vec::new();
    loop {
        let cur = tboxes.last().unwrap();
        if cur.signature().is_subset(&protected) {
            break;
        }
        let mut candidates: Vec<Signed> = opts
            .order
            .iter()
            .filter(|s| cur.signature().contains(s) && !protected.contains(s))
            .cloned()
            .collect();
        for s in forgetting_order(cur, &protected) {
            if !candidates.contains(&s) {
                candidates.push(s);
            }
        }
        let mut next = None;
        for x in candidates {
            let Some(after) = opts.forgetter.forget(cur, &x) else { continue };
            if after.signature().contains(&x) || !entails(&after, eta)? {
                continue;
            }
            next = Some((justify(&after, eta)?, x));
            break;
        }
        match next {
            Some((t, x)) => {
                tboxes.push(t);
                steps.push(Some(x));
            }
            None => break,
        }
    }
    let closing: TBox = [eta.clone()].into_iter().collect();
    if *tboxes.last().unwrap() != closing {
        tboxes.push(closing);
        steps.push(None);
    }
    Ok(FbaTrace { tboxes, steps, goal: eta.clone() })
}

/// Builds the proof whose edges are justifications between consecutive TBoxes.
pub fn reconstruct(trace: &FbaTrace, original: &TBox, opts: &FbaOptions<'_>) -> Result<Proof<Axiom>, FbaError> {
    let mut r = Rebuild {
        trace,
        opts,
        ds: DerivationStructure::new(original.axioms().cloned()),
        leaves: HashMap::new(),
        derived: HashMap::new(),
    };
    let sink = r.prove(&trace.goal, trace.tboxes.len() - 1)?;
    Ok(Proof { structure: r.ds, sink })
}

/// Runs [`fba_trace`] then [`reconstruct`].
pub fn fba_proof(tbox: &TBox, eta: &Axiom, opts: &FbaOptions<'_>) -> Result<(Proof<Axiom>, FbaTrace), FbaError> {
    let trace = fba_trace(tbox, eta, opts)?;
    let proof = reconstruct(&trace, tbox, opts)?;
    Ok((proof, trace))
}

struct Rebuild<'a, 'o> {
    trace: &'a FbaTrace,
    opts: &'a FbaOptions<'o>,
    ds: DerivationStructure<Axiom>,
    leaves: HashMap<Axiom, VertexId>,
    derived: HashMap<(Axiom, usize), VertexId>,
}

impl Rebuild<'_, '_> {
    /// A vertex for `alpha`, which belongs to `tboxes[level]`.
    fn prove(&mut self, alpha: &Axiom, level: usize) -> Result<VertexId, FbaError> {
        let t = &self.trace.tboxes;
        let j = if self.opts.skip_trivial {
            (0..level).rev().find(|&j| !t[j].contains(alpha))
        } else {
            level.checked_sub(1)
        };
        let Some(j) = j else {
            if let Some(&v) = self.leaves.get(alpha) {
                return Ok(v);
            }
            let v = self.ds.graph.add_vertex(alpha.clone());
            self.leaves.insert(alpha.clone(), v);
            return Ok(v);
        };
        if let Some(&v) = self.derived.get(&(alpha.clone(), j)) {
            return Ok(v);
        }
        let mut just = justify(&t[j], alpha)?;
        let mut src = j;
        if self.opts.earlier_tbox && j >= 1 && !t[j - 1].contains(alpha) {
            let earlier = justify(&t[j - 1], alpha)?;
            if earlier.len() <= just.len() {
                just = earlier;
                src = j - 1;
            }
        }
        let mut premises = Vec::with_capacity(just.len());
        for beta in &just {
            premises.push(self.prove(beta, src)?);
        }
        let v = self.ds.graph.add_vertex(alpha.clone());
        self.ds.graph.add_edge(premises, v, self.trace.step_tag(j));
        self.derived.insert((alpha.clone(), j), v);
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::el::{Concept, SemanticChecker};
    use crate::hypergraph::check_proof;

    fn t0() -> TBox {
        [
            Axiom::gci(Concept::name("C"), Concept::some("r", Concept::name("D"))),
            Axiom::atomic("A", "C"),
            Axiom::gci(Concept::some("r", Concept::Top), Concept::name("B")),
        ]
        .into_iter()
        .collect()
    }

    fn run(order: &[Signed], earlier: bool) -> Proof<Axiom> {
        let opts = FbaOptions { order: order.to_vec(), earlier_tbox: earlier, ..Default::default() };
        let goal = Axiom::atomic("A", "B");
        let (p, _) = fba_proof(&t0(), &goal, &opts).unwrap();
        check_proof(&p.structure, &goal, &SemanticChecker).unwrap();
        p
    }

    #[test]
    fn three_shapes() {
        let dcr = [Signed::concept("D"), Signed::concept("C"), Signed::role("r")];
        assert_eq!(run(&dcr, false).vertex_count(), 6);
        assert_eq!(run(&dcr, true).vertex_count(), 5);
        let p = run(&[Signed::role("r")], true);
        assert_eq!(p.vertex_count(), 5);
        assert!(p.graph().vertex_of(&Axiom::atomic("C", "B")).is_some());
    }

    #[test]
    fn not_entailed() {
        let r = fba_proof(&t0(), &Axiom::atomic("B", "A"), &FbaOptions::default());
        assert!(matches!(r, Err(FbaError::NotEntailed)));
    }
}
