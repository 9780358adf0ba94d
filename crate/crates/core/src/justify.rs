//! Subset-minimal entailing subsets of a theory.

use std::collections::{BTreeSet, HashSet};

use thiserror::Error;

use crate::el::{entails, Axiom};
use crate::error::CapacityError;
use crate::hypergraph::Sentence;

/// Decides whether a set of sentences entails a sentence.
pub trait EntailmentOracle<L> {
    fn entails(&self, theory: &[L], goal: &L) -> Result<bool, CapacityError>;
}

impl<L, F> EntailmentOracle<L> for F
where
    F: Fn(&[L], &L) -> Result<bool, CapacityError>,
{
    fn entails(&self, theory: &[L], goal: &L) -> Result<bool, CapacityError> {
        self(theory, goal)
    }
}

/// Entailment in EL(H) by saturation.
#[derive(Clone, Copy, Debug, Default)]
pub struct ElEntailment;

impl EntailmentOracle<Axiom> for ElEntailment {
    fn entails(&self, theory: &[Axiom], goal: &Axiom) -> Result<bool, CapacityError> {
        entails(&theory.iter().cloned().collect(), goal)
    }
}

/// A subset-minimal subset of a theory entailing `goal`, in theory order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Justification<L> {
    pub axioms: Vec<L>,
    pub goal: L,
}

#[derive(Debug, Error)]
pub enum JustifyError<L> {
    #[error("the theory does not entail the goal")]
    NotEntailed,
    #[error(transparent)]
    Capacity(#[from] CapacityError),
    #[error("justification search stopped after {limit} nodes with {} results", partial.len())]
    Incomplete { limit: usize, partial: Vec<Justification<L>> },
}

/// Deletion sweep in ascending index order.
pub fn one_justification<L: Sentence>(
    theory: &[L],
    goal: &L,
    oracle: &dyn EntailmentOracle<L>,
) -> Result<Justification<L>, JustifyError<L>> {
    let idx = sweep(theory, &(0..theory.len()).collect::<Vec<_>>(), goal, oracle)?.ok_or(JustifyError::NotEntailed)?;
    Ok(Justification { axioms: idx.iter().map(|&i| theory[i].clone()).collect(), goal: goal.clone() })
}

fn sweep<L: Sentence>(
    theory: &[L],
    keep: &[usize],
    goal: &L,
    oracle: &dyn EntailmentOracle<L>,
) -> Result<Option<Vec<usize>>, CapacityError> {
    let pick = |idx: &[usize]| idx.iter().map(|&i| theory[i].clone()).collect::<Vec<_>>();
    if !oracle.entails(&pick(keep), goal)? {
        return Ok(None);
    }
    let mut cur = keep.to_vec();
    let mut i = 0;
    while i < cur.len() {
        let mut without = cur.clone();
        without.remove(i);
        if oracle.entails(&pick(&without), goal)? {
            cur = without;
        } else {
            i += 1;
        }
    }
    Ok(Some(cur))
}

/// All justifications by a hitting-set tree; `cap` bounds the number of tree nodes.
pub fn all_justifications<L: Sentence>(
    theory: &[L],
    goal: &L,
    oracle: &dyn EntailmentOracle<L>,
    cap: usize,
) -> Result<Vec<Justification<L>>, JustifyError<L>> {
    let mut found: Vec<BTreeSet<usize>> = Vec::new();
    let mut seen_paths: HashSet<BTreeSet<usize>> = HashSet::new();
    let mut queue: Vec<BTreeSet<usize>> = vec![BTreeSet::new()];
    let mut nodes = 0;
    let finish = |found: &[BTreeSet<usize>]| -> Vec<Justification<L>> {
        found
            .iter()
            .map(|j| Justification { axioms: j.iter().map(|&i| theory[i].clone()).collect(), goal: goal.clone() })
            .collect()
    };
    while let Some(path) = queue.pop() {
        if !seen_paths.insert(path.clone()) {
            continue;
        }
        nodes += 1;
        if nodes > cap {
            return Err(JustifyError::Incomplete { limit: cap, partial: finish(&found) });
        }
        let j = match found.iter().find(|j| j.is_disjoint(&path)) {
            Some(j) => j.clone(),
            None => {
                let keep: Vec<usize> = (0..theory.len()).filter(|i| !path.contains(i)).collect();
                match sweep(theory, &keep, goal, oracle)? {
                    Some(j) => {
                        let j: BTreeSet<usize> = j.into_iter().collect();
                        found.push(j.clone());
                        j
                    }
                    None if path.is_empty() => return Err(JustifyError::NotEntailed),
                    None => continue,
                }
            }
        };
        for &a in j.iter().rev() {
            let mut child = path.clone();
            child.insert(a);
            queue.push(child);
        }
    }
    Ok(finish(&found))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> Vec<Axiom> {
        vec![Axiom::atomic("A", "B"), Axiom::atomic("B", "C"), Axiom::atomic("A", "C")]
    }

    #[test]
    fn sweep_drops_in_index_order() {
        let j = one_justification(&t(), &Axiom::atomic("A", "C"), &ElEntailment).unwrap();
        assert_eq!(j.axioms, vec![Axiom::atomic("A", "C")]);
    }

    #[test]
    fn two_justifications() {
        let js = all_justifications(&t(), &Axiom::atomic("A", "C"), &ElEntailment, 100).unwrap();
        assert_eq!(js.len(), 2);
    }

    #[test]
    fn not_entailed() {
        assert!(matches!(
            one_justification(&t(), &Axiom::atomic("C", "A"), &ElEntailment),
            Err(JustifyError::NotEntailed)
        ));
        assert!(matches!(
            all_justifications(&t(), &Axiom::atomic("C", "A"), &ElEntailment, 10),
            Err(JustifyError::NotEntailed)
        ));
    }

    #[test]
    fn cap_reports_partial() {
        match all_justifications(&t(), &Axiom::atomic("A", "C"), &ElEntailment, 1) {
            Err(JustifyError::Incomplete { partial, .. }) => assert_eq!(partial.len(), 1),
            other => panic!("{other:?}"),
        }
    }
}
