use std::collections::{HashMap, HashSet};

use super::rules::CrRuleChecker;
use super::saturate::{appearing, EliCaps, CR1, CR2};
use super::syntax::{EliAxiom, EliRhs, NameConjunction};
use crate::el::Symbol;
use crate::error::CapacityError;

/// Edge and label membership for the CR1–CR4 saturation, computed from the
/// set of derivable sentences alone, without building the hypergraph.
#[derive(Clone, Debug)]
pub struct EliOracle {
    derived: HashSet<EliAxiom>,
    appears: HashSet<NameConjunction>,
}

impl EliOracle {
    pub fn new(tbox: &[EliAxiom], eta: &EliAxiom, caps: EliCaps) -> Result<Self, CapacityError> {
        let mut derived: HashSet<EliAxiom> = tbox.iter().cloned().collect();
        loop {
            let mut appears = HashSet::new();
            appears.insert(eta.lhs.clone());
            for ax in &derived {
                appearing(ax, &mut |k| {
                    appears.insert(k);
                });
            }
            let mut new: Vec<EliAxiom> = Vec::new();
            for k in &appears {
                for a in k.names() {
                    new.push(EliAxiom::name(k.clone(), a.clone()));
                }
            }
            let mut names: HashMap<&NameConjunction, HashSet<&Symbol>> = HashMap::new();
            for ax in &derived {
                if let EliRhs::Name(a) = &ax.rhs {
                    names.entry(&ax.lhs).or_default().insert(a);
                }
            }
            for m in &appears {
                let have = names.get(m);
                for ax in &derived {
                    if ax.lhs.names().all(|a| have.is_some_and(|h| h.contains(a))) {
                        new.push(EliAxiom { lhs: m.clone(), rhs: ax.rhs.clone() });
                    }
                }
            }
            for p in &derived {
                let EliRhs::Exists(r, l) = &p.rhs else { continue };
                for q in &derived {
                    let EliRhs::Forall(s, a) = &q.rhs else { continue };
                    if q.lhs == *l && *s == r.inv() {
                        new.push(EliAxiom::name(p.lhs.clone(), a.clone()));
                    }
                    if q.lhs == p.lhs && s == r {
                        new.push(EliAxiom::exists(p.lhs.clone(), r.clone(), l.with(a.clone())));
                    }
                }
            }
            let before = derived.len();
            for ax in new {
                if let EliRhs::Exists(_, m) = &ax.rhs {
                    if m.len() > caps.max_width {
                        return Err(CapacityError::new("eli_width", caps.max_width));
                    }
                }
                derived.insert(ax);
            }
            if derived.len() > caps.max_vertices {
                return Err(CapacityError::new("eli_vertices", caps.max_vertices));
            }
            if derived.len() == before {
                return Ok(EliOracle { derived, appears });
            }
        }
    }

    /// Whether some vertex carries `label`.
    pub fn has_label(&self, label: &EliAxiom) -> bool {
        self.derived.contains(label)
    }

    /// Whether `(premises, conclusion)` is an edge of the saturation.
    pub fn is_edge(&self, premises: &[&EliAxiom], conclusion: &EliAxiom) -> bool {
        if !self.has_label(conclusion) || !premises.iter().all(|p| self.has_label(p)) {
            return false;
        }
        match CrRuleChecker::rule_of(premises, conclusion) {
            Some(CR1) | Some(CR2) => self.appears.contains(&conclusion.lhs),
            Some(_) => true,
            None => false,
        }
    }

    pub fn label_count(&self) -> usize {
        self.derived.len()
    }

    /// Derivable sentences in no particular order.
    pub fn labels(&self) -> impl Iterator<Item = &EliAxiom> + '_ {
        self.derived.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eli::{saturate_eli, Role};

    #[test]
    fn agrees_with_materialization() {
        let r = Role::new("r");
        let n = |s: &[&str]| NameConjunction::of(s.iter().copied());
        let t = vec![
            EliAxiom::exists(n(&["A"]), r.clone(), n(&["B"])),
            EliAxiom::forall(n(&["A"]), r.clone(), "X"),
            EliAxiom::forall(n(&["X"]), r.inv(), "Y"),
            EliAxiom::name(n(&["Y", "A"]), "Z"),
        ];
        let goal = EliAxiom::name(n(&["A"]), "Z");
        let ds = saturate_eli(&t, &goal, EliCaps::default()).unwrap();
        let o = EliOracle::new(&t, &goal, EliCaps::default()).unwrap();
        assert_eq!(o.label_count(), ds.graph.vertex_count());
        assert!(o.has_label(&goal));
        for e in ds.graph.edges() {
            let ps: Vec<&EliAxiom> = e.premises.iter().map(|&p| ds.graph.label(p)).collect();
            assert!(o.is_edge(&ps, ds.graph.label(e.conclusion)));
        }
        let a = ds.graph.label(ds.graph.vertex_of(&t[0]).unwrap());
        assert!(!o.is_edge(&[a, a, a], &goal));
    }
}
