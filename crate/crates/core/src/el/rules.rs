use super::syntax::{Axiom, Concept};
use crate::hypergraph::RuleChecker;

/// Accepts exactly the syntactic instances of the ELK rules and the role-inclusion lifting.
#[derive(Clone, Copy, Debug, Default)]
pub struct ElkRuleChecker;

impl ElkRuleChecker {
    /// The name of a rule matching the step, if any.
    pub fn rule_of(premises: &[&Axiom], conclusion: &Axiom) -> Option<&'static str> {
        let Axiom::Gci(c, d) = conclusion else { return None };
        match premises {
            [] => {
                if c == d {
                    Some(super::saturate::R0)
                } else if *d == Concept::Top {
                    Some(super::saturate::R_TOP)
                } else {
                    None
                }
            }
            [p] => unary(p, c, d).or_else(|| binary(p, p, c, d)),
            [p, q] => binary(p, q, c, d).or_else(|| binary(q, p, c, d)),
            _ => None,
        }
    }
}

fn unary(p: &Axiom, c: &Concept, d: &Concept) -> Option<&'static str> {
    let Axiom::Gci(pc, pd) = p else { return None };
    if pc != c {
        return None;
    }
    if let Concept::And(x, y) = pd {
        if **x == *d {
            return Some(super::saturate::R_AND1);
        }
        if **y == *d {
            return Some(super::saturate::R_AND2);
        }
    }
    None
}

fn binary(p: &Axiom, q: &Axiom, c: &Concept, d: &Concept) -> Option<&'static str> {
    use super::saturate::{R_AND_PLUS, R_EXISTS, R_H, R_SUB};
    match (p, q) {
        (Axiom::Gci(pc, pd), Axiom::Gci(qc, qd)) => {
            // R⊑: C⊑D, D⊑E ⊢ C⊑E
            if pc == c && pd == qc && qd == d {
                return Some(R_SUB);
            }
            // R⊓+: C⊑D, C⊑E ⊢ C⊑D⊓E
            if pc == c && qc == c {
                if let Concept::And(x, y) = d {
                    if **x == *pd && **y == *qd {
                        return Some(R_AND_PLUS);
                    }
                }
            }
            // R∃: C⊑∃r.D, D⊑E ⊢ C⊑∃r.E
            if pc == c {
                if let (Concept::Some(r, f), Concept::Some(r2, g)) = (pd, d) {
                    if r == r2 && **f == *qc && **g == *qd {
                        return Some(R_EXISTS);
                    }
                }
            }
            None
        }
        (Axiom::Gci(pc, pd), Axiom::RoleInclusion(r, s)) => {
            if pc != c {
                return None;
            }
            match (pd, d) {
                (Concept::Some(r1, f), Concept::Some(s1, g)) if r1 == r && s1 == s && f == g => Some(R_H),
                _ => None,
            }
        }
        _ => None,
    }
}

impl RuleChecker<Axiom> for ElkRuleChecker {
    fn name(&self) -> &str {
        "elk"
    }

    fn check(&self, premises: &[&Axiom], conclusion: &Axiom) -> bool {
        Self::rule_of(premises, conclusion).is_some()
    }
}
