use super::saturate::{CR1, CR2, CR3, CR4};
use super::syntax::{EliAxiom, EliRhs};
use crate::hypergraph::RuleChecker;

/// Syntactic matching against the CR1–CR4 schemas.
///
/// The "appears in the saturated TBox" side conditions of CR1 and CR2 are not
/// checked; they need the whole saturation.
#[derive(Clone, Copy, Debug, Default)]
pub struct CrRuleChecker;

impl CrRuleChecker {
    pub fn rule_of(premises: &[&EliAxiom], conclusion: &EliAxiom) -> Option<&'static str> {
        if premises.contains(&conclusion) {
            return None;
        }
        if premises.is_empty() {
            return match &conclusion.rhs {
                EliRhs::Name(a) if conclusion.lhs.contains(a) => Some(CR1),
                _ => None,
            };
        }
        if let [p, q] = premises {
            if cr3(p, q, conclusion) || cr3(q, p, conclusion) {
                return Some(CR3);
            }
            if cr4(p, q, conclusion) || cr4(q, p, conclusion) {
                return Some(CR4);
            }
        }
        (0..premises.len()).any(|i| cr2(premises, i, conclusion)).then_some(CR2)
    }
}

fn cr2(premises: &[&EliAxiom], main: usize, c: &EliAxiom) -> bool {
    let k = premises[main];
    if k.rhs != c.rhs {
        return false;
    }
    let mut covered = 0;
    for (i, p) in premises.iter().enumerate() {
        if i == main {
            continue;
        }
        match &p.rhs {
            EliRhs::Name(a) if p.lhs == c.lhs && k.lhs.contains(a) => covered += 1,
            _ => return false,
        }
    }
    covered == k.lhs.len()
}

fn cr3(p: &EliAxiom, q: &EliAxiom, c: &EliAxiom) -> bool {
    match (&p.rhs, &q.rhs, &c.rhs) {
        (EliRhs::Exists(r, l), EliRhs::Forall(s, a), EliRhs::Name(b)) => {
            p.lhs == c.lhs && *l == q.lhs && *s == r.inv() && a == b
        }
        _ => false,
    }
}

fn cr4(p: &EliAxiom, q: &EliAxiom, c: &EliAxiom) -> bool {
    match (&p.rhs, &q.rhs, &c.rhs) {
        (EliRhs::Exists(r, m), EliRhs::Forall(s, a), EliRhs::Exists(t, n)) => {
            p.lhs == q.lhs && p.lhs == c.lhs && r == s && r == t && m.with(a.clone()) == *n
        }
        _ => false,
    }
}

impl RuleChecker<EliAxiom> for CrRuleChecker {
    fn name(&self) -> &str {
        "cr"
    }

    fn check(&self, premises: &[&EliAxiom], conclusion: &EliAxiom) -> bool {
        Self::rule_of(premises, conclusion).is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eli::{NameConjunction as N, Role};

    #[test]
    fn schemas() {
        let r = Role::new("r");
        let m = N::of(["M"]);
        let l = N::of(["L"]);
        let p = EliAxiom::exists(m.clone(), r.clone(), l.clone());
        let q = EliAxiom::forall(l.clone(), r.inv(), "A");
        let c = EliAxiom::name(m.clone(), "A");
        assert_eq!(CrRuleChecker::rule_of(&[&q, &p], &c), Some(CR3));
        assert_eq!(CrRuleChecker::rule_of(&[&q, &p, &c], &c), None);
        let extra = EliAxiom::name(N::of(["Z"]), "Z");
        assert_eq!(CrRuleChecker::rule_of(&[&q, &p, &extra], &c), None);

        let fa = EliAxiom::forall(l.clone(), r.clone(), "A");
        let ex = EliAxiom::exists(l.clone(), r.clone(), m.clone());
        let c4 = EliAxiom::exists(l.clone(), r.clone(), N::of(["M", "A"]));
        assert_eq!(CrRuleChecker::rule_of(&[&ex, &fa], &c4), Some(CR4));

        assert_eq!(CrRuleChecker::rule_of(&[], &EliAxiom::name(N::of(["A", "B"]), "A")), Some(CR1));
        assert_eq!(CrRuleChecker::rule_of(&[], &EliAxiom::name(N::of(["B"]), "A")), None);

        let kc = EliAxiom::forall(N::of(["A", "B"]), r.clone(), "C");
        let ma = EliAxiom::name(m.clone(), "A");
        let mb = EliAxiom::name(m.clone(), "B");
        let mc = EliAxiom::forall(m.clone(), r.clone(), "C");
        assert_eq!(CrRuleChecker::rule_of(&[&ma, &kc, &mb], &mc), Some(CR2));
        assert_eq!(CrRuleChecker::rule_of(&[&ma, &kc], &mc), None);
        let top = EliAxiom::exists(N::top(), r, N::top());
        let mt = EliAxiom::exists(m, Role::new("r"), N::top());
        assert_eq!(CrRuleChecker::rule_of(&[&top], &mt), Some(CR2));
    }
}
