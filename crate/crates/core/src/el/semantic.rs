use super::saturate::entails;
use super::syntax::{Axiom, TBox};
use crate::hypergraph::RuleChecker;

/// Accepts a step when its premises entail its conclusion. Saturates per call.
#[derive(Clone, Copy, Debug, Default)]
pub struct SemanticChecker;

impl RuleChecker<Axiom> for SemanticChecker {
    fn name(&self) -> &str {
        "semantic"
    }

    fn check(&self, premises: &[&Axiom], conclusion: &Axiom) -> bool {
        let t: TBox = premises.iter().map(|a| (*a).clone()).collect();
        entails(&t, conclusion).unwrap_or(false)
    }
}
