//! Normalized ELI with conjunctions of names treated as sets, and the CR1–CR4 calculus.

mod oracle;
mod rules;
mod saturate;
mod syntax;

pub use oracle::EliOracle;
pub use rules::CrRuleChecker;
pub use saturate::{saturate_eli, EliCaps, CR1, CR2, CR3, CR4};
pub use syntax::{EliAxiom, EliRhs, NameConjunction, Role};
