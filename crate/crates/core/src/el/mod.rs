//! EL(H): syntax, normalization and saturation under the ELK rule set.

mod normalize;
mod rules;
mod saturate;
mod semantic;
mod syntax;

pub use normalize::{fold, normalize, Definition, NormalizationTrace};
pub use rules::ElkRuleChecker;
pub use saturate::{entails, saturate, saturate_with, ContextPolicy, SaturationConfig};
pub use semantic::SemanticChecker;
pub use syntax::{Axiom, Concept, Signed, Symbol, SymbolKind, TBox};
