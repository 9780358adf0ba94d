//! Derivation structures, minimal proofs and forgetting-based proofs for EL(H) and ELI.

pub mod el;
pub mod eli;
pub mod error;
pub mod extraction;
pub mod fba;
pub mod generate;
pub mod hypergraph;
pub mod justify;
pub mod metrics;
pub mod synth;
pub mod textio;

pub use error::CapacityError;
pub use extraction::{decide_mp, minimal_proof, minimal_tree_proof, sbt_dijkstra, MinimalTree, SearchConfig, SearchError};
pub use hypergraph::{
    check_proof, find_homomorphism, is_proof, BudgetExceeded, DerivationStructure, EdgeId, Hyperedge, Hypergraph,
    Proof, ProofViolation, RuleChecker, Sentence, TreeProof, VertexId, VertexMapping,
};
pub use metrics::{measure, ProofReport, StepScorer, StructuralScorer};
