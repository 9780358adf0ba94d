//! Minimal proofs and minimal tree proofs inside a derivation structure.

mod dijkstra;
mod minimal;
mod oracle;
mod star;

pub use dijkstra::{minimal_tree_proof, sbt_dijkstra, Choice, HyperpathState, MinimalTree};
pub use minimal::{decide_mp, minimal_proof, SearchConfig, SearchError};
pub use oracle::{oracle_minimal_proof_size, oracle_minimal_tree};
pub use star::{star_extension, StarStructure};
