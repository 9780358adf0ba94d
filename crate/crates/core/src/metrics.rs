//! Proof sizes and per-step scores.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hypergraph::{Proof, Sentence, VertexId};

/// Scores a single inference step.
pub trait StepScorer<L> {
    fn name(&self) -> &str;
    fn score(&self, premises: &[&L], conclusion: &L) -> f64;
}

/// Premise count plus the constructor count of every label in the step.
///
/// A structural proxy; not a published comprehension model.
#[derive(Clone, Copy, Debug, Default)]
pub struct StructuralScorer;

impl<L: Sentence> StepScorer<L> for StructuralScorer {
    fn name(&self) -> &str {
        "structural"
    }

    fn score(&self, premises: &[&L], conclusion: &L) -> f64 {
        default_step_score(premises, conclusion)
    }
}

pub fn default_step_score<L: Sentence>(premises: &[&L], conclusion: &L) -> f64 {
    let constructors: usize = premises.iter().map(|p| p.constructor_count()).sum::<usize>() + conclusion.constructor_count();
    (premises.len() + constructors) as f64
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProofReport {
    pub hypergraph_size: usize,
    pub tree_size: u64,
    pub label_size: usize,
    pub step_scores: Vec<f64>,
    pub score_sum: f64,
    pub score_max: f64,
    pub scorer: String,
    pub tool: String,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MetricsError {
    #[error("vertex {0} has several incoming edges; tree size is ambiguous")]
    Ambiguous(VertexId),
}

/// Measures `proof`; the tree size is computed without unraveling.
pub fn measure<L: Sentence>(
    proof: &Proof<L>,
    scorer: &dyn StepScorer<L>,
    tool: &str,
) -> Result<ProofReport, MetricsError> {
    let g = proof.graph();
    if let Some(v) = g.vertices().find(|&v| g.incoming(v).len() > 1) {
        return Err(MetricsError::Ambiguous(v));
    }
    let order = g.topological_order().expect("proofs are acyclic");
    let mut size = vec![1u64; g.vertex_count()];
    for v in order {
        if let Some(&e) = g.incoming(v).first() {
            size[v.index()] =
                g.edge(e).premises.iter().fold(1u64, |acc, p| acc.saturating_add(size[p.index()]));
        }
    }
    let step_scores: Vec<f64> = g
        .edges()
        .iter()
        .map(|e| {
            let ps: Vec<&L> = e.premises.iter().map(|&p| g.label(p)).collect();
            scorer.score(&ps, g.label(e.conclusion))
        })
        .collect();
    Ok(ProofReport {
        hypergraph_size: g.vertex_count(),
        tree_size: size[proof.sink.index()],
        label_size: proof.label_size(),
        score_sum: step_scores.iter().sum(),
        score_max: step_scores.iter().copied().fold(0.0, f64::max),
        step_scores,
        scorer: scorer.name().to_string(),
        tool: tool.to_string(),
    })
}
