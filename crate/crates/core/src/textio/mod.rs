//! S-expression TBoxes, proof JSON and DOT output.

mod grammar;
mod sexpr;

use std::collections::HashMap;
use std::fmt::{self, Write};

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use grammar::{
    parse_axiom, parse_concept, parse_eli_axiom, parse_eli_tbox, parse_tbox, write_eli_tbox, write_tbox,
};
pub use sexpr::{read_all, read_one, ParseError, ParseErrorKind, Pos, SExpr};

use crate::el::Axiom;
use crate::eli::EliAxiom;
use crate::hypergraph::{DerivationStructure, Proof, Sentence, VertexId};
use crate::metrics::ProofReport;

/// Pseudo-edge tag marking a leaf labeled by a theory sentence.
pub const ASSERTED: &str = "asserted";

/// A sentence type with a textual form.
pub trait TextSentence: Sentence + Sized {
    fn parse_text(text: &str) -> Result<Self, ParseError>;
}

impl TextSentence for Axiom {
    fn parse_text(text: &str) -> Result<Self, ParseError> {
        parse_axiom(text)
    }
}

impl TextSentence for EliAxiom {
    fn parse_text(text: &str) -> Result<Self, ParseError> {
        parse_eli_axiom(text)
    }
}

/// An EL(H) sentence, or an ELI one when the EL reading fails.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AnySentence {
    El(Axiom),
    Eli(EliAxiom),
}

impl fmt::Display for AnySentence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnySentence::El(a) => a.fmt(f),
            AnySentence::Eli(a) => a.fmt(f),
        }
    }
}

impl Sentence for AnySentence {
    fn size(&self) -> usize {
        match self {
            AnySentence::El(a) => a.size(),
            AnySentence::Eli(a) => a.size(),
        }
    }

    fn constructor_count(&self) -> usize {
        match self {
            AnySentence::El(a) => a.constructor_count(),
            AnySentence::Eli(a) => a.constructor_count(),
        }
    }
}

impl TextSentence for AnySentence {
    fn parse_text(text: &str) -> Result<Self, ParseError> {
        parse_axiom(text).map(AnySentence::El).or_else(|e| parse_eli_axiom(text).map(AnySentence::Eli).map_err(|_| e))
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct ProofJson {
    vertices: Vec<VertexJson>,
    edges: Vec<EdgeJson>,
    sink: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    metrics: Option<ProofReport>,
}

#[derive(Debug, Serialize, Deserialize)]
struct VertexJson {
    id: u32,
    label: String,
}

#[derive(Debug, Serialize, Deserialize)]
struct EdgeJson {
    premises: Vec<u32>,
    conclusion: u32,
    tag: String,
}

/// Serializes a proof. Leaves labeled by theory sentences get an `asserted` pseudo-edge.
pub fn proof_to_json<L: Sentence>(proof: &Proof<L>, report: Option<&ProofReport>) -> String {
    let g = proof.graph();
    let vertices = g.vertices().map(|v| VertexJson { id: v.0, label: g.label(v).to_string() }).collect();
    let mut edges: Vec<EdgeJson> = g
        .edges()
        .iter()
        .map(|e| EdgeJson {
            premises: e.premises.iter().map(|p| p.0).collect(),
            conclusion: e.conclusion.0,
            tag: e.tag.clone(),
        })
        .collect();
    for v in g.vertices() {
        if g.incoming(v).is_empty() && proof.structure.is_theory(v) {
            edges.push(EdgeJson { premises: Vec::new(), conclusion: v.0, tag: ASSERTED.into() });
        }
    }
    let doc = ProofJson { vertices, edges, sink: proof.sink.0, metrics: report.cloned() };
    serde_json::to_string_pretty(&doc).expect("proof documents serialize") + "\n"
}

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("malformed proof document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("label of vertex {id}: {source}")]
    Label { id: u32, source: ParseError },
    #[error("unknown vertex id {0}")]
    UnknownVertex(u32),
}

/// Reads a proof document. `asserted` pseudo-edges define the theory and are not kept as edges.
pub fn proof_from_json<L: TextSentence>(text: &str) -> Result<(Proof<L>, Option<ProofReport>), JsonError> {
    let doc: ProofJson = serde_json::from_str(text)?;
    let mut ds = DerivationStructure::new(std::iter::empty());
    let mut ids: HashMap<u32, VertexId> = HashMap::new();
    for v in &doc.vertices {
        let label = L::parse_text(&v.label).map_err(|source| JsonError::Label { id: v.id, source })?;
        ids.insert(v.id, ds.graph.add_vertex(label));
    }
    let id = |x: u32| ids.get(&x).copied().ok_or(JsonError::UnknownVertex(x));
    for e in &doc.edges {
        let c = id(e.conclusion)?;
        if e.tag == ASSERTED && e.premises.is_empty() {
            ds.theory.insert(ds.graph.label(c).clone());
            continue;
        }
        let ps = e.premises.iter().map(|&p| id(p)).collect::<Result<Vec<_>, _>>()?;
        ds.graph.add_edge(ps, c, e.tag.clone());
    }
    let sink = id(doc.sink)?;
    Ok((Proof { structure: ds, sink }, doc.metrics))
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Graphviz rendering: sentence nodes, one box per hyperedge.
pub fn proof_to_dot<L: Sentence>(proof: &Proof<L>) -> String {
    let g = proof.graph();
    let mut out = String::from("digraph proof {\n  rankdir=BT;\n  node [shape=ellipse];\n");
    for v in g.vertices() {
        let extra = if v == proof.sink { ", peripheries=2" } else { "" };
        writeln!(out, "  v{} [label=\"{}\"{}];", v.0, escape(&g.label(v).to_string()), extra).unwrap();
    }
    for (i, e) in g.edges().iter().enumerate() {
        writeln!(out, "  e{i} [shape=box, label=\"{}\"];", escape(&e.tag)).unwrap();
        for p in &e.premises {
            writeln!(out, "  v{} -> e{i};", p.0).unwrap();
        }
        writeln!(out, "  e{i} -> v{};", e.conclusion.0).unwrap();
    }
    out.push_str("}\n");
    out
}
