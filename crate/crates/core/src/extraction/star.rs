use crate::hypergraph::{DerivationStructure, Hypergraph, Sentence, VertexId};

/// A derivation structure extended by a source vertex `s` with an edge `({s}, v)`
/// to every vertex labeled by a theory sentence or concluded by a premise-free edge.
#[derive(Clone, Debug)]
pub struct StarStructure<'a, L> {
    pub base: &'a DerivationStructure<L>,
    /// The id `s` receives when materialized: one past the last base vertex.
    pub source: VertexId,
    /// Targets of the added edges, ascending.
    pub added: Vec<VertexId>,
}

pub fn star_extension<L: Sentence>(base: &DerivationStructure<L>) -> StarStructure<'_, L> {
    let g = &base.graph;
    let added = g
        .vertices()
        .filter(|&v| base.is_theory(v) || g.incoming(v).iter().any(|&e| g.edge(e).premises.is_empty()))
        .collect();
    StarStructure { base, source: VertexId(g.vertex_count() as u32), added }
}

impl<L: Sentence> StarStructure<'_, L> {
    /// Materializes the extended hypergraph, labeling `s` with `source_label`.
    pub fn to_hypergraph(&self, source_label: L) -> Hypergraph<L> {
        let mut h = self.base.graph.clone();
        let s = h.add_vertex(source_label);
        debug_assert_eq!(s, self.source);
        for &v in &self.added {
            h.add_edge([s], v, "source");
        }
        h
    }
}
