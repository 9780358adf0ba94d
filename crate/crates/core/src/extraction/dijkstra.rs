use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::hypergraph::{DerivationStructure, EdgeId, Proof, Sentence, TreeProof, VertexId};

/// How a vertex was first reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Choice {
    /// Through the added edge `({s}, v)`: the vertex is a theory leaf.
    Source,
    Edge(EdgeId),
}

/// Weights and chosen incoming edges computed over the star extension.
///
/// `weight[v]` is the size of a smallest tree proof of `v`'s label rooted at `v`,
/// saturating at `u64::MAX`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperpathState {
    pub weight: Vec<Option<u64>>,
    pub chosen: Vec<Option<Choice>>,
}

impl HyperpathState {
    /// Vertices on the chosen hyperpath to `target`, ascending.
    pub fn support<L: Sentence>(&self, d: &DerivationStructure<L>, target: VertexId) -> Vec<VertexId> {
        let mut seen = vec![false; self.chosen.len()];
        let mut stack = vec![target];
        while let Some(v) = stack.pop() {
            if std::mem::replace(&mut seen[v.index()], true) {
                continue;
            }
            if let Some(Choice::Edge(e)) = self.chosen[v.index()] {
                stack.extend(d.graph.edge(e).premises.iter().copied());
            }
        }
        (0..seen.len()).filter(|&i| seen[i]).map(|i| VertexId(i as u32)).collect()
    }
}

/// Shortest B-tree search over the star extension, with `W(d) = 1 + Σ W(premises)`.
///
/// The `({s}, v)` edges are implicit. Ties are broken by premise count, then vertex id;
/// a theory vertex is always reached through its source edge.
pub fn sbt_dijkstra<L: Sentence>(d: &DerivationStructure<L>) -> HyperpathState {
    let g = &d.graph;
    let n = g.vertex_count();
    let mut weight: Vec<Option<u64>> = vec![None; n];
    let mut chosen: Vec<Option<Choice>> = vec![None; n];
    let mut remaining: Vec<usize> = g.edges().iter().map(|e| e.premises.len()).collect();
    let mut heap = BinaryHeap::new();

    for v in g.vertices() {
        if d.is_theory(v) {
            heap.push(Reverse((1u64, 0usize, v, Choice::Source)));
        }
    }
    for e in g.edge_ids() {
        if remaining[e.index()] == 0 {
            heap.push(Reverse((1, 0, g.edge(e).conclusion, Choice::Edge(e))));
        }
    }
    while let Some(Reverse((w, _, v, c))) = heap.pop() {
        if weight[v.index()].is_some() {
            continue;
        }
        weight[v.index()] = Some(w);
        chosen[v.index()] = Some(c);
        for &e in g.outgoing(v) {
            let r = &mut remaining[e.index()];
            *r -= 1;
            if *r > 0 {
                continue;
            }
            let edge = g.edge(e);
            if weight[edge.conclusion.index()].is_some() {
                continue;
            }
            let w = edge
                .premises
                .iter()
                .fold(1u64, |acc, p| acc.saturating_add(weight[p.index()].unwrap()));
            heap.push(Reverse((w, edge.premises.len(), edge.conclusion, Choice::Edge(e))));
        }
    }
    HyperpathState { weight, chosen }
}

/// Result of [`minimal_tree_proof`].
#[derive(Clone, Debug)]
pub struct MinimalTree<L> {
    /// The chosen hyperpath as a proof; its provenance points into the input structure.
    pub hyperpath: Proof<L>,
    /// The unraveled hyperpath; its provenance points into `hyperpath`.
    pub tree: TreeProof<L>,
    pub weight: u64,
}

/// A tree proof of `eta` of minimal size among those with a homomorphism into `d`.
///
/// Returns `None` if no vertex labeled `eta` is derivable. The tree is only
/// materialized; the hyperpath is linear in `d`, while the tree may be exponential.
pub fn minimal_tree_proof<L: Sentence>(d: &DerivationStructure<L>, eta: &L) -> Option<MinimalTree<L>> {
    let state = sbt_dijkstra(d);
    let target = d
        .graph
        .vertices_labeled(eta)
        .filter_map(|v| state.weight[v.index()].map(|w| (w, v)))
        .min()?
        .1;
    let hyperpath = hyperpath_proof(d, &state, target);
    let tree = hyperpath.unravel();
    Some(MinimalTree { weight: state.weight[target.index()].unwrap(), hyperpath, tree })
}

pub(crate) fn hyperpath_proof<L: Sentence>(
    d: &DerivationStructure<L>,
    state: &HyperpathState,
    target: VertexId,
) -> Proof<L> {
    let support = state.support(d, target);
    let edges: Vec<EdgeId> = support
        .iter()
        .filter_map(|v| match state.chosen[v.index()] {
            Some(Choice::Edge(e)) => Some(e),
            _ => None,
        })
        .collect();
    let (structure, map) = d.substructure(edges, support.iter().copied());
    Proof { structure, sink: map[target.index()].unwrap() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::el::{saturate, Axiom, Concept, ElkRuleChecker, TBox};
    use crate::hypergraph::check_proof;

    #[test]
    fn shared_vertex_counted_twice_in_tree() {
        let a = Concept::name("A");
        let t: TBox = [
            Axiom::atomic("A", "B"),
            Axiom::gci(Concept::name("B"), Concept::some("r", a.clone())),
        ]
        .into_iter()
        .collect();
        let goal = Axiom::gci(a.clone(), Concept::and(Concept::name("B"), Concept::some("r", a.clone())));
        let ds = saturate(&t, &goal).unwrap();
        let m = minimal_tree_proof(&ds, &goal).unwrap();
        check_proof(&m.hyperpath.structure, &goal, &ElkRuleChecker).unwrap();
        assert!(m.hyperpath.vertex_count() <= 5);
        assert_eq!(m.weight, 5);
        assert_eq!(m.tree.vertex_count(), 5);
        assert!(m.tree.is_tree());
    }
}
