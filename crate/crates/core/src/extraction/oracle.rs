use crate::error::CapacityError;
use crate::hypergraph::{DerivationStructure, Sentence};

/// Size of a smallest tree proof of `eta` with a homomorphism into `d`, by
/// dynamic programming over (vertex, depth) with depth at most `|V|`.
pub fn oracle_minimal_tree<L: Sentence>(
    d: &DerivationStructure<L>,
    eta: &L,
    max_vertices: usize,
) -> Result<Option<u64>, CapacityError> {
    let g = &d.graph;
    let n = g.vertex_count();
    if n > max_vertices {
        return Err(CapacityError::new("oracle_vertices", max_vertices));
    }
    let leaf: Vec<Option<u64>> = g
        .vertices()
        .map(|v| {
            let axiom_free = g.incoming(v).iter().any(|&e| g.edge(e).premises.is_empty());
            (d.is_theory(v) || axiom_free).then_some(1)
        })
        .collect();
    let mut f = leaf.clone();
    for _ in 0..n {
        let mut next = leaf.clone();
        for e in g.edges() {
            let sum = e
                .premises
                .iter()
                .try_fold(1u64, |acc, p| f[p.index()].map(|w| acc.saturating_add(w)));
            if let Some(w) = sum {
                let slot = &mut next[e.conclusion.index()];
                if slot.is_none_or(|cur| w < cur) {
                    *slot = Some(w);
                }
            }
        }
        f = next;
    }
    Ok(g.vertices_labeled(eta).filter_map(|v| f[v.index()]).min())
}

/// Number of vertices in a smallest proof of `eta` inside `d`, by enumerating
/// vertex subsets and forward chaining within each.
pub fn oracle_minimal_proof_size<L: Sentence>(
    d: &DerivationStructure<L>,
    eta: &L,
    max_vertices: usize,
) -> Result<Option<usize>, CapacityError> {
    let g = &d.graph;
    let n = g.vertex_count();
    if n > max_vertices.min(24) {
        return Err(CapacityError::new("oracle_vertices", max_vertices.min(24)));
    }
    let goals: u32 = g.vertices_labeled(eta).fold(0, |m, v| m | (1 << v.index()));
    if goals == 0 {
        return Ok(None);
    }
    let theory: u32 = g.vertices().filter(|&v| d.is_theory(v)).fold(0, |m, v| m | (1 << v.index()));
    let edges: Vec<(u32, usize)> = g
        .edges()
        .iter()
        .map(|e| (e.premises.iter().fold(0, |m, p| m | (1 << p.index())), e.conclusion.index()))
        .collect();
    let mut best: Option<usize> = None;
    for mask in 1u32..(1u32 << n) {
        let size = mask.count_ones() as usize;
        if mask & goals == 0 || best.is_some_and(|b| size >= b) {
            continue;
        }
        let mut derived = mask & theory;
        loop {
            let before = derived;
            for &(ps, c) in &edges {
                let bit = 1 << c;
                if mask & bit != 0 && ps & !mask == 0 && ps & !derived == 0 {
                    derived |= bit;
                }
            }
            if derived == before {
                break;
            }
        }
        if derived & goals != 0 {
            best = Some(size);
        }
    }
    Ok(best)
}
