//! Random inputs for property tests and benchmarks.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use crate::el::{saturate_with, Axiom, Concept, SaturationConfig, TBox};
use crate::hypergraph::{DerivationStructure, Sentence, VertexId};

/// An opaque sentence used by synthetic structures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Atom(pub u32);

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a{}", self.0)
    }
}

impl Sentence for Atom {
    fn size(&self) -> usize {
        1
    }

    fn constructor_count(&self) -> usize {
        0
    }
}

fn random_concept<R: Rng>(rng: &mut R, names: &[&str], roles: &[&str], depth: u32) -> Concept {
    let pick = |rng: &mut R| Concept::name(names.choose(rng).unwrap());
    if depth == 0 {
        return pick(rng);
    }
    match rng.gen_range(0..6) {
        0 => Concept::and(pick(rng), random_concept(rng, names, roles, depth - 1)),
        1 => Concept::some(roles.choose(rng).unwrap(), random_concept(rng, names, roles, depth - 1)),
        _ => pick(rng),
    }
}

const NAMES: [&str; 6] = ["A", "B", "C", "D", "E", "F"];

/// A TBox of `axioms` random GCIs (plus occasionally a role inclusion) over the first
/// `names` concept names of `A … F` and the roles `r`, `s`.
pub fn random_el_tbox<R: Rng>(rng: &mut R, axioms: usize, names: usize) -> TBox {
    const ROLES: [&str; 2] = ["r", "s"];
    let names = &NAMES[..names.clamp(1, NAMES.len())];
    let mut t = TBox::new();
    while t.len() < axioms {
        if rng.gen_ratio(1, 10) {
            t.insert(Axiom::role_inclusion("r", "s"));
            continue;
        }
        let lhs = random_concept(rng, names, &ROLES, 1);
        let rhs = random_concept(rng, names, &ROLES, 2);
        if lhs != rhs {
            t.insert(Axiom::gci(lhs, rhs));
        }
    }
    t
}

/// A goal-directed saturation of a random TBox with at most `max_vertices` vertices and
/// `max_edges` edges, together with a derived goal that is not in the TBox.
pub fn random_small_structure<R: Rng>(
    rng: &mut R,
    max_vertices: usize,
    max_edges: usize,
) -> (TBox, Axiom, DerivationStructure<Axiom>) {
    let names = &NAMES[..4];
    loop {
        let size = rng.gen_range(2..=5);
        let tbox = random_el_tbox(rng, size, names.len());
        let eta = Axiom::atomic(names.choose(rng).unwrap(), names.choose(rng).unwrap());
        let Ok(ds) = saturate_with(&tbox, &eta, &SaturationConfig::goal_directed()) else { continue };
        let g = &ds.graph;
        if g.vertex_count() > max_vertices || g.edge_count() > max_edges {
            continue;
        }
        let derived: Vec<VertexId> = g.vertices().filter(|&v| !ds.is_theory(v) && !g.incoming(v).is_empty()).collect();
        let Some(&v) = derived.choose(rng) else { continue };
        let goal = g.label(v).clone();
        return (tbox, goal, ds);
    }
}

/// A structure over [`Atom`] labels with the given vertex and edge counts.
///
/// A tenth of the vertices are theory leaves. Every other vertex has an edge whose premises
/// come from the preceding tenth of the vertices, so everything is derivable and proofs get
/// deep; about 5% of the edges draw premises from anywhere and introduce cycles. Returns the
/// structure and the last vertex as goal.
pub fn layered_structure(vertices: usize, edges: usize, seed: u64) -> (DerivationStructure<Atom>, VertexId) {
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    let leaves = (vertices / 10).max(4).min(vertices);
    let mut ds = DerivationStructure::new((0..leaves as u32).map(Atom));
    for i in 0..vertices as u32 {
        ds.graph.add_vertex(Atom(i));
    }
    let add = |ds: &mut DerivationStructure<Atom>, rng: &mut rand::rngs::StdRng, c: usize, backwards: bool| {
        let k = rng.gen_range(1..=3);
        let (lo, hi) = if backwards { (0, vertices) } else { (c.saturating_sub(leaves), c) };
        let mut p: Vec<VertexId> = (0..k).map(|_| VertexId(rng.gen_range(lo..hi) as u32)).collect();
        p.sort();
        p.dedup();
        if p.contains(&VertexId(c as u32)) {
            return;
        }
        let tag = format!("r{}", p.len());
        ds.graph.add_edge(p, VertexId(c as u32), tag);
    };
    for c in leaves..vertices {
        add(&mut ds, &mut rng, c, false);
    }
    let mut count = ds.graph.edge_count();
    while count < edges && vertices > leaves {
        let c = rng.gen_range(leaves..vertices);
        let back = rng.gen_ratio(1, 20);
        add(&mut ds, &mut rng, c, back);
        count = ds.graph.edge_count();
    }
    (ds, VertexId(vertices as u32 - 1))
}
