use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use dlproof::el::{saturate, Axiom};
use dlproof::extraction::{minimal_proof, minimal_tree_proof, sbt_dijkstra, SearchConfig};
use dlproof::generate::{gen_hitting_set_tbox, HittingSetInstance};
use dlproof::synth::{layered_structure, random_el_tbox, Atom};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn tree_extraction(c: &mut Criterion) {
    let mut group = c.benchmark_group("minimal_tree_proof");
    for (v, e) in [(2_000, 10_000), (10_000, 50_000)] {
        let (d, goal) = layered_structure(v, e, 7);
        let goal = d.graph.label(goal).clone();
        group.bench_function(format!("layered_{v}x{e}"), |b| b.iter(|| minimal_tree_proof(black_box(&d), &goal)));
    }
    let (d, _) = layered_structure(2_000, 10_000, 7);
    group.bench_function("dijkstra_only_2000x10000", |b| b.iter(|| sbt_dijkstra(black_box(&d))));
    group.finish();
}

fn saturation(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let t = random_el_tbox(&mut rng, 40, 6);
    let eta = Axiom::atomic("A", "B");
    c.bench_function("saturate_random_40", |b| b.iter(|| saturate(black_box(&t), &eta).unwrap()));
}

fn minimal_search(c: &mut Criterion) {
    let inst = HittingSetInstance {
        universe_size: 6,
        sets: vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 5], vec![5, 0]],
        bound: 3,
    };
    let g = gen_hitting_set_tbox(&inst).unwrap();
    let d = saturate(&g.tbox, &g.goal).unwrap();
    let cfg = SearchConfig { budget: 20_000, cancel: None };
    c.bench_function("minimal_proof_hitting_set_6", |b| {
        b.iter(|| minimal_proof(black_box(&d), &g.goal, &cfg))
    });
    let (small, goal) = layered_structure(60, 200, 11);
    let goal: Atom = small.graph.label(goal).clone();
    c.bench_function("minimal_proof_layered_60x200", |b| {
        b.iter(|| minimal_proof(black_box(&small), &goal, &cfg))
    });
}

criterion_group!(benches, tree_extraction, saturation, minimal_search);
criterion_main!(benches);
