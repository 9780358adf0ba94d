use std::collections::BTreeSet;

use dlproof::eli::{saturate_eli, CrRuleChecker, EliAxiom, EliCaps, EliOracle, NameConjunction, Role};
use dlproof::extraction::minimal_tree_proof;
use dlproof::generate::{gen_sat_eli_tbox, CnfFormula};
use dlproof::textio::{parse_eli_axiom, parse_eli_tbox};
use dlproof::{DerivationStructure, RuleChecker, VertexId};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const NAMES: [&str; 3] = ["A", "B", "C"];

fn conj(rng: &mut ChaCha8Rng, max: usize) -> NameConjunction {
    let k = rng.gen_range(0..=max);
    NameConjunction::of(NAMES.choose_multiple(rng, k).copied())
}

fn random_eli(seed: u64) -> Vec<EliAxiom> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let count = rng.gen_range(2..=4);
    let mut out = Vec::new();
    while out.len() < count {
        let mut lhs = conj(&mut rng, 2);
        if lhs.is_empty() {
            lhs = NameConjunction::of(["A"]);
        }
        let a = *NAMES.choose(&mut rng).unwrap();
        let r = if rng.gen_bool(0.5) { Role::new("r") } else { Role::new("r").inv() };
        let ax = match rng.gen_range(0..3) {
            0 => EliAxiom::name(lhs, a),
            1 => EliAxiom::exists(lhs, r, conj(&mut rng, 1)),
            _ => EliAxiom::forall(lhs, r, a),
        };
        if !out.contains(&ax) {
            out.push(ax);
        }
    }
    out
}

fn edge_exists(d: &DerivationStructure<EliAxiom>, premises: &[VertexId], conclusion: VertexId) -> bool {
    let mut want = premises.to_vec();
    want.sort();
    d.graph.incoming(conclusion).iter().any(|&e| {
        let mut ps = d.graph.edge(e).premises.clone();
        ps.sort();
        ps == want
    })
}

fn subsets(n: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for i in 0..n {
        let grown: Vec<Vec<usize>> =
            out.iter().filter(|s| s.len() < max).map(|s| s.iter().copied().chain([i]).collect()).collect();
        out.extend(grown);
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn materialization_matches_oracle(seed in any::<u64>()) {
        let t = random_eli(seed);
        let goal = EliAxiom::name(NameConjunction::of(["A"]), "B");
        let caps = EliCaps::default();
        let d = saturate_eli(&t, &goal, caps).unwrap();
        let o = EliOracle::new(&t, &goal, caps).unwrap();
        let g = &d.graph;
        prop_assert_eq!(o.label_count(), g.vertex_count());
        for e in g.edges() {
            let ps: Vec<&EliAxiom> = e.premises.iter().map(|&p| g.label(p)).collect();
            prop_assert!(CrRuleChecker.check(&ps, g.label(e.conclusion)));
            prop_assert!(o.is_edge(&ps, g.label(e.conclusion)));
        }
        let labels: Vec<&EliAxiom> = o.labels().collect();
        for l in &labels {
            prop_assert!(g.vertex_of(l).is_some());
        }
        if labels.len() <= 16 {
            let ids: Vec<VertexId> = labels.iter().map(|l| g.vertex_of(l).unwrap()).collect();
            for set in subsets(labels.len(), 3) {
                let ps: Vec<&EliAxiom> = set.iter().map(|&i| labels[i]).collect();
                let pv: Vec<VertexId> = set.iter().map(|&i| ids[i]).collect();
                for (c, &cv) in labels.iter().zip(&ids) {
                    if pv.contains(&cv) || !o.is_edge(&ps, c) {
                        continue;
                    }
                    prop_assert!(edge_exists(&d, &pv, cv), "missing {:?} -> {}", ps, c);
                }
            }
        }
    }
}

#[test]
fn conjunctions_behave_as_sets() {
    let a = parse_eli_tbox("(implies (and B A) (some r (and C A)))\n(implies C (all (inv r) D))").unwrap();
    let b = parse_eli_tbox("(implies (and A B A) (some r (and A C C)))\n(implies C (all (inv r) D))").unwrap();
    assert_eq!(a, b);
    let goal = parse_eli_axiom("(implies (and A B) D)").unwrap();
    let da = saturate_eli(&a, &goal, EliCaps::default()).unwrap();
    let db = saturate_eli(&b, &goal, EliCaps::default()).unwrap();
    let labels = |d: &DerivationStructure<EliAxiom>| d.graph.labels().iter().cloned().collect::<BTreeSet<_>>();
    assert_eq!(labels(&da), labels(&db));
    assert_eq!(da.graph.edge_count(), db.graph.edge_count());
    assert!(da.graph.vertex_of(&goal).is_some());
}

#[test]
fn satisfiable_formulas_meet_the_bound_exactly() {
    let cases = [vec![vec![1, -1]], vec![vec![1]], vec![vec![-1], vec![1, -1]], vec![vec![1], vec![1]]];
    for clauses in cases {
        let g = gen_sat_eli_tbox(&CnfFormula { variables: 1, clauses }).unwrap();
        assert!(g.formula.is_satisfiable());
        let d = saturate_eli(&g.tbox, &g.goal, EliCaps::default()).unwrap();
        assert_eq!(minimal_tree_proof(&d, &g.goal).unwrap().weight, g.bound as u64, "{:?}", g.formula);
    }
    let unsat = gen_sat_eli_tbox(&CnfFormula { variables: 1, clauses: vec![vec![1], vec![-1]] }).unwrap();
    let d = saturate_eli(&unsat.tbox, &unsat.goal, EliCaps::default()).unwrap();
    assert!(minimal_tree_proof(&d, &unsat.goal).is_none_or(|t| t.weight > unsat.bound as u64));
}

#[test]
fn width_cap_is_reported() {
    let g = gen_sat_eli_tbox(&CnfFormula { variables: 2, clauses: vec![vec![1, 2], vec![-1, -2]] }).unwrap();
    let err = saturate_eli(&g.tbox, &g.goal, EliCaps { max_width: 2, max_vertices: 10_000 }).unwrap_err();
    assert_eq!(err.cap, "eli_width");
}
