mod common;

use std::collections::BTreeSet;

use dlproof::el::{entails, saturate, saturate_with, Axiom, Concept, ElkRuleChecker, SaturationConfig, TBox};
use dlproof::synth::random_el_tbox;
use dlproof::{DerivationStructure, RuleChecker};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;

const NAMES: [&str; 4] = ["A", "B", "C", "D"];

fn tbox(seed: u64) -> TBox {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let size = rng.gen_range(1..=6);
    random_el_tbox(&mut rng, size, NAMES.len())
}

fn labels(d: &DerivationStructure<Axiom>) -> BTreeSet<String> {
    d.graph.labels().iter().map(|a| a.to_string()).collect()
}

fn steps(d: &DerivationStructure<Axiom>) -> BTreeSet<(Vec<String>, String)> {
    let g = &d.graph;
    g.edges()
        .iter()
        .map(|e| {
            let mut ps: Vec<String> = e.premises.iter().map(|&p| g.label(p).to_string()).collect();
            ps.sort();
            (ps, g.label(e.conclusion).to_string())
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn entails_agrees_with_completion(seed in any::<u64>()) {
        let t = tbox(seed);
        let oracle = Completion::new(&t);
        for a in NAMES {
            for b in NAMES {
                let eta = Axiom::atomic(a, b);
                prop_assert_eq!(entails(&t, &eta).unwrap(), oracle.entails(a, b), "{} over {:?}", eta, t.to_vec());
            }
        }
    }

    #[test]
    fn saturation_edges_are_rule_instances(seed in any::<u64>(), goal in 0..16usize) {
        let t = tbox(seed);
        let eta = Axiom::atomic(NAMES[goal / 4], NAMES[goal % 4]);
        for cfg in [SaturationConfig::default(), SaturationConfig::goal_directed()] {
            let d = saturate_with(&t, &eta, &cfg).unwrap();
            let g = &d.graph;
            prop_assert_eq!(labels(&d).len(), g.vertex_count());
            for e in g.edges() {
                let ps: Vec<&Axiom> = e.premises.iter().map(|&p| g.label(p)).collect();
                prop_assert!(ElkRuleChecker.check(&ps, g.label(e.conclusion)));
            }
            prop_assert!(d.is_grounded());
        }
    }

    #[test]
    fn adding_an_axiom_over_the_same_universe_is_monotone(seed in any::<u64>(), pick in any::<(usize, usize)>()) {
        let t = tbox(seed);
        let eta = Axiom::atomic("A", "B");
        let concepts: Vec<_> = {
            let mut set = BTreeSet::new();
            for ax in t.axioms() {
                if let Axiom::Gci(l, r) = ax {
                    for c in l.subconcepts().into_iter().chain(r.subconcepts()) {
                        set.insert(c.clone());
                    }
                }
            }
            set.into_iter().collect()
        };
        prop_assume!(!concepts.is_empty());
        let extra = Axiom::gci(concepts[pick.0 % concepts.len()].clone(), concepts[pick.1 % concepts.len()].clone());
        let mut bigger = t.clone();
        bigger.insert(extra);
        let small = saturate(&t, &eta).unwrap();
        let large = saturate(&bigger, &eta).unwrap();
        prop_assert!(labels(&small).is_subset(&labels(&large)));
        prop_assert!(steps(&small).is_subset(&steps(&large)));
    }
}

#[test]
fn completion_oracle_on_known_cases() {
    let (t, _) = role_tbox();
    let o = Completion::new(&t);
    assert!(o.entails("A", "B") && o.entails("C", "B") && !o.entails("B", "A"));
    let (t, _) = loop_tbox();
    let o = Completion::new(&t);
    assert!(o.entails("A", "B") && !o.entails("B", "A"));
    let mut t = TBox::new();
    t.insert(Axiom::gci(n("A"), Concept::some("r", n("C"))));
    t.insert(Axiom::role_inclusion("r", "s"));
    t.insert(Axiom::gci(Concept::some("s", Concept::Top), n("B")));
    assert!(Completion::new(&t).entails("A", "B"));
    assert!(entails(&t, &Axiom::atomic("A", "B")).unwrap());
}

#[test]
fn random_corpus_has_non_trivial_entailments() {
    let mut strict = 0;
    for seed in 0..128 {
        let t = tbox(seed);
        let o = Completion::new(&t);
        strict += NAMES.iter().flat_map(|a| NAMES.iter().map(move |b| (a, b))).filter(|(a, b)| a != b && o.entails(a, b)).count();
    }
    assert!(strict > 20, "{strict}");
}
