mod common;

use common::*;
use dirtw_core::arboreal::ArborealError;
use dirtw_core::examples::biclique;
use dirtw_core::generate::{gnm, random_dag};
use dirtw_core::{decompose, haven_eval, validate, ArborealDecomposition, Decomposition, LinkedSetCertificate, VertexSet};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

/// Brute-force check that no `(T, r)`-balanced separator has at most `k` vertices.
fn certified_linked(d: &dirtw_core::Digraph, c: &LinkedSetCertificate) -> bool {
    min_balanced(d, &c.terminals, c.r, c.k).is_none()
}

#[test]
fn small_random_outcomes_are_sound() {
    let mut rng = rng(31);
    let (mut decs, mut certs) = (0, 0);
    for _ in 0..120 {
        let n = rng.gen_range(1..=9);
        let p = rng.gen_range(0.1..0.9);
        let d = random_digraph(&mut rng, n, p);
        for k in 1..=3 {
            match decompose(&d, k).unwrap() {
                Decomposition::Decomposition(dec) => {
                    let report = validate(&d, &dec, true);
                    assert!(report.is_valid(), "{d:?} k={k}: {:?}", report.violations);
                    assert!(report.width + 2 <= 3 * k);
                    decs += 1;
                }
                Decomposition::Certificate(c) => {
                    assert_eq!(c.terminals.len(), 2 * k - 1);
                    assert!(certified_linked(&d, &c), "{d:?} k={k} {c:?}");
                    certs += 1;
                }
            }
        }
    }
    assert!(decs > 50 && certs > 20, "decompositions {decs}, certificates {certs}");
}

#[test]
fn dags_decompose_for_every_k() {
    for seed in 0..6 {
        let d = random_dag(60, 150, seed);
        for k in 1..=4 {
            let Decomposition::Decomposition(dec) = decompose(&d, k).unwrap() else {
                panic!("acyclic graph produced a certificate");
            };
            assert!(validate(&d, &dec, true).is_valid());
        }
    }
}

#[test]
fn sparse_graphs_stay_valid_at_moderate_size() {
    for seed in 0..4 {
        let d = gnm(80, 100, seed);
        for k in 2..=4 {
            if let Decomposition::Decomposition(dec) = decompose(&d, k).unwrap() {
                let report = validate(&d, &dec, true);
                assert!(report.is_valid() && report.width + 2 <= 3 * k);
            }
        }
    }
}

#[test]
fn json_round_trip_of_emitted_decompositions() {
    let mut rng = rng(32);
    for _ in 0..30 {
        let d = random_digraph(&mut rng, 8, 0.3);
        if let Decomposition::Decomposition(dec) = decompose(&d, 2).unwrap() {
            let back = ArborealDecomposition::from_json(&d, &dec.to_json(&d)).unwrap();
            assert_eq!(back, dec);
        }
    }
}

#[test]
fn haven_rejects_oversized_queries() {
    let d = biclique(6);
    let Decomposition::Certificate(c) = decompose(&d, 2).unwrap() else { panic!() };
    let z: VertexSet = (0..=c.k).collect();
    assert!(matches!(haven_eval(&d, &c, &z), Err(ArborealError::BudgetExceeded { .. })));
}

fn certificates(seed: u64) -> Vec<(dirtw_core::Digraph, LinkedSetCertificate)> {
    let mut rng = rng(seed);
    let mut out = Vec::new();
    for k in 1..=3 {
        let d = biclique(3 * k);
        if let Decomposition::Certificate(c) = decompose(&d, k).unwrap() {
            out.push((d, c));
        }
    }
    while out.len() < 10 {
        let d = random_digraph(&mut rng, 9, 0.7);
        let k = rng.gen_range(2..=3);
        if let Decomposition::Certificate(c) = decompose(&d, k).unwrap() {
            out.push((d, c));
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn haven_is_monotone(seed in any::<u64>()) {
        let mut rng = rng(seed);
        for (d, c) in certificates(seed) {
            let mut order: Vec<usize> = d.vertices().collect();
            order.shuffle(&mut rng);
            let size = rng.gen_range(0..=c.k);
            let z: VertexSet = order[..size].iter().copied().collect();
            let sub: VertexSet = z.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
            let big = haven_eval(&d, &c, &z).unwrap();
            let small = haven_eval(&d, &c, &sub).unwrap();
            prop_assert!(big.is_subset(&small));
            prop_assert!(big.is_disjoint(&z));
            prop_assert!(strongly_connected(&d, &big));
        }
    }
}
