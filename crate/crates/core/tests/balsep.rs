mod common;

use common::*;
use dirtw_core::balsep::{brute_force_balanced_separator, ordered_partitions};
use dirtw_core::lincut::{linear_vertex_cut, TerminalSequence};
use dirtw_core::{balanced_separator, is_balanced_separator, BalancedSeparatorInstance, BalancedSeparatorResult, VertexSet};
use proptest::prelude::*;
use rand::Rng;

#[test]
fn fubini_counts() {
    for n in 1..=5 {
        let t: VertexSet = (0..n).collect();
        assert_eq!(ordered_partitions(&t, n).count() as u64, fubini(n));
    }
    assert_eq!((1..=5).map(fubini).collect::<Vec<_>>(), vec![1, 3, 13, 75, 541]);
}

#[test]
fn agrees_with_exhaustive_search() {
    let mut rng = rng(21);
    for _ in 0..150 {
        let n = rng.gen_range(2..=7);
        let p = rng.gen_range(0.15..0.8);
        let d = random_digraph(&mut rng, n, p);
        let t = random_subset(&mut rng, n, 0.7);
        if t.len() < 2 {
            continue;
        }
        for r in 1..t.len() {
            for s in 0..t.len() - r {
                let inst = BalancedSeparatorInstance::new(&d, &t, r, s);
                let got = balanced_separator(&inst).unwrap();
                let want = min_balanced(&d, &t, r, s);
                assert_eq!(got.is_linked(), want.is_none(), "{d:?} T={t:?} r={r} s={s}");
                if let BalancedSeparatorResult::Separator(z) = &got {
                    assert!(z.len() <= s);
                    assert!(balanced(&d, &t, r, z));
                    assert!(is_balanced_separator(&d, &t, r, z));
                }
                assert_eq!(brute_force_balanced_separator(&d, &t, r, s).is_linked(), want.is_none());
            }
        }
    }
}

/// A separator exists iff some ordered partition admits a linear cut,
/// checked without the pruned search.
#[test]
fn partition_completeness() {
    let mut rng = rng(22);
    for _ in 0..60 {
        let n = rng.gen_range(2..=6);
        let d = random_digraph(&mut rng, n, 0.5);
        let t = random_subset(&mut rng, n, 0.8);
        if t.len() < 2 {
            continue;
        }
        let (r, s) = (1, rng.gen_range(0..t.len() - 1));
        let by_partition = ordered_partitions(&t, r)
            .any(|p: TerminalSequence| linear_vertex_cut(&d, &p, s).unwrap().is_some());
        let got = balanced_separator(&BalancedSeparatorInstance::new(&d, &t, r, s)).unwrap();
        assert_eq!(by_partition, !got.is_linked());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn monotone_in_r_and_s(seed in any::<u64>(), n in 3usize..7) {
        let mut rng = rng(seed);
        let d = random_digraph(&mut rng, n, 0.5);
        let t: VertexSet = (0..n).collect();
        for r in 1..n {
            for s in 0..n - r {
                let here = balanced_separator(&BalancedSeparatorInstance::new(&d, &t, r, s)).unwrap();
                if !here.is_linked() {
                    prop_assert!(!balanced_separator(&BalancedSeparatorInstance::new(&d, &t, r + 1, s)).unwrap().is_linked());
                    prop_assert!(!balanced_separator(&BalancedSeparatorInstance::new(&d, &t, r, s + 1)).unwrap().is_linked());
                }
            }
        }
    }
}
