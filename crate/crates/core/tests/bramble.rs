mod common;

use common::*;
use dirtw_core::bramble::{build_path_system, g, hitting_path, verify_well_linked, well_linked_set, TBramble};
use dirtw_core::examples::{biclique, bicycle};
use dirtw_core::{decompose, Decomposition, Digraph, LinkedSetCertificate, VertexSet};
use rand::Rng;

/// Certified terminal sets on small graphs: `(D, certificate, k)`.
fn small_certificates() -> Vec<(Digraph, LinkedSetCertificate, usize)> {
    let mut rng = rng(41);
    let mut out = Vec::new();
    for k in 1..=3 {
        let d = biclique(3 * k);
        if let Decomposition::Certificate(c) = decompose(&d, k).unwrap() {
            out.push((d, c, k));
        }
    }
    let mut tries = 0;
    while out.len() < 15 && tries < 400 {
        tries += 1;
        let n = rng.gen_range(4..=10);
        let p = rng.gen_range(0.4..0.9);
        let d = random_digraph(&mut rng, n, p);
        let k = rng.gen_range(1..=3);
        if let Decomposition::Certificate(c) = decompose(&d, k).unwrap() {
            out.push((d, c, k));
        }
    }
    assert!(out.len() >= 10);
    out
}

#[test]
fn hitting_sets_match_explicit_enumeration() {
    let mut rng = rng(42);
    for (d, c, k) in small_certificates() {
        let n = d.vertex_count();
        let elements = bramble_elements(&d, &c.terminals, k);
        assert_eq!(min_hitting_set(n, &elements), k, "{d:?} T={:?}", c.terminals);
        let b = TBramble::new(&d, &c.terminals, k);
        for _ in 0..100 {
            let p = rng.gen_range(0.05..0.6);
            let x = random_subset(&mut rng, n, p);
            assert_eq!(b.is_hitting_set(&x), hits_all(&elements, &x), "X={x:?}");
        }
    }
}

#[test]
fn complement_order_matches_explicit_enumeration() {
    let mut rng = rng(43);
    for (d, c, k) in small_certificates().into_iter().take(8) {
        let n = d.vertex_count();
        let elements = bramble_elements(&d, &c.terminals, k);
        let b = TBramble::new(&d, &c.terminals, k);
        for _ in 0..20 {
            let x = random_subset(&mut rng, n, 0.25);
            let avoiding: Vec<VertexSet> = elements.iter().filter(|e| e.is_disjoint(&x)).cloned().collect();
            let order = min_hitting_set(n, &avoiding);
            for s in 0..=k {
                let got = b.complement_order_at_most(&x, s).unwrap();
                assert_eq!(got.is_some(), order <= s, "X={x:?} s={s}");
                if let Some(w) = got {
                    assert!(w.len() <= s && w.is_disjoint(&x));
                    assert!(hits_all(&avoiding, &w));
                }
            }
            // removing X costs at most |X| in order
            assert!(order + x.len() >= k);
        }
    }
}

#[test]
fn hitting_paths_hit() {
    for (d, c, k) in small_certificates() {
        let b = TBramble::new(&d, &c.terminals, k);
        let p = hitting_path(&b).unwrap();
        let on: VertexSet = p.vertices().iter().copied().collect();
        assert!(hits_all(&bramble_elements(&d, &c.terminals, k), &on));
        assert!(p.vertices().windows(2).all(|w| d.has_edge(w[0], w[1])));
    }
}

#[test]
fn hitting_path_on_cycle_with_all_terminals() {
    let d = bicycle(7);
    let t: VertexSet = (0..7).collect();
    let b = TBramble::new(&d, &t, 4);
    let p = hitting_path(&b).unwrap();
    assert!(b.is_hitting_set(&p.vertices().iter().copied().collect()));
}

#[test]
fn pipeline_on_small_cliques() {
    for k in 1..=2 {
        let d = biclique(3 * g(k));
        let Decomposition::Certificate(c) = decompose(&d, g(k)).unwrap() else { panic!() };
        let w = well_linked_set(&d, &c, k).unwrap();
        assert_eq!(w.anchors.len(), k);
        assert!(verify_well_linked(&d, &w.anchor_set()));
    }
}

#[test]
fn path_system_from_biclique_path() {
    let d = biclique(12);
    let t: VertexSet = d.vertices().collect();
    let b = TBramble::new(&d, &t, 5);
    let path = hitting_path(&b).unwrap();
    let a: VertexSet = path.vertices()[..8].iter().copied().collect();
    let sys = build_path_system(&d, &path, &a, 2, 2).unwrap();
    assert!(sys.check(&d, 2).is_empty());
    assert_eq!(sys.linkages.len(), 2);
    assert!(sys.linkages.values().all(|ps| ps.len() == 2));
}

#[test]
fn single_path_linkages_on_biclique() {
    let d = biclique(12);
    let t: VertexSet = d.vertices().collect();
    let b = TBramble::new(&d, &t, 5);
    let path = hitting_path(&b).unwrap();
    let a: VertexSet = path.vertices()[..4].iter().copied().collect();
    let sys = build_path_system(&d, &path, &a, 1, 2).unwrap();
    assert!(sys.check(&d, 1).is_empty());
    assert_eq!(sys.spines.len(), 2);
    assert_eq!(sys.linkages.len(), 2);
    assert!(sys.linkages.values().all(|ps| ps.len() == 1));
}
