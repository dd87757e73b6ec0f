//! Small named digraphs used in documentation and tests.

use crate::digraph::{Digraph, DigraphBuilder};

/// Seven vertices `a..g` on three bidirected triangles: `a b c` in the
/// middle, `b d e` and `c f g` hanging off it.
pub fn triangle_fans() -> Digraph {
    bidirected(&[
        ("a", "b"),
        ("a", "c"),
        ("b", "c"),
        ("b", "d"),
        ("b", "e"),
        ("c", "f"),
        ("c", "g"),
        ("d", "e"),
        ("f", "g"),
    ])
}

/// Triangle `v1 → v2 → v3 → v1` where every side is doubled by a two-edge
/// detour: `v1 → x12 → v2`, `v2 → x23 → v3`, `v3 → x13 → v1`.
pub fn detour_triangle() -> Digraph {
    Digraph::from_labels(
        &[],
        &[
            ("v1", "v2"),
            ("v2", "v3"),
            ("v3", "v1"),
            ("v1", "x12"),
            ("x12", "v2"),
            ("v3", "x13"),
            ("x13", "v1"),
            ("v2", "x23"),
            ("x23", "v3"),
        ],
    )
}

/// Nine vertices `v1..v7, v9, v10` forming two directed triangles
/// `{v1, v2, v3}` and `{v5, v6, v7}` connected through `v4`, `v9` and `v10`.
pub fn linked_triangles() -> Digraph {
    Digraph::from_labels(
        &[],
        &[
            ("v1", "v3"),
            ("v3", "v5"),
            ("v5", "v7"),
            ("v6", "v4"),
            ("v4", "v2"),
            ("v2", "v1"),
            ("v3", "v4"),
            ("v6", "v5"),
            ("v3", "v2"),
            ("v7", "v6"),
            ("v9", "v2"),
            ("v6", "v10"),
            ("v10", "v9"),
        ],
    )
}

pub fn bidirected(pairs: &[(&str, &str)]) -> Digraph {
    let mut b = DigraphBuilder::new();
    for (u, v) in pairs {
        b.edge(*u, *v).edge(*v, *u);
    }
    b.build()
}

/// Bidirected complete graph on vertices `0..n`.
pub fn biclique(n: usize) -> Digraph {
    Digraph::from_index_edges(
        n,
        (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))),
    )
}

/// Bidirected cycle on vertices `0..n`.
pub fn bicycle(n: usize) -> Digraph {
    let mut edges = Vec::new();
    for i in 0..n {
        let j = (i + 1) % n;
        if i != j {
            edges.push((i, j));
            edges.push((j, i));
        }
    }
    Digraph::from_index_edges(n, edges)
}
