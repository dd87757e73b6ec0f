//! Independent oracles shared by the integration tests. Nothing here calls
//! the library's search code; graphs are read through their edge lists only.
#![allow(dead_code)]

use dirtw_core::digraph::Digraph;
use dirtw_core::VertexSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random digraph on `n` vertices with each ordered pair an edge with
/// probability `p` (no loops).
pub fn random_digraph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Digraph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a != b && rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Digraph::from_index_edges(n, edges)
}

pub fn random_subset(rng: &mut ChaCha8Rng, n: usize, p: f64) -> VertexSet {
    (0..n).filter(|_| rng.gen_bool(p)).collect()
}

/// `closure[a][b]`: a walk from `a` to `b` avoids `removed` (reflexive on
/// kept vertices). Plain Floyd-Warshall.
pub fn closure(d: &Digraph, removed: &VertexSet) -> Vec<Vec<bool>> {
    let n = d.vertex_count();
    let mut c = vec![vec![false; n]; n];
    for a in 0..n {
        if removed.contains(&a) {
            continue;
        }
        c[a][a] = true;
        for (t, h, _) in d.edges() {
            if t == a && !removed.contains(&h) {
                c[a][h] = true;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            if c[i][k] {
                for j in 0..n {
                    if c[k][j] {
                        c[i][j] = true;
                    }
                }
            }
        }
    }
    c
}

/// Largest number of `t`-vertices sharing a strong component of `D \ z`.
pub fn heaviest_component(d: &Digraph, t: &VertexSet, z: &VertexSet) -> usize {
    let c = closure(d, z);
    t.iter()
        .filter(|v| !z.contains(v))
        .map(|&a| t.iter().filter(|&&b| !z.contains(&b) && c[a][b] && c[b][a]).count())
        .max()
        .unwrap_or(0)
}

pub fn balanced(d: &Digraph, t: &VertexSet, r: usize, z: &VertexSet) -> bool {
    heaviest_component(d, t, z) <= r
}

/// All subsets of `0..n` of size at most `s`, by size.
pub fn subsets_up_to(n: usize, s: usize) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = (0u32..1 << n)
        .filter(|m| m.count_ones() as usize <= s)
        .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
        .collect();
    out.sort_by_key(|z: &VertexSet| z.len());
    out
}

/// Minimum size of a `(T, r)`-balanced separator, if one of size at most `s` exists.
pub fn min_balanced(d: &Digraph, t: &VertexSet, r: usize, s: usize) -> Option<usize> {
    subsets_up_to(d.vertex_count(), s)
        .into_iter()
        .find(|z| balanced(d, t, r, z))
        .map(|z| z.len())
}

/// Whether deleting `z` kills every path from a block to a later block.
pub fn linear_separated(d: &Digraph, blocks: &[VertexSet], z: &VertexSet) -> bool {
    let c = closure(d, z);
    for i in 0..blocks.len() {
        for j in i + 1..blocks.len() {
            for &a in &blocks[i] {
                for &b in &blocks[j] {
                    if !z.contains(&a) && !z.contains(&b) && c[a][b] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

pub fn min_linear_vertex_cut(d: &Digraph, blocks: &[VertexSet], s: usize) -> Option<usize> {
    subsets_up_to(d.vertex_count(), s)
        .into_iter()
        .find(|z| linear_separated(d, blocks, z))
        .map(|z| z.len())
}

/// Ordered partitions of an `n`-set counted by the first-block recursion
/// `a(n) = Σ_{j=1..n} C(n, j) a(n − j)`.
pub fn fubini(n: usize) -> u64 {
    let mut a = vec![1u64; n + 1];
    for m in 1..=n {
        a[m] = (1..=m).map(|j| binom(m, j) * a[m - j]).sum();
    }
    a[n]
}

pub fn binom(n: usize, k: usize) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}

/// Strong connectivity of the subgraph induced by `set` (non-empty).
pub fn strongly_connected(d: &Digraph, set: &VertexSet) -> bool {
    let removed: VertexSet = d.vertices().filter(|v| !set.contains(v)).collect();
    let c = closure(d, &removed);
    let first = *set.iter().next().expect("non-empty");
    set.iter().all(|&v| c[first][v] && c[v][first])
}

/// Every vertex set inducing a strongly connected subgraph with at least `k`
/// vertices of `t`, listed by bitmask. Only for `n ≤ 16`.
pub fn bramble_elements(d: &Digraph, t: &VertexSet, k: usize) -> Vec<VertexSet> {
    let n = d.vertex_count();
    assert!(n <= 16);
    (1u32..1 << n)
        .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect::<VertexSet>())
        .filter(|s| s.intersection(t).count() >= k.max(1) && strongly_connected(d, s))
        .collect()
}

pub fn hits_all(elements: &[VertexSet], x: &VertexSet) -> bool {
    elements.iter().all(|e| !e.is_disjoint(x))
}

/// Size of a smallest set meeting every element.
pub fn min_hitting_set(n: usize, elements: &[VertexSet]) -> usize {
    subsets_up_to(n, n)
        .into_iter()
        .find(|x| hits_all(elements, x))
        .map_or(0, |x| x.len())
}
