//! Seeded instance generators. The same family, size and seed always give
//! the same digraph.

use std::fmt;
use std::str::FromStr;

use rand::seq::{index, SliceRandom};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::digraph::Digraph;
use crate::examples;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// Random acyclic digraph with about `2n` edges.
    Dag,
    /// Bidirected complete graph.
    Biclique,
    /// Bidirected cycle.
    Bicycle,
    /// Uniform `G(n, m)` digraph with `m = 3n` (capped), no loops.
    Random,
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "dag" => Ok(Family::Dag),
            "biclique" => Ok(Family::Biclique),
            "bicycle" => Ok(Family::Bicycle),
            "random" => Ok(Family::Random),
            other => Err(format!("unknown family `{other}` (dag, biclique, bicycle, random)")),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Dag => "dag",
            Family::Biclique => "biclique",
            Family::Bicycle => "bicycle",
            Family::Random => "random",
        })
    }
}

pub fn generate(family: Family, n: usize, seed: u64) -> Digraph {
    match family {
        Family::Dag => random_dag(n, 2 * n, seed),
        Family::Biclique => examples::biclique(n),
        Family::Bicycle => examples::bicycle(n),
        Family::Random => gnm(n, 3 * n, seed),
    }
}

/// `m` distinct loop-free ordered pairs chosen uniformly (capped at `n(n-1)`).
pub fn gnm(n: usize, m: usize, seed: u64) -> Digraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let total = n * n.saturating_sub(1);
    let edges = index::sample(&mut rng, total, m.min(total)).into_iter().map(|i| {
        let (a, b) = (i / (n - 1), i % (n - 1));
        (a, if b >= a { b + 1 } else { b })
    });
    Digraph::from_index_edges(n, edges.collect::<Vec<_>>())
}

/// `m` distinct edges, all pointing forward in a hidden random order of the
/// vertices.
pub fn random_dag(n: usize, m: usize, seed: u64) -> Digraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let total = n * n.saturating_sub(1) / 2;
    let edges: Vec<(usize, usize)> = index::sample(&mut rng, total, m.min(total))
        .into_iter()
        .map(|mut idx| {
            // unrank idx among pairs (i, j) with i < j, row by row
            let mut i = 0;
            while idx >= n - 1 - i {
                idx -= n - 1 - i;
                i += 1;
            }
            (order[i], order[i + 1 + idx])
        })
        .collect();
    Digraph::from_index_edges(n, edges)
}
