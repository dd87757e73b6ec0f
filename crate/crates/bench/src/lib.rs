//! Shared benchmark inputs.

use dirtw_core::generate::gnm;
use dirtw_core::{Digraph, VertexSet};

/// Random digraph with average out-degree two and its first five vertices
/// as terminals.
pub fn balsep_instance(n: usize, seed: u64) -> (Digraph, VertexSet) {
    (gnm(n, 2 * n, seed), (0..5.min(n)).collect())
}
