use crate::digraph::{Digraph, VertexSet};

use super::{is_balanced_separator, trivial_answer, BalancedSeparatorResult};

/// Exhaustive search over all `Z` with `|Z| ≤ s`, smallest first and
/// lexicographic within a size. Meant for small graphs.
pub fn brute_force_balanced_separator(d: &Digraph, t: &VertexSet, r: usize, s: usize) -> BalancedSeparatorResult {
    if let Some(answer) = trivial_answer(t, r, s) {
        return answer;
    }
    let n = d.vertex_count();
    for size in 0..=s.min(n) {
        let mut pick: Vec<usize> = (0..size).collect();
        loop {
            let z: VertexSet = pick.iter().copied().collect();
            if is_balanced_separator(d, t, r, &z) {
                return BalancedSeparatorResult::Separator(z);
            }
            if !advance(&mut pick, n) {
                break;
            }
        }
    }
    BalancedSeparatorResult::Linked
}

fn advance(pick: &mut [usize], n: usize) -> bool {
    let k = pick.len();
    match (0..k).rev().find(|&i| pick[i] < n - k + i) {
        Some(i) => {
            pick[i] += 1;
            for j in i + 1..k {
                pick[j] = pick[j - 1] + 1;
            }
            true
        }
        None => false,
    }
}
