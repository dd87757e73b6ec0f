//! Balanced separators.
//!
//! `Z` is a `(T, r)`-balanced separator when every strong component of
//! `D \ Z` holds at most `r` vertices of `T`. Such a `Z` exists with
//! `|Z| ≤ s` exactly when some ordered partition of `T` into blocks of size at
//! most `r` admits a linear vertex cut of size at most `s`; the search below
//! walks those partitions block by block and prunes with relaxed cut
//! problems.

mod brute;
mod partitions;

use crate::digraph::{scc_without, Digraph, FlowNetwork, GraphError, VertexSet};
use crate::lincut::{linear_vertex_cut, TerminalSequence};

pub use brute::brute_force_balanced_separator;
pub use partitions::{ordered_partitions, OrderedPartitions};

#[derive(Clone, Copy, Debug)]
pub struct BalancedSeparatorInstance<'a> {
    pub digraph: &'a Digraph,
    pub terminals: &'a VertexSet,
    pub r: usize,
    pub s: usize,
}

impl<'a> BalancedSeparatorInstance<'a> {
    pub fn new(digraph: &'a Digraph, terminals: &'a VertexSet, r: usize, s: usize) -> Self {
        BalancedSeparatorInstance {
            digraph,
            terminals,
            r,
            s,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BalancedSeparatorResult {
    Separator(VertexSet),
    /// No balanced separator of size at most `s` exists.
    Linked,
}

impl BalancedSeparatorResult {
    pub fn separator(&self) -> Option<&VertexSet> {
        match self {
            BalancedSeparatorResult::Separator(z) => Some(z),
            BalancedSeparatorResult::Linked => None,
        }
    }

    pub fn is_linked(&self) -> bool {
        matches!(self, BalancedSeparatorResult::Linked)
    }
}

/// Whether every strong component of `D \ Z` holds at most `r` vertices of `T`.
///
/// # Panics
/// If `t` or `z` name a vertex outside `D`.
pub fn is_balanced_separator(d: &Digraph, t: &VertexSet, r: usize, z: &VertexSet) -> bool {
    let removed = d.mask(z);
    let in_t = d.mask(t);
    scc_without(d, &removed).counts_in(&in_t).into_iter().all(|c| c <= r)
}

/// Answers that need no search: `Some` when `r` or `s` is large enough (or
/// `r` is zero) to decide the instance outright.
pub(crate) fn trivial_answer(t: &VertexSet, r: usize, s: usize) -> Option<BalancedSeparatorResult> {
    let k = t.len();
    if r >= k {
        return Some(BalancedSeparatorResult::Separator(VertexSet::new()));
    }
    if s >= k - r {
        // any s vertices of T leave at most r of them
        return Some(BalancedSeparatorResult::Separator(t.iter().take(s.min(k)).copied().collect()));
    }
    if r == 0 {
        return Some(BalancedSeparatorResult::Linked);
    }
    None
}

/// Find a `(T, r)`-balanced separator of size at most `s`, or report that `T`
/// is `(s, r)`-linked.
pub fn balanced_separator(inst: &BalancedSeparatorInstance<'_>) -> Result<BalancedSeparatorResult, GraphError> {
    let BalancedSeparatorInstance {
        digraph: d,
        terminals: t,
        r,
        s,
    } = *inst;
    d.check_set(t)?;
    if let Some(answer) = trivial_answer(t, r, s) {
        return Ok(answer);
    }
    if is_balanced_separator(d, t, r, &VertexSet::new()) {
        return Ok(BalancedSeparatorResult::Separator(VertexSet::new()));
    }
    if pairwise_robust(d, t, s) {
        return Ok(BalancedSeparatorResult::Linked);
    }
    let search = Search { d, t, r, s };
    let mut prefix = Vec::new();
    Ok(match search.run(&mut prefix, t.clone()) {
        Some(z) => BalancedSeparatorResult::Separator(z),
        None => BalancedSeparatorResult::Linked,
    })
}

/// True when no `s` vertices can separate any ordered pair of `T`: each pair
/// is joined by an edge or by `s + 1` internally disjoint paths. Deleting at
/// most `s` vertices then leaves the surviving `> r` terminals in a single
/// strong component, so `T` is linked.
fn pairwise_robust(d: &Digraph, t: &VertexSet, s: usize) -> bool {
    let n = d.vertex_count();
    let mut base = FlowNetwork::new(2 * n);
    for v in d.vertices() {
        base.add_arc(2 * v, 2 * v + 1, 1);
    }
    for (a, b, _) in d.edges() {
        if a != b {
            base.add_arc(2 * a + 1, 2 * b, FlowNetwork::INF);
        }
    }
    for &a in t {
        for &b in t {
            if a == b || d.has_edge(a, b) {
                continue;
            }
            let mut net = base.clone();
            // endpoints are not deletable here; route from a_out into b_in
            if net.max_flow(2 * a + 1, 2 * b, s as u64 + 1) <= s as u64 {
                return false;
            }
        }
    }
    true
}

struct Search<'a> {
    d: &'a Digraph,
    t: &'a VertexSet,
    r: usize,
    s: usize,
}

impl Search<'_> {
    /// Depth-first over ordered partitions extending `prefix`. The remaining
    /// terminals stand in as one final block, which only drops constraints,
    /// so an infeasible relaxation rules out every completion.
    ///
    /// Adjacent blocks with combined size at most `r` are never generated:
    /// merging them removes constraints and keeps block sizes legal, so such
    /// partitions are dominated.
    fn run(&self, prefix: &mut Vec<VertexSet>, rem: VertexSet) -> Option<VertexSet> {
        let mut blocks = prefix.clone();
        if !rem.is_empty() {
            blocks.push(rem.clone());
        }
        let cut = linear_vertex_cut(self.d, &TerminalSequence::new(blocks), self.s)
            .expect("terminals were checked")?;
        let z = cut.deleted_vertices();
        if is_balanced_separator(self.d, self.t, self.r, &z) {
            return Some(z);
        }
        debug_assert!(!rem.is_empty(), "a cut of a full partition is balanced");
        let last = prefix.last().map(|b| b.len());
        let elems: Vec<usize> = rem.iter().copied().collect();
        for block in blocks_of(&elems, self.r) {
            let size = block.len();
            if last.is_some_and(|l| l + size <= self.r) {
                continue;
            }
            let left = rem.len() - size;
            if left > 0 && size + left <= self.r {
                continue;
            }
            let next: VertexSet = rem.difference(&block).copied().collect();
            prefix.push(block);
            let found = self.run(prefix, next);
            prefix.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

/// Non-empty subsets of `elems` with at most `r` members, in increasing
/// bitmask order.
fn blocks_of(elems: &[usize], r: usize) -> impl Iterator<Item = VertexSet> + '_ {
    let full: u64 = if elems.len() == 64 { u64::MAX } else { (1 << elems.len()) - 1 };
    let mut cur = 0u64;
    std::iter::from_fn(move || loop {
        cur = (cur | !full).wrapping_add(1) & full;
        if cur == 0 {
            return None;
        }
        if cur.count_ones() as usize <= r {
            return Some((0..elems.len()).filter(|&i| cur >> i & 1 == 1).map(|i| elems[i]).collect());
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;

    fn solve(d: &Digraph, t: &VertexSet, r: usize, s: usize) -> BalancedSeparatorResult {
        balanced_separator(&BalancedSeparatorInstance::new(d, t, r, s)).unwrap()
    }

    #[test]
    fn dag_has_empty_separator() {
        let d = Digraph::from_labels(&[], &[("a", "b"), ("b", "c"), ("a", "c")]);
        let t: VertexSet = d.vertices().collect();
        assert_eq!(solve(&d, &t, 1, 0), BalancedSeparatorResult::Separator(VertexSet::new()));
        assert!(is_balanced_separator(&d, &t, 1, &VertexSet::new()));
    }

    #[test]
    fn detour_triangle_single_vertex() {
        let d = examples::detour_triangle();
        let t = d.set_of(&["v1", "v2", "v3"]).unwrap();
        assert!(is_balanced_separator(&d, &t, 1, &d.set_of(&["v1"]).unwrap()));
        let z = solve(&d, &t, 1, 1);
        let z = z.separator().unwrap();
        assert_eq!(z.len(), 1);
        assert!(is_balanced_separator(&d, &t, 1, z));
    }

    #[test]
    fn k5_two_deletions_leave_a_triangle() {
        let d = examples::biclique(5);
        let t: VertexSet = d.vertices().collect();
        assert!(!is_balanced_separator(&d, &t, 2, &[0, 1].into()));
        assert!(solve(&d, &t, 2, 2).is_linked());
    }

    #[test]
    fn linked_verdict_without_the_shortcut() {
        // K4 with a pendant terminal: x is cut off by one deletion, yet every
        // single deletion leaves three terminals together
        let d = examples::bidirected(&[("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d"), ("a", "x")]);
        let t: VertexSet = d.vertices().collect();
        assert!(!pairwise_robust(&d, &t, 1));
        assert!(solve(&d, &t, 2, 1).is_linked());
        assert_eq!(brute_force_balanced_separator(&d, &t, 2, 1), BalancedSeparatorResult::Linked);
    }

    #[test]
    fn cycle_terminals_split_by_two_deletions() {
        let d = examples::bicycle(8);
        let t: VertexSet = [0, 2, 4, 6].into();
        let z = solve(&d, &t, 1, 2);
        let z = z.separator().unwrap();
        assert_eq!(z.len(), 2);
        assert!(is_balanced_separator(&d, &t, 1, z));
        assert!(solve(&d, &t, 2, 0).is_linked());
    }

    #[test]
    fn linked_triangles_drawn_separator() {
        let d = examples::linked_triangles();
        let t = d.set_of(&["v1", "v2", "v3", "v4", "v5", "v6", "v7"]).unwrap();
        let drawn = d.set_of(&["v4", "v9"]).unwrap();
        assert!(is_balanced_separator(&d, &t, 3, &drawn));
        let z = solve(&d, &t, 3, drawn.len());
        let z = z.separator().unwrap();
        assert!(z.len() <= drawn.len());
        assert!(is_balanced_separator(&d, &t, 3, z));
    }

    #[test]
    fn normalization() {
        let d = examples::biclique(4);
        let t: VertexSet = d.vertices().collect();
        assert_eq!(solve(&d, &t, 4, 0), BalancedSeparatorResult::Separator(VertexSet::new()));
        assert_eq!(solve(&d, &t, 2, 2), BalancedSeparatorResult::Separator([0, 1].into()));
        assert!(solve(&d, &t, 0, 3).is_linked());
    }

    #[test]
    fn unknown_terminal_is_an_error() {
        let d = examples::biclique(3);
        let t: VertexSet = [7].into();
        assert!(balanced_separator(&BalancedSeparatorInstance::new(&d, &t, 1, 1)).is_err());
    }
}
