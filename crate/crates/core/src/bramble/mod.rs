//! T-brambles and well-linked sets.
//!
//! The T-bramble of `(D, T, k)` consists of all induced strongly connected
//! subgraphs holding at least `k` vertices of `T`. It is never listed: a set
//! hits every element iff it leaves no strong component with `k` terminals,
//! and the order of the part avoiding `X` is a balanced-separator question on
//! `D \ X`.

mod hitting;
mod split;
mod system;

use crate::balsep::{balanced_separator, BalancedSeparatorInstance, BalancedSeparatorResult};
use crate::digraph::{scc_without, Digraph, GraphError, VertexSet};

pub use hitting::hitting_path;
pub use split::{extend_split, g, verify_well_linked, well_linked_set, SplitState, WellLinkedSet};
pub use system::{build_path_system, PathSystem};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum BrambleError {
    #[error("bramble elements do not touch; the terminal set is not linked enough")]
    ElementsApart,
    #[error("split level {level}: the order bound already holds before any vertex is taken")]
    EntryCondition { level: usize },
    #[error("split level {level}: the path ran out before the order bound was met")]
    PathExhausted { level: usize },
    #[error("certificate holds {got} terminals, expected {want}")]
    CertificateSize { got: usize, want: usize },
    #[error("expected {want} anchors, got {got}")]
    AnchorCount { got: usize, want: usize },
    #[error("anchor {0} is not on the path")]
    AnchorOffPath(usize),
    #[error("linkage {from} -> {to} has a separator of size {size}; the anchors are not well-linked")]
    NotLinked { from: usize, to: usize, size: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// The T-bramble of `digraph`, stored as its defining triple.
#[derive(Clone, Copy, Debug)]
pub struct TBramble<'a> {
    pub digraph: &'a Digraph,
    pub terminals: &'a VertexSet,
    pub k: usize,
}

impl<'a> TBramble<'a> {
    pub fn new(digraph: &'a Digraph, terminals: &'a VertexSet, k: usize) -> Self {
        TBramble { digraph, terminals, k }
    }

    /// Strong components of `D \ X` holding at least `k` terminals.
    pub(crate) fn heavy_components(&self, x: &VertexSet) -> Vec<Vec<usize>> {
        let d = self.digraph;
        let comps = scc_without(d, &d.mask(x));
        let counts = comps.counts_in(&d.mask(self.terminals));
        comps
            .components
            .into_iter()
            .zip(counts)
            .filter(|&(_, c)| c >= self.k.max(1))
            .map(|(comp, _)| comp)
            .collect()
    }

    /// Whether `x` meets every element.
    pub fn is_hitting_set(&self, x: &VertexSet) -> bool {
        self.heavy_components(x).is_empty()
    }

    /// Whether the elements avoiding `x` can be hit by at most `s` vertices;
    /// if so, such a hitting set (indices of `D`).
    pub fn complement_order_at_most(&self, x: &VertexSet, s: usize) -> Result<Option<VertexSet>, GraphError> {
        let d = self.digraph;
        d.check_set(x)?;
        let (sub, old) = d.without(x);
        let mut new_of = vec![usize::MAX; d.vertex_count()];
        for (i, &v) in old.iter().enumerate() {
            new_of[v] = i;
        }
        let t: VertexSet = self.terminals.difference(x).map(|&v| new_of[v]).collect();
        let r = self.k.saturating_sub(1);
        Ok(match balanced_separator(&BalancedSeparatorInstance::new(&sub, &t, r, s))? {
            BalancedSeparatorResult::Separator(z) => Some(z.iter().map(|&v| old[v]).collect()),
            BalancedSeparatorResult::Linked => None,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;

    #[test]
    fn k5_hitting_and_complement_order() {
        let d = examples::biclique(5);
        let t: VertexSet = d.vertices().collect();
        let b = TBramble::new(&d, &t, 3);
        assert!(!b.is_hitting_set(&VertexSet::new()));
        assert!(b.is_hitting_set(&[0, 1, 2].into()));
        assert!(!b.is_hitting_set(&[0, 1].into()));
        assert_eq!(b.complement_order_at_most(&[0].into(), 1).unwrap(), None);
        let w = b.complement_order_at_most(&[0].into(), 2).unwrap().unwrap();
        let both: VertexSet = w.union(&[0].into()).copied().collect();
        assert!(b.is_hitting_set(&both));
    }

    #[test]
    fn covering_all_terminals_empties_the_complement() {
        let d = examples::biclique(4);
        let t: VertexSet = [0, 1, 2].into();
        let b = TBramble::new(&d, &t, 2);
        assert_eq!(b.complement_order_at_most(&[0, 1, 2].into(), 0).unwrap(), Some(VertexSet::new()));
    }

    #[test]
    fn k_terminals_always_hit() {
        let d = examples::bicycle(7);
        let t: VertexSet = [0, 2, 4, 5, 6].into();
        let b = TBramble::new(&d, &t, 3);
        assert!(b.is_hitting_set(&[0, 2, 4].into()));
        assert!(b.is_hitting_set(&[4, 5, 6].into()));
    }
}
