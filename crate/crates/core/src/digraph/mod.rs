//! Directed multigraphs and the reachability, strong-component and
//! disjoint-path subroutines the rest of the crate is built on.
//!
//! Vertices are addressed by dense indices `0..n`. Indices follow the
//! canonical [`VertexId`] order, so iterating indices in ascending order is
//! the canonical tie-break used throughout the crate.

mod flow;
mod io;
mod menger;
mod path;
mod reach;
mod scc;

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

pub use flow::FlowNetwork;
pub use io::ParseError;
pub use menger::{menger, MengerOutcome};
pub use path::Path;
pub use reach::{guard_witness, is_guarded, reach_backward, reach_forward, reachable};
pub use scc::{scc, scc_without, SccDecomposition};

/// A set of vertex indices. Ordered so that iteration is canonical.
pub type VertexSet = BTreeSet<usize>;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex index {0} is out of range")]
    UnknownVertex(usize),
    #[error("unknown vertex label `{0}`")]
    UnknownLabel(String),
    #[error("guarded set and guard overlap in {0} vertices")]
    GuardOverlap(usize),
    #[error("vertices {0} and {1} are not joined by an edge")]
    MissingEdge(usize, usize),
    #[error("vertex {0} repeats on the path")]
    RepeatedVertex(usize),
}

/// Stable vertex label.
///
/// Labels consisting only of ASCII digits sort numerically and come before
/// every other label; the rest sort lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexId(Arc<str>);

impl VertexId {
    pub fn new(label: impl AsRef<str>) -> Self {
        VertexId(Arc::from(label.as_ref()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    fn numeric(&self) -> Option<&str> {
        let s: &str = &self.0;
        if !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()) {
            Some(s.trim_start_matches('0'))
        } else {
            None
        }
    }
}

impl Ord for VertexId {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.numeric(), other.numeric()) {
            // digit strings without leading zeros compare by length, then lexically
            (Some(a), Some(b)) => a
                .len()
                .cmp(&b.len())
                .then_with(|| a.cmp(b))
                .then_with(|| self.0.cmp(&other.0)),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => self.0.cmp(&other.0),
        }
    }
}

impl PartialOrd for VertexId {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for VertexId {
    fn from(s: &str) -> Self {
        VertexId::new(s)
    }
}

/// Directed multigraph. Parallel edges are stored as multiplicities and loops
/// are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    ids: Vec<VertexId>,
    index: HashMap<VertexId, usize>,
    out: Vec<Vec<(usize, u32)>>,
    inc: Vec<Vec<(usize, u32)>>,
    edge_count: usize,
}

/// Collects labelled vertices and edges, then freezes them into a [`Digraph`]
/// with canonical vertex indices.
#[derive(Clone, Debug, Default)]
pub struct DigraphBuilder {
    vertices: BTreeSet<VertexId>,
    edges: BTreeMap<(VertexId, VertexId), u32>,
}

impl DigraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(&mut self, v: impl Into<VertexId>) -> &mut Self {
        self.vertices.insert(v.into());
        self
    }

    pub fn edge(&mut self, tail: impl Into<VertexId>, head: impl Into<VertexId>) -> &mut Self {
        self.edge_with_multiplicity(tail, head, 1)
    }

    pub fn edge_with_multiplicity(
        &mut self,
        tail: impl Into<VertexId>,
        head: impl Into<VertexId>,
        count: u32,
    ) -> &mut Self {
        let (t, h) = (tail.into(), head.into());
        self.vertices.insert(t.clone());
        self.vertices.insert(h.clone());
        if count > 0 {
            *self.edges.entry((t, h)).or_insert(0) += count;
        }
        self
    }

    pub fn build(&self) -> Digraph {
        let ids: Vec<VertexId> = self.vertices.iter().cloned().collect();
        let index: HashMap<VertexId, usize> =
            ids.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        let n = ids.len();
        let mut out = vec![Vec::new(); n];
        let mut inc = vec![Vec::new(); n];
        let mut edge_count = 0usize;
        for ((t, h), &c) in &self.edges {
            let (t, h) = (index[t], index[h]);
            out[t].push((h, c));
            inc[h].push((t, c));
            edge_count += c as usize;
        }
        for list in out.iter_mut().chain(inc.iter_mut()) {
            list.sort_unstable();
        }
        Digraph {
            ids,
            index,
            out,
            inc,
            edge_count,
        }
    }
}

impl Digraph {
    /// Graph on vertices `0..n` labelled by their decimal index.
    pub fn from_index_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut b = DigraphBuilder::new();
        for v in 0..n {
            b.vertex(VertexId::new(v.to_string()));
        }
        for (t, h) in edges {
            assert!(t < n && h < n, "edge ({t}, {h}) outside 0..{n}");
            b.edge(VertexId::new(t.to_string()), VertexId::new(h.to_string()));
        }
        b.build()
    }

    /// Convenience constructor from labelled edges and extra isolated vertices.
    pub fn from_labels(vertices: &[&str], edges: &[(&str, &str)]) -> Self {
        let mut b = DigraphBuilder::new();
        for v in vertices {
            b.vertex(*v);
        }
        for (t, h) in edges {
            b.edge(*t, *h);
        }
        b.build()
    }

    pub fn vertex_count(&self) -> usize {
        self.ids.len()
    }

    /// Number of edges counted with multiplicity.
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.ids.len()
    }

    pub fn id(&self, v: usize) -> &VertexId {
        &self.ids[v]
    }

    pub fn label(&self, v: usize) -> &str {
        self.ids[v].as_str()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(&VertexId::new(label)).copied()
    }

    /// Resolves a list of labels to a vertex set.
    pub fn set_of(&self, labels: &[&str]) -> Result<VertexSet, GraphError> {
        labels
            .iter()
            .map(|l| {
                self.index_of(l)
                    .ok_or_else(|| GraphError::UnknownLabel(l.to_string()))
            })
            .collect()
    }

    pub fn labels_of<'a>(&'a self, set: impl IntoIterator<Item = &'a usize>) -> Vec<String> {
        set.into_iter().map(|&v| self.label(v).to_string()).collect()
    }

    /// Out-neighbours with edge multiplicities, ascending by head.
    pub fn out_edges(&self, v: usize) -> &[(usize, u32)] {
        &self.out[v]
    }

    /// In-neighbours with edge multiplicities, ascending by tail.
    pub fn in_edges(&self, v: usize) -> &[(usize, u32)] {
        &self.inc[v]
    }

    pub fn successors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.out[v].iter().map(|&(h, _)| h)
    }

    pub fn predecessors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.inc[v].iter().map(|&(t, _)| t)
    }

    pub fn multiplicity(&self, tail: usize, head: usize) -> u32 {
        self.out[tail]
            .binary_search_by_key(&head, |&(h, _)| h)
            .map(|i| self.out[tail][i].1)
            .unwrap_or(0)
    }

    pub fn has_edge(&self, tail: usize, head: usize) -> bool {
        self.multiplicity(tail, head) > 0
    }

    /// All `(tail, head, multiplicity)` triples in canonical order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(t, l)| l.iter().map(move |&(h, c)| (t, h, c)))
    }

    pub(crate) fn check_set<'a>(
        &self,
        set: impl IntoIterator<Item = &'a usize>,
    ) -> Result<(), GraphError> {
        for &v in set {
            if v >= self.vertex_count() {
                return Err(GraphError::UnknownVertex(v));
            }
        }
        Ok(())
    }

    /// Boolean membership mask for `set`.
    pub fn mask<'a>(&self, set: impl IntoIterator<Item = &'a usize>) -> Vec<bool> {
        let mut m = vec![false; self.vertex_count()];
        for &v in set {
            m[v] = true;
        }
        m
    }

    /// `D \ removed`, together with the map from new indices to old ones.
    pub fn without(&self, removed: &VertexSet) -> (Digraph, Vec<usize>) {
        let gone = self.mask(removed);
        self.induced_by_mask(&gone.iter().map(|g| !g).collect::<Vec<_>>())
    }

    /// Subgraph induced by `keep`, together with the map from new indices to old ones.
    pub fn induced(&self, keep: &VertexSet) -> (Digraph, Vec<usize>) {
        self.induced_by_mask(&self.mask(keep))
    }

    fn induced_by_mask(&self, keep: &[bool]) -> (Digraph, Vec<usize>) {
        let old: Vec<usize> = self.vertices().filter(|&v| keep[v]).collect();
        let mut new_of = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in old.iter().enumerate() {
            new_of[v] = i;
        }
        let ids: Vec<VertexId> = old.iter().map(|&v| self.ids[v].clone()).collect();
        let index = ids.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        let mut out = vec![Vec::new(); old.len()];
        let mut inc = vec![Vec::new(); old.len()];
        let mut edge_count = 0;
        for (i, &v) in old.iter().enumerate() {
            for &(h, c) in &self.out[v] {
                if keep[h] {
                    out[i].push((new_of[h], c));
                    inc[new_of[h]].push((i, c));
                    edge_count += c as usize;
                }
            }
        }
        for l in inc.iter_mut() {
            l.sort_unstable();
        }
        (
            Digraph {
                ids,
                index,
                out,
                inc,
                edge_count,
            },
            old,
        )
    }
}
