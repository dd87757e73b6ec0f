//! Linear edge and vertex cuts.
//!
//! Given an ordered sequence of terminal blocks `T₁, …, T_ℓ`, a linear cut
//! destroys every path from a block to a later one. The vertex version is
//! reduced to the edge version on the split graph ([`SplitGraph`]), which in
//! turn is solved by [`network::min_linear_cut`].

mod brute;
pub mod network;
mod split;

use std::collections::BTreeMap;

use crate::digraph::{Digraph, GraphError, VertexSet};

pub use brute::brute_force_vertex_cut;
pub use network::CapGraph;
pub use split::SplitGraph;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum LinCutError {
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Ordered terminal blocks. Earlier blocks must not reach later ones.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TerminalSequence {
    blocks: Vec<VertexSet>,
}

impl TerminalSequence {
    pub fn new(blocks: Vec<VertexSet>) -> Self {
        TerminalSequence { blocks }
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Vertices lying in two or more blocks, and the blocks with those
    /// vertices and empty blocks dropped.
    pub fn normalized(&self) -> (Vec<VertexSet>, VertexSet) {
        let mut seen = VertexSet::new();
        let mut forced = VertexSet::new();
        for b in &self.blocks {
            for &v in b {
                if !seen.insert(v) {
                    forced.insert(v);
                }
            }
        }
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.difference(&forced).copied().collect::<VertexSet>())
            .filter(|b| !b.is_empty())
            .collect();
        (blocks, forced)
    }

    fn check(&self, d: &Digraph) -> Result<(), GraphError> {
        self.blocks.iter().try_for_each(|b| d.check_set(b))
    }

    /// Whether deleting `removed` leaves no path from a block to a later one.
    pub fn is_separated_by(&self, d: &Digraph, removed: &VertexSet) -> bool {
        let gone = d.mask(removed);
        let mut later = vec![false; d.vertex_count()];
        for b in self.blocks.iter().rev() {
            let reach = crate::digraph::reach_forward(d, b, &gone);
            if (0..d.vertex_count()).any(|v| reach[v] && later[v]) {
                return false;
            }
            for &v in b {
                if !gone[v] {
                    later[v] = true;
                }
            }
        }
        true
    }

    /// Same check for an edge cut given as `(tail, head)` pairs; every copy of a
    /// listed pair is deleted.
    pub fn is_separated_by_edges(&self, d: &Digraph, cut: &BTreeMap<(usize, usize), u32>) -> bool {
        let mut b = crate::digraph::DigraphBuilder::new();
        for v in d.vertices() {
            b.vertex(d.id(v).clone());
        }
        for (t, h, c) in d.edges() {
            if !cut.contains_key(&(t, h)) {
                b.edge_with_multiplicity(d.id(t).clone(), d.id(h).clone(), c);
            }
        }
        self.is_separated_by(&b.build(), &VertexSet::new())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CutKind {
    Vertex,
    Edge,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutCertificate {
    pub kind: CutKind,
    /// Chosen vertices (vertex cuts).
    pub vertices: VertexSet,
    /// Chosen edges with the number of parallel copies removed (edge cuts).
    pub edges: BTreeMap<(usize, usize), u32>,
    /// Vertices shared by two blocks, deleted before solving.
    pub forced: VertexSet,
}

impl CutCertificate {
    /// Every vertex the certificate deletes, forced ones included.
    pub fn deleted_vertices(&self) -> VertexSet {
        self.vertices.union(&self.forced).copied().collect()
    }

    pub fn size(&self) -> usize {
        self.vertices.len() + self.forced.len() + self.edges.values().map(|&c| c as usize).sum::<usize>()
    }
}

/// Minimum edge cut of size at most `s` (parallel copies counted) separating
/// every block from the later ones.
pub fn linear_edge_cut(d: &Digraph, t: &TerminalSequence, s: usize) -> Result<Option<CutCertificate>, LinCutError> {
    t.check(d)?;
    let (blocks, forced) = t.normalized();
    if !forced.is_empty() {
        // a shared vertex is a zero-length path between two blocks
        return Ok(None);
    }
    let mut g = CapGraph::new(d.vertex_count());
    let mut pairs = Vec::new();
    for (u, v, c) in d.edges() {
        g.add_arc(u, v, c as u64);
        pairs.push((u, v, c));
    }
    let blocks: Vec<Vec<usize>> = blocks.iter().map(|b| b.iter().copied().collect()).collect();
    Ok(network::min_linear_cut(&g, &blocks, s as u64).map(|arcs| CutCertificate {
        kind: CutKind::Edge,
        vertices: VertexSet::new(),
        edges: arcs.iter().map(|&a| ((pairs[a].0, pairs[a].1), pairs[a].2)).collect(),
        forced: VertexSet::new(),
    }))
}

/// Minimum vertex set of size at most `s` whose deletion separates every
/// block from the later ones. Terminal vertices may be deleted.
pub fn linear_vertex_cut(d: &Digraph, t: &TerminalSequence, s: usize) -> Result<Option<CutCertificate>, LinCutError> {
    t.check(d)?;
    let (blocks, forced) = t.normalized();
    if forced.len() > s {
        return Ok(None);
    }
    let budget = s - forced.len();
    if blocks.len() < 2 {
        return Ok(Some(vertex_cert(VertexSet::new(), forced)));
    }
    let (sub, old) = d.without(&forced);
    let mut new_of = vec![usize::MAX; d.vertex_count()];
    for (i, &v) in old.iter().enumerate() {
        new_of[v] = i;
    }
    let blocks: Vec<VertexSet> = blocks.iter().map(|b| b.iter().map(|&v| new_of[v]).collect()).collect();
    let split = SplitGraph::build(&sub, &blocks, budget);
    let cut = network::min_linear_cut(&split.graph, &split.terminal_blocks, budget as u64);
    Ok(cut.map(|arcs| {
        let chosen = arcs
            .iter()
            .map(|&a| split.vertex_of_arc(a).expect("budget admits only vertex arcs"))
            .map(|v| old[v])
            .collect();
        vertex_cert(chosen, forced)
    }))
}

fn vertex_cert(vertices: VertexSet, forced: VertexSet) -> CutCertificate {
    CutCertificate {
        kind: CutKind::Vertex,
        vertices,
        edges: BTreeMap::new(),
        forced,
    }
}
