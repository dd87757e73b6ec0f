use crate::digraph::{Digraph, VertexSet};

use super::network::CapGraph;

/// Vertex-splitting reduction from vertex cuts to edge cuts.
///
/// Every vertex `v` becomes `v_in = 2v` and `v_out = 2v + 1` joined by a unit
/// arc; original edges and terminal attachments get capacity `s + 1`, so a
/// cut of cost at most `s` uses unit arcs only. Each terminal `v` gets an
/// extra node `v'` with arcs `v' → v_in` and `v_out → v'`, and the block
/// sequence is replayed on those nodes.
#[derive(Clone, Debug)]
pub struct SplitGraph {
    pub graph: CapGraph,
    pub terminal_blocks: Vec<Vec<usize>>,
    vertices: usize,
}

impl SplitGraph {
    pub fn build(d: &Digraph, blocks: &[VertexSet], s: usize) -> Self {
        let n = d.vertex_count();
        let heavy = s as u64 + 1;
        let terminals: usize = blocks.iter().map(|b| b.len()).sum();
        let mut graph = CapGraph::new(2 * n + terminals);
        for v in d.vertices() {
            graph.add_arc(2 * v, 2 * v + 1, 1);
        }
        for (t, h, c) in d.edges() {
            graph.add_arc(2 * t + 1, 2 * h, heavy * c as u64);
        }
        let mut next = 2 * n;
        let mut terminal_blocks = Vec::with_capacity(blocks.len());
        for b in blocks {
            let mut nodes = Vec::with_capacity(b.len());
            for &v in b {
                graph.add_arc(next, 2 * v, heavy);
                graph.add_arc(2 * v + 1, next, heavy);
                nodes.push(next);
                next += 1;
            }
            terminal_blocks.push(nodes);
        }
        SplitGraph {
            graph,
            terminal_blocks,
            vertices: n,
        }
    }

    /// The vertex whose unit arc is `arc`, if it is one.
    pub fn vertex_of_arc(&self, arc: usize) -> Option<usize> {
        (arc < self.vertices).then_some(arc)
    }
}
