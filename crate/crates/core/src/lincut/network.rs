//! Minimum linear edge cuts on capacitated multigraphs by branching over
//! important cuts.
//!
//! The first block must be separated from the union of all later ones, and
//! some optimal solution contains an important `(T₁, T₂ ∪ … ∪ T_ℓ)`-cut.
//! For every important cut within budget we delete it and recurse on the
//! remaining blocks. Important cuts are enumerated by the usual
//! farthest-minimum-cut branching: either the canonical arc leaving the
//! farthest minimum cut is in the cut, or its head joins the source side.

use crate::digraph::FlowNetwork;

/// Arc bundle `tail → head` carrying `capacity` parallel copies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Arc {
    pub tail: usize,
    pub head: usize,
    pub capacity: u64,
}

#[derive(Clone, Debug, Default)]
pub struct CapGraph {
    pub nodes: usize,
    pub arcs: Vec<Arc>,
}

impl CapGraph {
    pub fn new(nodes: usize) -> Self {
        CapGraph {
            nodes,
            arcs: Vec::new(),
        }
    }

    pub fn add_arc(&mut self, tail: usize, head: usize, capacity: u64) -> usize {
        self.arcs.push(Arc {
            tail,
            head,
            capacity,
        });
        self.arcs.len() - 1
    }

    /// Total capacity of `count` arcs, the cost of cutting them.
    pub fn cost(&self, cut: &[usize]) -> u64 {
        cut.iter().map(|&a| self.arcs[a].capacity).sum()
    }
}

struct Search<'g> {
    graph: &'g CapGraph,
    removed: Vec<bool>,
}

impl<'g> Search<'g> {
    /// Max-flow from `source` to `sink` (node masks) in the graph minus removed
    /// arcs, capped at `limit + 1`. Returns the flow value and, when at most
    /// `limit`, the farthest minimum cut's source side.
    fn farthest_min_cut(&self, source: &[bool], sink: &[bool], limit: u64) -> Option<(u64, Vec<bool>)> {
        let n = self.graph.nodes;
        let (s, t) = (n, n + 1);
        let mut net = FlowNetwork::new(n + 2);
        for (i, a) in self.graph.arcs.iter().enumerate() {
            if !self.removed[i] && a.capacity > 0 && a.tail != a.head {
                net.add_arc(a.tail, a.head, a.capacity);
            }
        }
        for v in 0..n {
            if source[v] {
                net.add_arc(s, v, FlowNetwork::INF);
            }
            if sink[v] {
                net.add_arc(v, t, FlowNetwork::INF);
            }
        }
        let value = net.max_flow(s, t, limit + 1);
        if value > limit {
            return None;
        }
        let to_sink = net.residual_to(t);
        Some((value, (0..n).map(|v| !to_sink[v]).collect()))
    }

    /// Calls `visit` with every important `(source, sink)`-cut of cost at most
    /// `budget` (possibly with some non-important cuts as well). Stops as soon
    /// as `visit` returns `true`, and returns whether it did.
    fn important_cuts(
        &mut self,
        source: Vec<bool>,
        sink: &[bool],
        budget: u64,
        chosen: &mut Vec<usize>,
        visit: &mut dyn FnMut(&mut Self, &[usize], u64) -> bool,
    ) -> bool {
        let Some((value, side)) = self.farthest_min_cut(&source, sink, budget) else {
            return false;
        };
        if value == 0 {
            let cut = chosen.clone();
            return visit(self, &cut, budget);
        }
        let arc = (0..self.graph.arcs.len())
            .find(|&i| {
                let a = self.graph.arcs[i];
                !self.removed[i] && a.capacity > 0 && side[a.tail] && !side[a.head]
            })
            .expect("positive flow leaves the farthest minimum cut");
        let a = self.graph.arcs[arc];

        if a.capacity <= budget {
            self.removed[arc] = true;
            chosen.push(arc);
            let stop = self.important_cuts(side.clone(), sink, budget - a.capacity, chosen, visit);
            chosen.pop();
            self.removed[arc] = false;
            if stop {
                return true;
            }
        }
        if !sink[a.head] {
            let mut grown = side;
            grown[a.head] = true;
            return self.important_cuts(grown, sink, budget, chosen, visit);
        }
        false
    }

    /// A linear cut for `blocks` of cost at most `budget`, if one exists.
    fn solve(&mut self, blocks: &[Vec<usize>], budget: u64) -> Option<Vec<usize>> {
        let blocks: Vec<&Vec<usize>> = blocks.iter().filter(|b| !b.is_empty()).collect();
        if blocks.len() < 2 {
            return Some(Vec::new());
        }
        let n = self.graph.nodes;
        let mut source = vec![false; n];
        let mut sink = vec![false; n];
        for &v in blocks[0] {
            source[v] = true;
        }
        for b in &blocks[1..] {
            for &v in b.iter() {
                sink[v] = true;
            }
        }
        if (0..n).any(|v| source[v] && sink[v]) {
            return None;
        }
        let rest: Vec<Vec<usize>> = blocks[1..].iter().map(|b| (*b).clone()).collect();
        let mut found = None;
        let mut chosen = Vec::new();
        // the arcs of `cut` stay removed while the enumeration frame that chose them is live
        self.important_cuts(source, &sink, budget, &mut chosen, &mut |search, cut, left| {
            match search.solve(&rest, left) {
                Some(mut more) => {
                    more.extend_from_slice(cut);
                    found = Some(more);
                    true
                }
                None => false,
            }
        });
        found
    }
}

/// Minimum-cost set of arcs whose removal leaves no path from an earlier block
/// to a later one, provided its cost is at most `budget`. Arc indices are
/// returned sorted.
pub fn min_linear_cut(graph: &CapGraph, blocks: &[Vec<usize>], budget: u64) -> Option<Vec<usize>> {
    let mut search = Search {
        graph,
        removed: vec![false; graph.arcs.len()],
    };
    for b in 0..=budget {
        if let Some(mut cut) = search.solve(blocks, b) {
            cut.sort_unstable();
            cut.dedup();
            return Some(cut);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path_graph() -> CapGraph {
        let mut g = CapGraph::new(3);
        g.add_arc(0, 1, 1);
        g.add_arc(1, 2, 1);
        g
    }

    #[test]
    fn path_needs_one_arc() {
        let g = path_graph();
        let cut = min_linear_cut(&g, &[vec![0], vec![2]], 1).unwrap();
        assert_eq!(g.cost(&cut), 1);
        assert_eq!(min_linear_cut(&g, &[vec![0], vec![2]], 0), None);
        // reversed order needs nothing
        assert_eq!(min_linear_cut(&g, &[vec![2], vec![0]], 0), Some(vec![]));
    }

    #[test]
    fn heavy_arcs_cannot_be_cut() {
        let mut g = CapGraph::new(2);
        g.add_arc(0, 1, 5);
        assert_eq!(min_linear_cut(&g, &[vec![0], vec![1]], 4), None);
        assert_eq!(min_linear_cut(&g, &[vec![0], vec![1]], 5), Some(vec![0]));
    }

    #[test]
    fn three_blocks_on_a_cycle() {
        // 0 -> 1 -> 2 -> 0 with blocks (0), (1), (2): cut 0->1 and 1->2
        let mut g = CapGraph::new(3);
        g.add_arc(0, 1, 1);
        g.add_arc(1, 2, 1);
        g.add_arc(2, 0, 1);
        let cut = min_linear_cut(&g, &[vec![0], vec![1], vec![2]], 3).unwrap();
        assert_eq!(cut, vec![0, 1]);
    }
}
