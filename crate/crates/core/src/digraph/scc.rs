use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::Digraph;

/// Strong components listed so that no component reaches a later one.
///
/// Among all such orders the one emitted is the unique order that, at every
/// step, picks the available component with the smallest minimum vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SccDecomposition {
    /// Each component sorted ascending.
    pub components: Vec<Vec<usize>>,
    component_of: Vec<Option<usize>>,
}

impl SccDecomposition {
    /// Index of the component containing `v`, or `None` if `v` was removed.
    pub fn component_of(&self, v: usize) -> Option<usize> {
        self.component_of[v]
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Number of vertices of `mask` in each component.
    pub fn counts_in(&self, mask: &[bool]) -> Vec<usize> {
        self.components
            .iter()
            .map(|c| c.iter().filter(|&&v| mask[v]).count())
            .collect()
    }
}

pub fn scc(d: &Digraph) -> SccDecomposition {
    scc_without(d, &vec![false; d.vertex_count()])
}

/// Strong components of `D \ removed`. Removed vertices belong to no component.
pub fn scc_without(d: &Digraph, removed: &[bool]) -> SccDecomposition {
    let raw = tarjan(d, removed);
    canonical_order(d, removed, raw)
}

fn tarjan(d: &Digraph, removed: &[bool]) -> Vec<Vec<usize>> {
    let n = d.vertex_count();
    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comps = Vec::new();
    let mut counter = 0;
    // (vertex, position in its out-list)
    let mut call: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if removed[root] || index[root] != UNSEEN {
            continue;
        }
        call.push((root, 0));
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            let out = d.out_edges(v);
            if *pos < out.len() {
                let w = out[*pos].0;
                *pos += 1;
                if removed[w] {
                    continue;
                }
                if index[w] == UNSEEN {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comp.sort_unstable();
                comps.push(comp);
            }
        }
    }
    comps
}

fn canonical_order(d: &Digraph, removed: &[bool], raw: Vec<Vec<usize>>) -> SccDecomposition {
    let n = d.vertex_count();
    let mut comp_of = vec![usize::MAX; n];
    for (i, c) in raw.iter().enumerate() {
        for &v in c {
            comp_of[v] = i;
        }
    }
    // condensation out-degrees; a component is emitted once all its successors are
    let k = raw.len();
    let mut out_deg = vec![0usize; k];
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); k];
    for (i, c) in raw.iter().enumerate() {
        let mut succ: Vec<usize> = c
            .iter()
            .flat_map(|&v| d.successors(v))
            .filter(|&w| !removed[w] && comp_of[w] != i)
            .map(|w| comp_of[w])
            .collect();
        succ.sort_unstable();
        succ.dedup();
        out_deg[i] = succ.len();
        for j in succ {
            preds[j].push(i);
        }
    }
    let mut heap: BinaryHeap<Reverse<(usize, usize)>> = (0..k)
        .filter(|&i| out_deg[i] == 0)
        .map(|i| Reverse((raw[i][0], i)))
        .collect();
    let mut order = Vec::with_capacity(k);
    while let Some(Reverse((_, i))) = heap.pop() {
        order.push(i);
        for &p in &preds[i] {
            out_deg[p] -= 1;
            if out_deg[p] == 0 {
                heap.push(Reverse((raw[p][0], p)));
            }
        }
    }
    let mut component_of = vec![None; n];
    let mut components = Vec::with_capacity(k);
    let mut raw: Vec<Option<Vec<usize>>> = raw.into_iter().map(Some).collect();
    for (pos, &i) in order.iter().enumerate() {
        let c = raw[i].take().expect("component emitted twice");
        for &v in &c {
            component_of[v] = Some(pos);
        }
        components.push(c);
    }
    SccDecomposition {
        components,
        component_of,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::reachable;
    use crate::digraph::VertexSet;

    fn labels(d: &Digraph, s: &SccDecomposition) -> Vec<Vec<String>> {
        s.components.iter().map(|c| d.labels_of(c)).collect()
    }

    #[test]
    fn single_vertex() {
        let d = Digraph::from_labels(&["v"], &[]);
        assert_eq!(labels(&d, &scc(&d)), vec![vec!["v"]]);
    }

    #[test]
    fn path_is_emitted_sink_first() {
        let d = Digraph::from_labels(&[], &[("a", "b"), ("b", "c")]);
        assert_eq!(labels(&d, &scc(&d)), vec![vec!["c"], vec!["b"], vec!["a"]]);
    }

    #[test]
    fn loops_do_not_merge_components() {
        let d = Digraph::from_labels(&[], &[("a", "a"), ("a", "b")]);
        assert_eq!(scc(&d).len(), 2);
    }

    #[test]
    fn two_triangle_fans_graph_is_strong() {
        let d = crate::examples::triangle_fans();
        let s = scc(&d);
        assert_eq!(s.len(), 1);
        assert_eq!(s.components[0].len(), 7);
    }

    #[test]
    fn removed_vertices_have_no_component() {
        let d = Digraph::from_labels(&[], &[("a", "b"), ("b", "c"), ("c", "a")]);
        let mut removed = vec![false; 3];
        removed[1] = true;
        let s = scc_without(&d, &removed);
        assert_eq!(s.component_of(1), None);
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn no_path_from_earlier_to_later_on_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let n = rng.gen_range(1..12);
            let edges: Vec<(usize, usize)> = (0..rng.gen_range(0..3 * n))
                .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
                .collect();
            let d = Digraph::from_index_edges(n, edges);
            let s = scc(&d);
            let total: usize = s.components.iter().map(|c| c.len()).sum();
            assert_eq!(total, n);
            for (i, ci) in s.components.iter().enumerate() {
                let ci: VertexSet = ci.iter().copied().collect();
                for cj in &s.components[i + 1..] {
                    let cj: VertexSet = cj.iter().copied().collect();
                    assert!(!reachable(&d, &ci, &cj).unwrap());
                }
                // strongly connected and maximal
                for &u in &ci {
                    for w in d.vertices() {
                        let both = reachable(&d, &[u].into(), &[w].into()).unwrap()
                            && reachable(&d, &[w].into(), &[u].into()).unwrap();
                        assert_eq!(both, ci.contains(&w));
                    }
                }
            }
        }
    }
}
