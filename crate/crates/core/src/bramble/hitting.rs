use std::collections::VecDeque;

use super::{BrambleError, TBramble};
use crate::digraph::{Path, VertexSet};

/// A path whose vertex set hits every element of the bramble.
///
/// The path starts at the least terminal of a heavy strong component and is
/// extended, while some heavy component `F` avoids it, by a shortest route
/// from its end to `F` inside the previous target component and `F`, cut at
/// its first vertex of `F`. Empty when the bramble has no elements.
pub fn hitting_path(b: &TBramble<'_>) -> Result<Path, BrambleError> {
    let d = b.digraph;
    let Some(start) = b.heavy_components(&VertexSet::new()).into_iter().next() else {
        return Ok(Path::empty());
    };
    let first = *start
        .iter()
        .find(|v| b.terminals.contains(v))
        .expect("heavy components hold terminals");
    let mut path = vec![first];
    let mut on_path: VertexSet = [first].into();
    let mut current: VertexSet = start.into_iter().collect();

    loop {
        let Some(target) = b.heavy_components(&on_path).into_iter().next() else {
            break;
        };
        let target: VertexSet = target.into_iter().collect();
        let tail = *path.last().expect("non-empty");
        let step = route(d, tail, &current, &target).ok_or(BrambleError::ElementsApart)?;
        for &v in &step[1..] {
            debug_assert!(!on_path.contains(&v));
            on_path.insert(v);
            path.push(v);
        }
        current = target;
    }
    Ok(Path::new(d, path)?)
}

/// Shortest path from `from` to `target` inside `area ∪ target` whose only
/// vertex in `target` is its last one.
fn route(d: &crate::digraph::Digraph, from: usize, area: &VertexSet, target: &VertexSet) -> Option<Vec<usize>> {
    let n = d.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        for w in d.successors(v) {
            if seen[w] || !(area.contains(&w) || target.contains(&w)) {
                continue;
            }
            seen[w] = true;
            parent[w] = v;
            if target.contains(&w) {
                let mut out = vec![w];
                let mut cur = v;
                while cur != from {
                    out.push(cur);
                    cur = parent[cur];
                }
                out.push(from);
                out.reverse();
                return Some(out);
            }
            queue.push_back(w);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::Digraph;
    use crate::examples;

    #[test]
    fn no_heavy_component_gives_empty_path() {
        let d = Digraph::from_index_edges(4, [(0, 1), (1, 2)]);
        let t: VertexSet = [0, 1, 2].into();
        assert!(hitting_path(&TBramble::new(&d, &t, 2)).unwrap().is_empty());
    }

    #[test]
    fn k5_needs_three_vertices() {
        let d = examples::biclique(5);
        let t: VertexSet = d.vertices().collect();
        let b = TBramble::new(&d, &t, 3);
        let p = hitting_path(&b).unwrap();
        assert_eq!(p.len(), 3);
        assert!(b.is_hitting_set(&p.vertices().iter().copied().collect()));
    }

    #[test]
    fn bidirected_cycles() {
        for n in 5..12 {
            let d = examples::bicycle(n);
            let t: VertexSet = (0..5).map(|i| i * n / 5).collect();
            let b = TBramble::new(&d, &t, 3);
            let p = hitting_path(&b).unwrap();
            assert!(b.is_hitting_set(&p.vertices().iter().copied().collect()), "n = {n}");
        }
    }
}
