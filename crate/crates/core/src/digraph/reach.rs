use std::collections::VecDeque;

use super::{Digraph, GraphError, VertexSet};

/// Vertices reachable from `sources` in `D \ removed` (sources included unless removed).
pub fn reach_forward<'a>(
    d: &Digraph,
    sources: impl IntoIterator<Item = &'a usize>,
    removed: &[bool],
) -> Vec<bool> {
    search(d, sources, removed, false)
}

/// Vertices that reach `targets` in `D \ removed`.
pub fn reach_backward<'a>(
    d: &Digraph,
    targets: impl IntoIterator<Item = &'a usize>,
    removed: &[bool],
) -> Vec<bool> {
    search(d, targets, removed, true)
}

fn search<'a>(
    d: &Digraph,
    start: impl IntoIterator<Item = &'a usize>,
    removed: &[bool],
    backward: bool,
) -> Vec<bool> {
    let mut seen = vec![false; d.vertex_count()];
    let mut stack = Vec::new();
    for &s in start {
        if !removed[s] && !seen[s] {
            seen[s] = true;
            stack.push(s);
        }
    }
    while let Some(v) = stack.pop() {
        let next = if backward { d.in_edges(v) } else { d.out_edges(v) };
        for &(w, _) in next {
            if !removed[w] && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen
}

/// Whether some vertex of `x` reaches some vertex of `y`. Every vertex reaches itself.
pub fn reachable(d: &Digraph, x: &VertexSet, y: &VertexSet) -> Result<bool, GraphError> {
    d.check_set(x)?;
    d.check_set(y)?;
    let seen = reach_forward(d, x, &vec![false; d.vertex_count()]);
    Ok(y.iter().any(|&v| seen[v]))
}

/// Whether `s` is `z`-guarded: no walk in `D \ z` starts and ends in `s` while
/// visiting a vertex outside `s ∪ z`.
pub fn is_guarded(d: &Digraph, s: &VertexSet, z: &VertexSet) -> Result<bool, GraphError> {
    Ok(guard_witness(d, s, z)?.is_none())
}

/// A walk `s₁ … w … s₂` in `D \ z` with `s₁, s₂ ∈ s` and `w ∉ s ∪ z`, if one
/// exists. `None` means `s` is `z`-guarded.
pub fn guard_witness(
    d: &Digraph,
    s: &VertexSet,
    z: &VertexSet,
) -> Result<Option<Vec<usize>>, GraphError> {
    d.check_set(s)?;
    d.check_set(z)?;
    let overlap = s.intersection(z).count();
    if overlap > 0 {
        return Err(GraphError::GuardOverlap(overlap));
    }
    let n = d.vertex_count();
    let in_s = d.mask(s);
    let in_z = d.mask(z);
    let blocked: Vec<bool> = (0..n).map(|v| in_s[v] || in_z[v]).collect();

    // outside vertices entered directly from S, then closed under D \ (S ∪ Z)
    let out_seeds: Vec<usize> = s
        .iter()
        .flat_map(|&v| d.successors(v))
        .filter(|&w| !blocked[w])
        .collect();
    let r_out = reach_forward(d, &out_seeds, &blocked);
    let in_seeds: Vec<usize> = s
        .iter()
        .flat_map(|&v| d.predecessors(v))
        .filter(|&w| !blocked[w])
        .collect();
    let r_in = reach_backward(d, &in_seeds, &blocked);

    let Some(w) = (0..n).find(|&v| r_out[v] && r_in[v]) else {
        return Ok(None);
    };
    let mut walk = bfs_path(d, &in_s, &blocked, w, true);
    walk.reverse();
    let tail = bfs_path(d, &in_s, &blocked, w, false);
    walk.extend_from_slice(&tail[1..]);
    Ok(Some(walk))
}

/// Shortest path between `w` and a vertex of `s` whose interior avoids `blocked`.
/// Forward search when `backward` is false (w → s), otherwise the reverse
/// (returned starting at `w`, ending in `s`).
fn bfs_path(d: &Digraph, in_s: &[bool], blocked: &[bool], w: usize, backward: bool) -> Vec<usize> {
    let n = d.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    seen[w] = true;
    let mut queue = VecDeque::from([w]);
    while let Some(v) = queue.pop_front() {
        let next = if backward { d.in_edges(v) } else { d.out_edges(v) };
        for &(u, _) in next {
            if seen[u] {
                continue;
            }
            if in_s[u] {
                parent[u] = v;
                let mut path = vec![u];
                let mut cur = v;
                while cur != w {
                    path.push(cur);
                    cur = parent[cur];
                }
                path.push(w);
                path.reverse();
                return path;
            }
            if !blocked[u] {
                seen[u] = true;
                parent[u] = v;
                queue.push_back(u);
            }
        }
    }
    unreachable!("witness vertex lost its connection to the guarded set")
}
