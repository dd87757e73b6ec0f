use crate::digraph::{Digraph, VertexSet};

use super::{CutCertificate, CutKind, LinCutError, TerminalSequence};

/// Exhaustive minimum vertex cut: subsets by increasing size, each size in
/// lexicographic order. Exponential; meant for small graphs and as a test
/// oracle.
pub fn brute_force_vertex_cut(
    d: &Digraph,
    t: &TerminalSequence,
    s: usize,
) -> Result<Option<CutCertificate>, LinCutError> {
    t.check(d)?;
    let (_, forced) = t.normalized();
    let n = d.vertex_count();
    for size in 0..=s.min(n) {
        let mut pick: Vec<usize> = (0..size).collect();
        loop {
            let set: VertexSet = pick.iter().copied().collect();
            if t.is_separated_by(d, &set) {
                return Ok(Some(CutCertificate {
                    kind: CutKind::Vertex,
                    vertices: set.difference(&forced).copied().collect(),
                    edges: Default::default(),
                    forced: forced.clone(),
                }));
            }
            if !next_combination(&mut pick, n) {
                break;
            }
        }
    }
    Ok(None)
}

fn next_combination(pick: &mut [usize], n: usize) -> bool {
    let k = pick.len();
    for i in (0..k).rev() {
        if pick[i] < n - k + i {
            pick[i] += 1;
            for j in i + 1..k {
                pick[j] = pick[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
