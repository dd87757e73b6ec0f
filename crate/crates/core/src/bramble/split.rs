use super::{hitting_path, BrambleError, TBramble};
use crate::arboreal::LinkedSetCertificate;
use crate::digraph::{menger, Digraph, Path, VertexSet};

/// Bramble order needed for a well-linked set of `k` anchors:
/// `(k + 1)(⌊k/2⌋ + 1) - 1`.
pub fn g(k: usize) -> usize {
    (k + 1) * (k / 2 + 1) - 1
}

/// Split of a hitting path into pieces `Q_1 … Q_i`, each followed by its
/// anchor `a_j`, and the residual path after the last anchor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitState {
    pub path: Path,
    /// Position ranges `(first, last)` of the pieces on `path`.
    pub pieces: Vec<(usize, usize)>,
    pub anchors: Vec<usize>,
    /// Position where the residual path begins.
    pub residual_start: usize,
    /// Every piece vertex and anchor so far.
    pub covered: VertexSet,
    pub k: usize,
}

impl SplitState {
    /// The `(0)`-split: nothing covered, the residual is the whole path.
    pub fn initial(path: Path, k: usize) -> Self {
        SplitState {
            path,
            pieces: Vec::new(),
            anchors: Vec::new(),
            residual_start: 0,
            covered: VertexSet::new(),
            k,
        }
    }

    pub fn level(&self) -> usize {
        self.anchors.len()
    }

    pub fn piece(&self, j: usize) -> Path {
        let (a, b) = self.pieces[j];
        self.path.subpath(a, b)
    }

    pub fn residual(&self) -> Path {
        if self.residual_start >= self.path.len() {
            Path::empty()
        } else {
            self.path.subpath(self.residual_start, self.path.len() - 1)
        }
    }

    /// Lower bound on the order of the elements avoiding `covered`:
    /// `g(k) - i(⌊k/2⌋ + 1)`.
    pub fn order_bound(&self) -> isize {
        g(self.k) as isize - (self.level() * (self.k / 2 + 1)) as isize
    }
}

/// Grow the next piece along the residual path until the elements avoiding
/// everything covered can be hit by `g - i(⌊k/2⌋+1) - ⌊k/2⌋` vertices, then
/// take the following vertex as the next anchor.
///
/// The order of the avoided part drops by at most one per added vertex, so
/// it stops exactly at that value; the anchor costs at most one more, which
/// leaves the bound `g - (i+1)(⌊k/2⌋+1)` for the next level.
pub fn extend_split(b: &TBramble<'_>, state: &SplitState) -> Result<SplitState, BrambleError> {
    let level = state.level();
    let threshold = state.order_bound() - (state.k / 2) as isize;
    let passes = |x: &VertexSet| -> Result<bool, BrambleError> {
        Ok(threshold >= 0 && b.complement_order_at_most(x, threshold as usize)?.is_some())
    };
    if passes(&state.covered)? {
        return Err(BrambleError::EntryCondition { level });
    }
    let verts = state.path.vertices();
    let mut x = state.covered.clone();
    for pos in state.residual_start..verts.len() {
        x.insert(verts[pos]);
        if passes(&x)? {
            let anchor_pos = pos + 1;
            let Some(&anchor) = verts.get(anchor_pos) else {
                return Err(BrambleError::PathExhausted { level });
            };
            x.insert(anchor);
            let mut next = state.clone();
            next.pieces.push((state.residual_start, pos));
            next.anchors.push(anchor);
            next.residual_start = anchor_pos + 1;
            next.covered = x;
            return Ok(next);
        }
    }
    Err(BrambleError::PathExhausted { level })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WellLinkedSet {
    pub path: Path,
    /// Anchors in path order.
    pub anchors: Vec<usize>,
    pub split: SplitState,
}

impl WellLinkedSet {
    pub fn anchor_set(&self) -> VertexSet {
        self.anchors.iter().copied().collect()
    }

    pub fn to_json(&self, d: &Digraph) -> serde_json::Value {
        serde_json::json!({
            "path": d.labels_of(self.path.vertices()),
            "A": d.labels_of(&self.anchors),
        })
    }
}

/// A well-linked set of `k` vertices on a path hitting the T-bramble of a
/// certified linked set of `2g(k) - 1` terminals.
pub fn well_linked_set(d: &Digraph, cert: &LinkedSetCertificate, k: usize) -> Result<WellLinkedSet, BrambleError> {
    let order = g(k);
    let want = 2 * order - 1;
    if cert.terminals.len() != want {
        return Err(BrambleError::CertificateSize {
            got: cert.terminals.len(),
            want,
        });
    }
    let b = TBramble::new(d, &cert.terminals, order);
    let path = hitting_path(&b)?;
    let mut state = SplitState::initial(path.clone(), k);
    if k == 1 {
        // ⌊k/2⌋ = 0 gives no room for a piece; any single vertex is well-linked
        let a = path.first().ok_or(BrambleError::PathExhausted { level: 0 })?;
        state.anchors.push(a);
        state.residual_start = 1;
        state.covered.insert(a);
    }
    while state.level() < k {
        state = extend_split(&b, &state)?;
    }
    Ok(WellLinkedSet {
        path,
        anchors: state.anchors.clone(),
        split: state,
    })
}

/// Whether every pair of disjoint equal-size subsets `X, Y` of `a` is joined
/// by `|X|` vertex-disjoint `X → Y` paths. Exponential in `|a|`.
pub fn verify_well_linked(d: &Digraph, a: &VertexSet) -> bool {
    let elems: Vec<usize> = a.iter().copied().collect();
    let m = elems.len();
    assert!(m <= 20, "well-linkedness check over {m} vertices");
    let pick = |mask: u32| -> VertexSet { (0..m).filter(|&i| mask >> i & 1 == 1).map(|i| elems[i]).collect() };
    for xm in 1u32..1 << m {
        let rest = ((1u32 << m) - 1) & !xm;
        let size = xm.count_ones();
        let x = pick(xm);
        // walk the submasks of the complement with the same size
        let mut ym = rest;
        loop {
            if ym.count_ones() == size {
                let y = pick(ym);
                match menger(d, &x, &y, size as usize) {
                    Ok(out) if out.is_paths() => {}
                    _ => return false,
                }
            }
            if ym == 0 {
                break;
            }
            ym = (ym - 1) & rest;
        }
    }
    true
}
