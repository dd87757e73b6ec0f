use std::collections::BTreeMap;

use serde_json::{json, Value};

use super::BrambleError;
use crate::digraph::{menger, Digraph, MengerOutcome, Path, VertexSet};

/// `p` disjoint spines with `ℓ` entry and `ℓ` exit anchors each, and a
/// linkage of `ℓ` disjoint paths from the exits of every spine to the
/// entries of every other spine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathSystem {
    pub spines: Vec<Path>,
    pub anchors_in: Vec<Vec<usize>>,
    pub anchors_out: Vec<Vec<usize>>,
    /// Keyed by `(from spine, to spine)`, zero-based.
    pub linkages: BTreeMap<(usize, usize), Vec<Path>>,
}

/// Cut `path` into `p` spines of `2ℓ` consecutive anchors from `a` and link
/// every ordered pair of spines.
pub fn build_path_system(d: &Digraph, path: &Path, a: &VertexSet, l: usize, p: usize) -> Result<PathSystem, BrambleError> {
    if a.len() != 2 * l * p || l == 0 {
        return Err(BrambleError::AnchorCount {
            got: a.len(),
            want: 2 * l * p,
        });
    }
    let mut positions = Vec::with_capacity(a.len());
    for &v in a {
        positions.push(path.position(v).ok_or(BrambleError::AnchorOffPath(v))?);
    }
    positions.sort_unstable();
    let ordered: Vec<usize> = positions.iter().map(|&i| path.vertices()[i]).collect();

    let mut sys = PathSystem {
        spines: Vec::with_capacity(p),
        anchors_in: Vec::with_capacity(p),
        anchors_out: Vec::with_capacity(p),
        linkages: BTreeMap::new(),
    };
    for i in 0..p {
        let chunk = 2 * l * i..2 * l * (i + 1);
        sys.spines.push(path.subpath(positions[chunk.start], positions[chunk.end - 1]));
        sys.anchors_in.push(ordered[chunk.start..chunk.start + l].to_vec());
        sys.anchors_out.push(ordered[chunk.end - l..chunk.end].to_vec());
    }
    for i in 0..p {
        for j in (0..p).filter(|&j| j != i) {
            let from: VertexSet = sys.anchors_out[i].iter().copied().collect();
            let to: VertexSet = sys.anchors_in[j].iter().copied().collect();
            match menger(d, &from, &to, l)? {
                MengerOutcome::Paths(ps) => {
                    sys.linkages.insert((i, j), ps);
                }
                MengerOutcome::Separator(s) => {
                    return Err(BrambleError::NotLinked { from: i, to: j, size: s.len() });
                }
            }
        }
    }
    Ok(sys)
}

impl PathSystem {
    /// Every structural violation, described; empty when the system is sound.
    pub fn check(&self, d: &Digraph, l: usize) -> Vec<String> {
        let mut out = Vec::new();
        let p = self.spines.len();
        let mut owner: BTreeMap<usize, usize> = BTreeMap::new();
        for (i, spine) in self.spines.iter().enumerate() {
            if Path::new(d, spine.vertices().to_vec()).is_err() {
                out.push(format!("spine {i} is not a path"));
            }
            for &v in spine.vertices() {
                if let Some(other) = owner.insert(v, i) {
                    out.push(format!("spines {other} and {i} share {}", d.label(v)));
                }
            }
            let (ins, outs) = (&self.anchors_in[i], &self.anchors_out[i]);
            if ins.len() != l || outs.len() != l {
                out.push(format!("spine {i} has {} entry and {} exit anchors, expected {l}", ins.len(), outs.len()));
            }
            let pos: Option<Vec<usize>> = ins.iter().chain(outs).map(|&v| spine.position(v)).collect();
            match pos {
                None => out.push(format!("spine {i} misses one of its anchors")),
                Some(pos) if !pos.windows(2).all(|w| w[0] < w[1]) => {
                    out.push(format!("anchors of spine {i} are out of order"))
                }
                _ => {}
            }
        }
        for i in 0..p {
            for j in (0..p).filter(|&j| j != i) {
                let Some(paths) = self.linkages.get(&(i, j)) else {
                    out.push(format!("linkage {i} -> {j} is missing"));
                    continue;
                };
                if paths.len() != l {
                    out.push(format!("linkage {i} -> {j} has {} paths, expected {l}", paths.len()));
                }
                let mut used = VertexSet::new();
                for path in paths {
                    let ok = Path::new(d, path.vertices().to_vec()).is_ok()
                        && path.first().is_some_and(|v| self.anchors_out[i].contains(&v))
                        && path.last().is_some_and(|v| self.anchors_in[j].contains(&v));
                    if !ok {
                        out.push(format!("linkage {i} -> {j} holds a path not joining the anchors"));
                    }
                    if !path.vertices().iter().all(|&v| used.insert(v)) {
                        out.push(format!("linkage {i} -> {j} paths are not disjoint"));
                    }
                }
            }
        }
        out
    }

    pub fn to_json(&self, d: &Digraph) -> Value {
        let nested = |sets: &[Vec<usize>]| sets.iter().map(|s| d.labels_of(s)).collect::<Vec<_>>();
        let spines: Vec<Vec<usize>> = self.spines.iter().map(|s| s.vertices().to_vec()).collect();
        let linkages: serde_json::Map<String, Value> = self
            .linkages
            .iter()
            .map(|(&(i, j), ps)| {
                let ps: Vec<Vec<usize>> = ps.iter().map(|p| p.vertices().to_vec()).collect();
                (format!("{i},{j}"), json!(nested(&ps)))
            })
            .collect();
        json!({
            "spines": nested(&spines),
            "anchors_in": nested(&self.anchors_in),
            "anchors_out": nested(&self.anchors_out),
            "linkages": linkages,
        })
    }

    pub fn from_json(d: &Digraph, v: &Value) -> Result<Self, String> {
        let list = |v: &Value| -> Result<Vec<usize>, String> {
            v.as_array()
                .ok_or("expected an array of vertices")?
                .iter()
                .map(|x| {
                    let label = x.as_str().map(str::to_string).unwrap_or_else(|| x.to_string());
                    d.index_of(&label).ok_or(format!("unknown vertex `{label}`"))
                })
                .collect()
        };
        let lists = |key: &str| -> Result<Vec<Vec<usize>>, String> {
            v.get(key)
                .and_then(Value::as_array)
                .ok_or(format!("missing array `{key}`"))?
                .iter()
                .map(list)
                .collect()
        };
        let spines = lists("spines")?
            .into_iter()
            .map(|s| Path::new(d, s).map_err(|e| e.to_string()))
            .collect::<Result<Vec<_>, _>>()?;
        let mut linkages = BTreeMap::new();
        let raw = v.get("linkages").and_then(Value::as_object).ok_or("missing object `linkages`")?;
        for (key, paths) in raw {
            let (i, j) = key
                .split_once(',')
                .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)))
                .ok_or(format!("bad linkage key `{key}`"))?;
            let ps = paths
                .as_array()
                .ok_or("linkage must be an array of paths")?
                .iter()
                .map(|p| Path::new(d, list(p)?).map_err(|e| e.to_string()))
                .collect::<Result<Vec<_>, _>>()?;
            linkages.insert((i, j), ps);
        }
        let sys = PathSystem {
            spines,
            anchors_in: lists("anchors_in")?,
            anchors_out: lists("anchors_out")?,
            linkages,
        };
        if sys.anchors_in.len() != sys.spines.len() || sys.anchors_out.len() != sys.spines.len() {
            return Err("one anchor list per spine expected".into());
        }
        Ok(sys)
    }

    /// Linkage size read off the anchor lists.
    pub fn linkage_size(&self) -> usize {
        self.anchors_in.first().map_or(0, Vec::len)
    }
}
