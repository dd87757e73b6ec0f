use super::{Digraph, FlowNetwork, GraphError, Path, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MengerOutcome {
    /// `r` pairwise vertex-disjoint paths, each from `X` to `Y`.
    Paths(Vec<Path>),
    /// Fewer than `r` vertices meeting every `X → Y` path.
    Separator(VertexSet),
}

impl MengerOutcome {
    pub fn is_paths(&self) -> bool {
        matches!(self, MengerOutcome::Paths(_))
    }
}

/// Either `r` vertex-disjoint `X → Y` paths or an `(X, Y)`-separator of size
/// at most `r - 1`, via unit vertex capacities on the split graph.
pub fn menger(d: &Digraph, x: &VertexSet, y: &VertexSet, r: usize) -> Result<MengerOutcome, GraphError> {
    d.check_set(x)?;
    d.check_set(y)?;
    if r == 0 {
        return Ok(MengerOutcome::Paths(Vec::new()));
    }
    let n = d.vertex_count();
    let (source, sink) = (2 * n, 2 * n + 1);
    let mut net = FlowNetwork::new(2 * n + 2);
    let mut through = vec![0usize; n];
    for v in d.vertices() {
        through[v] = net.add_arc(2 * v, 2 * v + 1, 1);
    }
    for (t, h, _) in d.edges() {
        if t != h {
            net.add_arc(2 * t + 1, 2 * h, FlowNetwork::INF);
        }
    }
    for &v in x {
        net.add_arc(source, 2 * v, FlowNetwork::INF);
    }
    for &v in y {
        net.add_arc(2 * v + 1, sink, FlowNetwork::INF);
    }
    let value = net.max_flow(source, sink, r as u64) as usize;

    if value < r {
        let side = net.residual_from(source);
        let sep = d.vertices().filter(|&v| side[2 * v] && !side[2 * v + 1]).collect();
        return Ok(MengerOutcome::Separator(sep));
    }

    let mut paths = Vec::with_capacity(r);
    let starts: Vec<usize> = net
        .arcs_from(source)
        .iter()
        .copied()
        .filter(|&a| a % 2 == 0 && net.flow(a) > 0)
        .collect();
    for a in starts {
        let mut node = net.head(a);
        let mut verts = Vec::new();
        loop {
            let v = node / 2;
            verts.push(v);
            let out = 2 * v + 1;
            let next = net
                .arcs_from(out)
                .iter()
                .copied()
                .find(|&b| b % 2 == 0 && net.flow(b) > 0)
                .expect("flow conservation at split vertex");
            if net.head(next) == sink {
                break;
            }
            node = net.head(next);
        }
        paths.push(Path::new(d, verts).expect("flow path is a path of the host"));
    }
    Ok(MengerOutcome::Paths(paths))
}
