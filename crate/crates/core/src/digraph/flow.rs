use std::collections::VecDeque;

/// Residual network for integral max-flow computations.
///
/// Arc `2i` is the forward arc added by the `i`-th call to [`add_arc`],
/// arc `2i + 1` its reverse.
///
/// [`add_arc`]: FlowNetwork::add_arc
#[derive(Clone, Debug)]
pub struct FlowNetwork {
    adj: Vec<Vec<usize>>,
    head: Vec<usize>,
    cap: Vec<u64>,
    initial: Vec<u64>,
}

impl FlowNetwork {
    pub const INF: u64 = u64::MAX / 4;

    pub fn new(nodes: usize) -> Self {
        FlowNetwork {
            adj: vec![Vec::new(); nodes],
            head: Vec::new(),
            cap: Vec::new(),
            initial: Vec::new(),
        }
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn add_node(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn add_arc(&mut self, from: usize, to: usize, capacity: u64) -> usize {
        let id = self.head.len();
        self.head.push(to);
        self.cap.push(capacity);
        self.initial.push(capacity);
        self.adj[from].push(id);
        self.head.push(from);
        self.cap.push(0);
        self.initial.push(0);
        self.adj[to].push(id + 1);
        id
    }

    pub fn tail(&self, arc: usize) -> usize {
        self.head[arc ^ 1]
    }

    pub fn head(&self, arc: usize) -> usize {
        self.head[arc]
    }

    /// Flow currently routed along forward arc `arc`.
    pub fn flow(&self, arc: usize) -> u64 {
        self.initial[arc] - self.cap[arc]
    }

    pub fn arcs_from(&self, node: usize) -> &[usize] {
        &self.adj[node]
    }

    /// Augments along shortest residual paths until `limit` units flow or no
    /// augmenting path remains. Returns the flow added by this call.
    pub fn max_flow(&mut self, source: usize, sink: usize, limit: u64) -> u64 {
        let mut total = 0;
        let mut parent = vec![usize::MAX; self.adj.len()];
        while total < limit {
            parent.iter_mut().for_each(|p| *p = usize::MAX);
            let mut queue = VecDeque::from([source]);
            let mut seen = vec![false; self.adj.len()];
            seen[source] = true;
            while let Some(u) = queue.pop_front() {
                if u == sink {
                    break;
                }
                for &a in &self.adj[u] {
                    let v = self.head[a];
                    if self.cap[a] > 0 && !seen[v] {
                        seen[v] = true;
                        parent[v] = a;
                        queue.push_back(v);
                    }
                }
            }
            if !seen[sink] {
                break;
            }
            let mut bottleneck = limit - total;
            let mut v = sink;
            while v != source {
                let a = parent[v];
                bottleneck = bottleneck.min(self.cap[a]);
                v = self.head[a ^ 1];
            }
            let mut v = sink;
            while v != source {
                let a = parent[v];
                self.cap[a] -= bottleneck;
                self.cap[a ^ 1] += bottleneck;
                v = self.head[a ^ 1];
            }
            total += bottleneck;
        }
        total
    }

    /// Nodes reachable from `source` in the residual network.
    pub fn residual_from(&self, source: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[source] = true;
        let mut stack = vec![source];
        while let Some(u) = stack.pop() {
            for &a in &self.adj[u] {
                let v = self.head[a];
                if self.cap[a] > 0 && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    }

    /// Nodes that can reach `sink` in the residual network.
    pub fn residual_to(&self, sink: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[sink] = true;
        let mut stack = vec![sink];
        while let Some(v) = stack.pop() {
            // residual arc u -> v exists iff the partner of an arc leaving v has capacity
            for &a in &self.adj[v] {
                let u = self.head[a];
                if self.cap[a ^ 1] > 0 && !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classic_network() {
        let mut f = FlowNetwork::new(6);
        for (u, v, c) in [(0, 1, 10), (0, 2, 10), (1, 3, 4), (1, 4, 8), (2, 4, 9), (3, 5, 10), (4, 3, 6), (4, 5, 10)] {
            f.add_arc(u, v, c);
        }
        assert_eq!(f.max_flow(0, 5, u64::MAX), 19);
        let side = f.residual_from(0);
        assert!(!side[5]);
    }

    #[test]
    fn limit_stops_early_and_resumes() {
        let mut f = FlowNetwork::new(4);
        f.add_arc(0, 1, 1);
        f.add_arc(0, 2, 1);
        f.add_arc(1, 3, 1);
        f.add_arc(2, 3, 1);
        assert_eq!(f.max_flow(0, 3, 1), 1);
        assert_eq!(f.max_flow(0, 3, 5), 1);
        let to_sink = f.residual_to(3);
        assert!(!to_sink[0]);
    }
}
