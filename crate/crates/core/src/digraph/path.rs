use super::{Digraph, GraphError};

/// A directed path in a host digraph: consecutive vertices are joined by an
/// edge and no vertex repeats. May be empty.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Path {
    vertices: Vec<usize>,
}

impl Path {
    pub fn new(host: &Digraph, vertices: Vec<usize>) -> Result<Self, GraphError> {
        host.check_set(&vertices)?;
        let mut seen = vec![false; host.vertex_count()];
        for &v in &vertices {
            if std::mem::replace(&mut seen[v], true) {
                return Err(GraphError::RepeatedVertex(v));
            }
        }
        for w in vertices.windows(2) {
            if !host.has_edge(w[0], w[1]) {
                return Err(GraphError::MissingEdge(w[0], w[1]));
            }
        }
        Ok(Path { vertices })
    }

    pub fn empty() -> Self {
        Path::default()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn first(&self) -> Option<usize> {
        self.vertices.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.vertices.last().copied()
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        self.vertices.iter().position(|&u| u == v)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    /// Vertices `from..=to` (positions) as a new path.
    pub fn subpath(&self, from: usize, to: usize) -> Path {
        Path {
            vertices: self.vertices[from..=to].to_vec(),
        }
    }

    pub fn into_vertices(self) -> Vec<usize> {
        self.vertices
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_missing_edges_and_repeats() {
        let d = Digraph::from_labels(&[], &[("a", "b"), ("b", "a"), ("b", "c")]);
        assert!(Path::new(&d, vec![0, 1, 2]).is_ok());
        assert_eq!(Path::new(&d, vec![0, 2]), Err(GraphError::MissingEdge(0, 2)));
        assert_eq!(Path::new(&d, vec![0, 1, 0]), Err(GraphError::RepeatedVertex(0)));
        assert_eq!(Path::new(&d, vec![7]), Err(GraphError::UnknownVertex(7)));
    }
}
