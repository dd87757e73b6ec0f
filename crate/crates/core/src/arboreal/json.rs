use serde_json::{json, Value};

use super::{ArborealDecomposition, ArborealError, LinkedSetCertificate, TreeArc};
use crate::digraph::{Digraph, VertexSet};

fn labels(d: &Digraph, set: &VertexSet) -> Value {
    Value::from(d.labels_of(set))
}

fn bad(what: &str) -> ArborealError {
    ArborealError::Json(what.to_string())
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value, ArborealError> {
    v.get(key).ok_or_else(|| bad(&format!("missing field `{key}`")))
}

fn uint(v: &Value, key: &str) -> Result<usize, ArborealError> {
    field(v, key)?
        .as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| bad(&format!("`{key}` must be a non-negative integer")))
}

/// Vertex set from an array of labels; numbers are accepted as labels too.
pub(crate) fn vertex_set(d: &Digraph, v: &Value, key: &str) -> Result<VertexSet, ArborealError> {
    let items = field(v, key)?
        .as_array()
        .ok_or_else(|| bad(&format!("`{key}` must be an array of vertices")))?;
    let mut out = VertexSet::new();
    for item in items {
        let label = match item {
            Value::String(s) => s.clone(),
            Value::Number(n) => n.to_string(),
            _ => return Err(bad(&format!("`{key}` holds a non-vertex entry"))),
        };
        out.insert(d.index_of(&label).ok_or(crate::digraph::GraphError::UnknownLabel(label))?);
    }
    Ok(out)
}

impl ArborealDecomposition {
    pub fn to_json(&self, d: &Digraph) -> Value {
        json!({
            "nodes": self.bags.iter().map(|(id, bag)| json!({"id": id, "bag": labels(d, bag)})).collect::<Vec<_>>(),
            "arcs": self.arcs.iter().map(|a| json!({"from": a.from, "to": a.to, "guard": labels(d, &a.guard)})).collect::<Vec<_>>(),
            "root": self.root,
        })
    }

    pub fn from_json(d: &Digraph, v: &Value) -> Result<Self, ArborealError> {
        let mut bags = std::collections::BTreeMap::new();
        for node in field(v, "nodes")?.as_array().ok_or_else(|| bad("`nodes` must be an array"))? {
            let id = uint(node, "id")?;
            if bags.insert(id, vertex_set(d, node, "bag")?).is_some() {
                return Err(bad(&format!("node id {id} repeats")));
            }
        }
        let mut arcs = Vec::new();
        for arc in field(v, "arcs")?.as_array().ok_or_else(|| bad("`arcs` must be an array"))? {
            arcs.push(TreeArc {
                from: uint(arc, "from")?,
                to: uint(arc, "to")?,
                guard: vertex_set(d, arc, "guard")?,
            });
        }
        Ok(ArborealDecomposition {
            bags,
            arcs,
            root: uint(v, "root")?,
        })
    }
}

impl LinkedSetCertificate {
    pub fn to_json(&self, d: &Digraph) -> Value {
        json!({"T": labels(d, &self.terminals), "k": self.k, "r": self.r})
    }

    pub fn from_json(d: &Digraph, v: &Value) -> Result<Self, ArborealError> {
        Ok(LinkedSetCertificate {
            terminals: vertex_set(d, v, "T")?,
            k: uint(v, "k")?,
            r: uint(v, "r")?,
        })
    }
}
