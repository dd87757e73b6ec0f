//! Arboreal decompositions: the data type, its validator, the
//! decomposition-or-linked-set procedure and the haven read off a linked set.

mod decompose;
mod haven;
mod json;
mod validate;

use std::collections::BTreeMap;

use crate::digraph::{GraphError, VertexSet};

pub use decompose::decompose;
pub use haven::haven_eval;
pub use validate::{validate, ValidationReport, Violation};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ArborealError {
    #[error("k must be at least 1 for a non-empty digraph")]
    ZeroParameter,
    #[error("the empty digraph has no arboreal decomposition")]
    EmptyGraph,
    #[error("query of {size} vertices exceeds the certified budget {budget}")]
    BudgetExceeded { size: usize, budget: usize },
    #[error("no unique strong component holds more than {r} terminals; the certificate is corrupt")]
    NoHavenComponent { r: usize },
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Arc of the arborescence with its guard set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeArc {
    pub from: usize,
    pub to: usize,
    pub guard: VertexSet,
}

/// Arborescence `R` with a bag on every node and a guard on every arc.
/// Node ids are arbitrary integers; the ones built here count up from 0 in
/// creation order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArborealDecomposition {
    pub bags: BTreeMap<usize, VertexSet>,
    pub arcs: Vec<TreeArc>,
    pub root: usize,
}

impl ArborealDecomposition {
    /// The single-node decomposition with bag `V(D)`.
    pub fn trivial(n: usize) -> Self {
        ArborealDecomposition {
            bags: BTreeMap::from([(0, (0..n).collect())]),
            arcs: Vec::new(),
            root: 0,
        }
    }

    pub fn node_count(&self) -> usize {
        self.bags.len()
    }

    /// `|W_r ∪ ⋃_{e ∼ r} X_e|` for node `r`.
    pub fn node_size(&self, r: usize) -> usize {
        let mut all = self.bags.get(&r).cloned().unwrap_or_default();
        for a in self.arcs.iter().filter(|a| a.from == r || a.to == r) {
            all.extend(&a.guard);
        }
        all.len()
    }

    /// Maximum node size minus one.
    pub fn width(&self) -> usize {
        self.bags.keys().map(|&r| self.node_size(r)).max().unwrap_or(0).saturating_sub(1)
    }

    pub fn children(&self, r: usize) -> impl Iterator<Item = &TreeArc> + '_ {
        self.arcs.iter().filter(move |a| a.from == r)
    }

    pub fn parent_arc(&self, r: usize) -> Option<&TreeArc> {
        self.arcs.iter().find(|a| a.to == r)
    }
}

/// Witness that the decomposition procedure stopped: `T` is `(k, r)`-linked,
/// meaning no vertex set of size at most `k` leaves every strong component
/// with at most `r` vertices of `T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkedSetCertificate {
    pub terminals: VertexSet,
    pub k: usize,
    pub r: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decomposition {
    Decomposition(ArborealDecomposition),
    Certificate(LinkedSetCertificate),
}
