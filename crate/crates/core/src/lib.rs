pub mod arboreal;
pub mod balsep;
pub mod bramble;
pub mod digraph;
pub mod examples;
pub mod generate;
pub mod lincut;

pub use arboreal::{decompose, haven_eval, validate, ArborealDecomposition, Decomposition, LinkedSetCertificate};
pub use balsep::{balanced_separator, is_balanced_separator, BalancedSeparatorInstance, BalancedSeparatorResult};
pub use digraph::{Digraph, DigraphBuilder, Path, VertexId, VertexSet};
