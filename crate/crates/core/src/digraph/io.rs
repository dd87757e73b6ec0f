//! Plain-text edge lists.
//!
//! ```text
//! # comment
//! vertex lonely
//! a b
//! b a
//! ```
//!
//! Every non-comment line is either `vertex LABEL` or `TAIL HEAD`. A repeated
//! edge line adds a parallel edge. Labels cannot contain whitespace.

use std::fmt::Write as _;

use super::{Digraph, DigraphBuilder};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl Digraph {
    pub fn parse_edge_list(text: &str) -> Result<Digraph, ParseError> {
        let mut b = DigraphBuilder::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens.as_slice() {
                ["vertex", v] => {
                    b.vertex(*v);
                }
                [t, h] => {
                    b.edge(*t, *h);
                }
                _ => {
                    return Err(ParseError {
                        line: i + 1,
                        message: format!("expected `TAIL HEAD` or `vertex LABEL`, found `{line}`"),
                    })
                }
            }
        }
        Ok(b.build())
    }

    /// Canonical text form: isolated vertices first, then one line per edge
    /// copy in canonical `(tail, head)` order.
    pub fn to_edge_list(&self) -> String {
        let mut s = String::new();
        for v in self.vertices() {
            if self.out_edges(v).is_empty() && self.in_edges(v).is_empty() {
                let _ = writeln!(s, "vertex {}", self.label(v));
            }
        }
        for (t, h, c) in self.edges() {
            for _ in 0..c {
                let _ = writeln!(s, "{} {}", self.label(t), self.label(h));
            }
        }
        s
    }
}
