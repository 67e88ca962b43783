//! Line-oriented text format for instances.
//!
//! ```text
//! # comment
//! nodes 4
//! edge 3 0 0
//! edge 2 3 10/9
//! ```

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Digraph, Edge};
use crate::polyhedron::Polyhedron;
use crate::scalar::{Scalar, ScalarParseError};

pub fn parse_graph<T: Scalar>(text: &str) -> Result<Polyhedron<T>> {
    let mut node_count: Option<usize> = None;
    let mut edges = Vec::new();
    let mut costs = Vec::new();
    for (number, raw) in text.lines().enumerate() {
        let line = number + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let syntax = |message: String| Error::Syntax { line, message };
        let fields: Vec<&str> = content.split_whitespace().collect();
        match (node_count, fields.as_slice()) {
            (None, ["nodes", count]) => {
                let n: usize =
                    count.parse().map_err(|_| syntax(format!("bad node count `{count}`")))?;
                if n == 0 {
                    return Err(Error::Validation("node count must be at least 1".into()));
                }
                node_count = Some(n);
            }
            (None, _) => return Err(syntax("expected `nodes N` header".into())),
            (Some(n), ["edge", tail, head, cost]) => {
                let tail: usize =
                    tail.parse().map_err(|_| syntax(format!("bad node index `{tail}`")))?;
                let head: usize =
                    head.parse().map_err(|_| syntax(format!("bad node index `{head}`")))?;
                if tail >= n || head >= n {
                    return Err(Error::Validation(format!(
                        "line {line}: node index out of range 0..{n}"
                    )));
                }
                let cost = T::parse_exact(cost).map_err(|e| match e {
                    ScalarParseError::ZeroDenominator => {
                        Error::Validation(format!("line {line}: zero denominator in `{cost}`"))
                    }
                    ScalarParseError::NegativeDenominator => {
                        Error::Validation(format!("line {line}: negative denominator in `{cost}`"))
                    }
                    ScalarParseError::Malformed => syntax(format!("bad cost `{cost}`")),
                })?;
                edges.push(Edge::new(tail, head));
                costs.push(cost);
            }
            (Some(_), ["nodes", ..]) => return Err(syntax("repeated `nodes` header".into())),
            (Some(_), _) => return Err(syntax(format!("expected `edge TAIL HEAD COST`, got `{content}`"))),
        }
    }
    let n = node_count.ok_or_else(|| Error::Syntax { line: 0, message: "missing `nodes N` header".into() })?;
    Polyhedron::new(Digraph::new(n, edges)?, costs)
}

/// Writes the canonical text form; edge order is preserved.
pub fn serialize_graph<T: Scalar>(poly: &Polyhedron<T>) -> String {
    let mut out = String::new();
    writeln!(out, "nodes {}", poly.node_count()).unwrap();
    for (e, c) in poly.graph().edges().iter().zip(poly.costs()) {
        writeln!(out, "edge {} {} {}", e.tail.0, e.head.0, c.compact_string()).unwrap();
    }
    out
}
