//! Frozen checks on the four-node example: the values every part of the
//! library must reproduce on it.

use std::collections::BTreeSet;

use crate::circuits::{enumerate_partitions, PartitionCircuit, Sign};
use crate::constructions::example_graph;
use crate::error::Error;
use crate::graph::Digraph;
use crate::oracle::Limits;
use crate::polyhedron::{Point, Polyhedron};
use crate::trees::SpanningTree;
use crate::walk::{validate_points, WalkMode};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<CheckOutcome>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn pt(f: &[(i64, i64)]) -> Point {
    Point::from_fractions(f).expect("anchor coordinate is zero")
}

/// Source vertex: the origin.
pub fn example_source() -> Point {
    Point::origin(4)
}

/// Target vertex `(0, 2/3, 4/3, 2)`.
pub fn example_target() -> Point {
    pt(&[(0, 1), (2, 3), (4, 3), (2, 1)])
}

/// Tree edges `v3v0, v2v0, v3v1` of the source and `v0v3, v0v2, v1v3` of the target.
pub const SOURCE_TREE: [(usize, usize); 3] = [(3, 0), (2, 0), (3, 1)];
pub const TARGET_TREE: [(usize, usize); 3] = [(0, 3), (0, 2), (1, 3)];

/// Four-step edge walk from the source to the target.
pub fn example_edge_walk() -> Vec<Point> {
    vec![
        pt(&[(0, 1), (0, 1), (0, 1), (0, 1)]),
        pt(&[(0, 1), (1, 1), (0, 1), (1, 1)]),
        pt(&[(0, 1), (1, 1), (4, 3), (1, 1)]),
        pt(&[(0, 1), (1, 1), (4, 3), (2, 1)]),
        pt(&[(0, 1), (2, 3), (4, 3), (2, 1)]),
    ]
}

/// The six points reachable from the source by one maximal circuit step.
pub fn example_first_steps() -> Vec<Point> {
    vec![
        pt(&[(0, 1), (-1, 1), (0, 1), (0, 1)]),
        pt(&[(0, 1), (0, 1), (1, 1), (0, 1)]),
        pt(&[(0, 1), (0, 1), (0, 1), (10, 9)]),
        pt(&[(0, 1), (1, 1), (0, 1), (1, 1)]),
        pt(&[(0, 1), (0, 1), (1, 1), (1, 1)]),
        pt(&[(0, 1), (1, 1), (1, 1), (1, 1)]),
    ]
}

fn tree(graph: &Digraph, pairs: &[(usize, usize)]) -> Result<SpanningTree, Error> {
    let indices = pairs
        .iter()
        .map(|&(t, h)| graph.find_edge(t, h).ok_or_else(|| Error::NotASpanningTree(format!("no edge v{t}v{h}"))))
        .collect::<Result<Vec<_>, _>>()?;
    SpanningTree::new(graph, indices)
}

fn check_tree_vertices(poly: &Polyhedron) -> CheckOutcome {
    let mut problems = Vec::new();
    for (label, pairs, expected) in
        [("source", &SOURCE_TREE, example_source()), ("target", &TARGET_TREE, example_target())]
    {
        match tree(poly.graph(), pairs).and_then(|t| poly.vertex_from_tree(&t)) {
            Ok(u) if u == expected => {}
            Ok(u) => problems.push(format!("{label} tree gives {u}, expected {expected}")),
            Err(e) => problems.push(format!("{label} tree: {e}")),
        }
    }
    outcome("tree-vertices", problems)
}

fn check_edge_walk(poly: &Polyhedron) -> CheckOutcome {
    let problems = validate_points(poly, WalkMode::Edge, &example_edge_walk())
        .map(|v| vec![format!("four-step walk: {v}")])
        .unwrap_or_default();
    outcome("edge-walk", problems)
}

fn check_first_steps(poly: &Polyhedron) -> CheckOutcome {
    let found: BTreeSet<Point> = match poly.first_circuit_neighbors(&example_source()) {
        Ok(list) => list.into_iter().map(|n| n.destination).collect(),
        Err(e) => return outcome("first-circuit-steps", vec![e.to_string()]),
    };
    let expected: BTreeSet<Point> = example_first_steps().into_iter().collect();
    let mut problems = Vec::new();
    for p in expected.difference(&found) {
        problems.push(format!("missing {p}"));
    }
    for p in found.difference(&expected) {
        problems.push(format!("unexpected {p}"));
    }
    outcome("first-circuit-steps", problems)
}

fn check_inapplicable(poly: &Polyhedron) -> CheckOutcome {
    let mut problems = Vec::new();
    match PartitionCircuit::new(poly.graph(), [1, 2]) {
        Ok(circuit) => {
            for sign in Sign::BOTH {
                match poly.max_step(&example_source(), &circuit, sign) {
                    Err(Error::NotApplicable) => {}
                    Ok(step) => problems.push(format!("{circuit}{sign} moves by {}", step.epsilon)),
                    Err(e) => problems.push(format!("{circuit}{sign}: {e}")),
                }
            }
        }
        Err(e) => problems.push(e.to_string()),
    }
    outcome("inapplicable-partition", problems)
}

fn check_circuit_distance(poly: &Polyhedron) -> CheckOutcome {
    let problems = match poly.circuit_distance(&example_source(), &example_target(), &Limits::default()) {
        Ok(d) if d.length == 4 => Vec::new(),
        Ok(d) => vec![format!("circuit distance {}, expected 4", d.length)],
        Err(e) => vec![e.to_string()],
    };
    outcome("circuit-distance", problems)
}

fn outcome(name: &'static str, problems: Vec<String>) -> CheckOutcome {
    CheckOutcome { name, passed: problems.is_empty(), detail: if problems.is_empty() { "ok".into() } else { problems.join("; ") } }
}

/// Runs the five frozen checks against `poly`, which should be the example
/// instance; a modified instance shows which checks notice the change.
pub fn verify_example_on(poly: &Polyhedron) -> VerificationReport {
    VerificationReport {
        checks: vec![
            check_tree_vertices(poly),
            check_edge_walk(poly),
            check_first_steps(poly),
            check_inapplicable(poly),
            check_circuit_distance(poly),
        ],
    }
}

pub fn verify_example() -> VerificationReport {
    verify_example_on(&example_graph())
}

/// Partitions of the example with no applicable first step in either direction.
pub fn example_blocked_partitions() -> Vec<PartitionCircuit> {
    let poly = example_graph();
    enumerate_partitions(poly.graph())
        .into_iter()
        .filter(|c| Sign::BOTH.iter().all(|&s| matches!(poly.max_step(&example_source(), c, s), Err(Error::NotApplicable))))
        .collect()
}
