//! Constructive walks between vertices.
//!
//! Both builders fix a spanning tree `T2` inside the tight graph of the target
//! and insert its edges one at a time. Once an edge of `T2` is tight it is
//! contracted, so later steps never release it, and the walk continues on the
//! smaller instance. Points are lifted back through the contraction stack.
//!
//! * [`edge_walk`] pivots along skeleton edges: the split is taken at the last
//!   backward edge of the tree path from `r` to `s`. Requires a nondegenerate
//!   instance. At most `min{(|V|-1)|E|, (|V|^3-|V|)/6}` steps.
//! * [`circuit_walk`] grows the set of nodes with a tight directed path to `s`
//!   by at least one node per step. Tolerates degeneracy. At most
//!   `|V|(|V|-1)/2` steps.

use std::collections::VecDeque;

use crate::circuits::{PartitionCircuit, Sign};
use crate::contraction::ContractionRecord;
use crate::error::{Error, Result};
use crate::graph::{Digraph, NodeId};
use crate::polyhedron::{Point, Polyhedron};
use crate::scalar::Scalar;
use crate::trees::{first_spanning_tree, SpanningTree};
use crate::walk::{Walk, WalkMode};

/// Result of [`last_backward_edge`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeSplit {
    pub edge: usize,
    /// Indicator of the component of `T - edge` containing `r`.
    pub r_side: Vec<bool>,
}

impl TreeSplit {
    pub fn r_nodes(&self) -> Vec<usize> {
        (0..self.r_side.len()).filter(|&v| self.r_side[v]).collect()
    }

    pub fn s_nodes(&self) -> Vec<usize> {
        (0..self.r_side.len()).filter(|&v| !self.r_side[v]).collect()
    }
}

/// On the tree path from `r` to `s`, the edge nearest `s` that points away
/// from `s`, and the split of the tree it induces.
pub fn last_backward_edge(graph: &Digraph, tree: &SpanningTree, r: NodeId, s: NodeId) -> Result<TreeSplit> {
    let n = graph.node_count();
    let (r, s) = (r.index(), s.index());
    if r == s || r >= n || s >= n {
        return Err(Error::Validation(format!("bad endpoints v{r}, v{s}")));
    }
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &i in tree.edge_indices() {
        let e = graph.edge(i);
        incident[e.tail.index()].push(i);
        incident[e.head.index()].push(i);
    }
    // Parent edge of every node when the tree hangs from s.
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut seen = vec![false; n];
    seen[s] = true;
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        for &i in &incident[v] {
            let e = graph.edge(i);
            let w = if e.tail.index() == v { e.head.index() } else { e.tail.index() };
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some(i);
                queue.push_back(w);
            }
        }
    }
    // Walk from r towards s; an edge whose head is the node farther from s is backward.
    let mut backward = None;
    let mut v = r;
    while v != s {
        let i = parent[v].ok_or_else(|| Error::NotASpanningTree(format!("v{r} is not connected to v{s}")))?;
        let e = graph.edge(i);
        if e.head.index() == v {
            backward = Some(i);
        }
        v = if e.tail.index() == v { e.head.index() } else { e.tail.index() };
    }
    let edge = backward.ok_or(Error::NoBackwardEdge { r, s })?;
    let mut r_side = vec![false; n];
    r_side[r] = true;
    let mut stack = vec![r];
    while let Some(v) = stack.pop() {
        for &i in &incident[v] {
            if i == edge {
                continue;
            }
            let e = graph.edge(i);
            let w = if e.tail.index() == v { e.head.index() } else { e.tail.index() };
            if !r_side[w] {
                r_side[w] = true;
                stack.push(w);
            }
        }
    }
    Ok(TreeSplit { edge, r_side })
}

/// Nodes other than `r` with a directed path of edges tight at `y` into `s`.
/// Errors with [`Error::PathConflict`] when `r` itself has such a path.
pub fn tight_arborescence<T: Scalar>(poly: &Polyhedron<T>, y: &Point<T>, r: usize, s: usize) -> Result<Vec<bool>> {
    let n = poly.node_count();
    let mut into: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &i in poly.tight_graph(y)?.indices() {
        let e = poly.graph().edge(i);
        into[e.head.index()].push(e.tail.index());
    }
    let mut reaches = vec![false; n];
    reaches[s] = true;
    let mut stack = vec![s];
    while let Some(v) = stack.pop() {
        for &w in &into[v] {
            if w == r {
                return Err(Error::PathConflict { r, s });
            }
            if !reaches[w] {
                reaches[w] = true;
                stack.push(w);
            }
        }
    }
    Ok(reaches)
}

/// The bipartition used to move towards making `rs` tight:
///
/// 1. `r` goes to `R`;
/// 2. `s` goes to `S`;
/// 3. every node with a tight directed path to `s` goes to `S`;
/// 4. every remaining node connected to `r` in the underlying graph of `G`
///    restricted to the nodes not yet in `S` goes to `R`;
/// 5. all other nodes go to `S`.
///
/// Returned in canonical form: `(S, +)` when the anchor is in `R`, otherwise
/// `(R, -)`.
pub fn build_insertion_partition<T: Scalar>(poly: &Polyhedron<T>, y: &Point<T>, edge: usize) -> Result<(PartitionCircuit, Sign)> {
    if edge >= poly.edge_count() {
        return Err(Error::EdgeMissing(edge));
    }
    let e = poly.graph().edge(edge);
    let (r, s) = (e.tail.index(), e.head.index());
    poly.require_feasible(y)?;
    if poly.slack(y, edge).is_zero() {
        return Err(Error::Validation(format!("edge {e} is already tight")));
    }
    let in_s3 = tight_arborescence(poly, y, r, s)?;
    let n = poly.node_count();
    let adjacency = poly.graph().undirected_adjacency();
    let mut in_r = vec![false; n];
    in_r[r] = true;
    let mut stack = vec![r];
    while let Some(v) = stack.pop() {
        for &w in &adjacency[v] {
            if !in_s3[w] && !in_r[w] {
                in_r[w] = true;
                stack.push(w);
            }
        }
    }
    let (indicator, sign) = if in_r[0] {
        (in_r.iter().map(|b| !b).collect::<Vec<_>>(), Sign::Plus)
    } else {
        (in_r, Sign::Minus)
    };
    let circuit = PartitionCircuit::from_indicator(indicator);
    circuit.validate(poly.graph()).map_err(|err| Error::InvalidPartition(err.to_string()))?;
    Ok((circuit, sign))
}

/// Per-step record kept by the builders, in the coordinates of the
/// contracted instance the step was taken in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PivotTrace {
    /// Edges tight before the step and slack after it.
    pub left: Vec<usize>,
    /// Edges that became tight.
    pub entered: Vec<usize>,
    /// Size of the tight arborescence into `s` after the step (circuit walks).
    pub arborescence: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhaseTrace {
    pub node_count: usize,
    pub edge_count: usize,
    /// Index of the edge being inserted, in the contracted instance.
    pub target_edge: usize,
    pub pivots: Vec<PivotTrace>,
}

/// Everything a builder did, phase by phase.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BuildTrace {
    pub target_tree: Vec<usize>,
    pub phases: Vec<PhaseTrace>,
}

struct LevelState<T: Scalar> {
    poly: Polyhedron<T>,
    records: Vec<ContractionRecord<T>>,
    current: Point<T>,
    target: Point<T>,
    /// Target-tree edges still to insert, as edge indices of `poly`.
    pending: Vec<usize>,
    emitted: Vec<Point<T>>,
}

impl<T: Scalar> LevelState<T> {
    fn new(poly: &Polyhedron<T>, source: &Point<T>, target: &Point<T>) -> Result<(Self, Vec<usize>)> {
        let tight = poly.tight_graph(target)?;
        let tree = first_spanning_tree(poly.graph(), tight.indices()).ok_or(Error::NotAVertex)?;
        let pending = tree.edge_indices().to_vec();
        Ok((
            LevelState {
                poly: poly.clone(),
                records: Vec::new(),
                current: source.clone(),
                target: target.clone(),
                pending: pending.clone(),
                emitted: vec![source.clone()],
            },
            pending,
        ))
    }

    fn lift(&self, u: &Point<T>) -> Result<Point<T>> {
        let mut p = u.clone();
        for rec in self.records.iter().rev() {
            p = rec.lift_point(&p)?;
        }
        Ok(p)
    }

    /// Contracts every pending edge already tight at the current point.
    fn contract_tight(&mut self) -> Result<()> {
        while let Some(pos) = self.pending.iter().position(|&e| self.poly.slack(&self.current, e).is_zero()) {
            let edge = self.pending.remove(pos);
            let (next, record) = self.poly.contract_edge(edge)?;
            self.current = record.project_point(&self.current);
            self.target = record.project_point(&self.target);
            self.pending = self
                .pending
                .iter()
                .map(|&e| record.edge_map[e].ok_or_else(|| Error::Internal("target tree edge vanished".into())))
                .collect::<Result<_>>()?;
            self.poly = next;
            self.records.push(record);
        }
        Ok(())
    }

    fn advance(&mut self, circuit: &PartitionCircuit, sign: Sign, eps: &T) -> Result<()> {
        self.current = self.poly.shifted(&self.current, circuit, sign, eps);
        let lifted = self.lift(&self.current)?;
        self.emitted.push(lifted);
        Ok(())
    }

    fn finish(self, original: &Polyhedron<T>, mode: WalkMode, target: &Point<T>) -> Result<Walk<T>> {
        if self.emitted.last() != Some(target) {
            return Err(Error::Internal("builder did not reach the target".into()));
        }
        Walk::from_points(original, mode, self.emitted)
    }
}

fn require_vertices<T: Scalar>(poly: &Polyhedron<T>, source: &Point<T>, target: &Point<T>) -> Result<()> {
    for p in [source, target] {
        if !poly.is_vertex(p)? {
            return Err(Error::NotAVertex);
        }
    }
    Ok(())
}

/// Edge walk from `source` to `target`; see the module docs.
pub fn edge_walk<T: Scalar>(poly: &Polyhedron<T>, source: &Point<T>, target: &Point<T>) -> Result<Walk<T>> {
    build_edge_walk(poly, source, target).map(|(walk, _)| walk)
}

pub fn build_edge_walk<T: Scalar>(poly: &Polyhedron<T>, source: &Point<T>, target: &Point<T>) -> Result<(Walk<T>, BuildTrace)> {
    require_vertices(poly, source, target)?;
    let (mut state, tree) = LevelState::new(poly, source, target)?;
    let mut trace = BuildTrace { target_tree: tree, phases: Vec::new() };
    loop {
        state.contract_tight()?;
        let Some(&rs) = state.pending.first() else { break };
        let n = state.poly.node_count();
        let m = state.poly.edge_count();
        let e = state.poly.graph().edge(rs);
        let mut phase = PhaseTrace { node_count: n, edge_count: m, target_edge: rs, pivots: Vec::new() };
        while !state.poly.slack(&state.current, rs).is_zero() {
            let tight = state.poly.tight_graph(&state.current)?;
            if tight.len() + 1 != n {
                return Err(Error::DegenerateInstance(format!(
                    "vertex with {} tight inequalities on {n} nodes",
                    tight.len()
                )));
            }
            let tree = SpanningTree::new(state.poly.graph(), tight.indices().to_vec())?;
            let split = last_backward_edge(state.poly.graph(), &tree, e.tail, e.head)?;
            let (indicator, sign) = if split.r_side[0] {
                (split.r_side.iter().map(|b| !b).collect(), Sign::Plus)
            } else {
                (split.r_side.clone(), Sign::Minus)
            };
            let circuit = PartitionCircuit::from_indicator(indicator);
            let step = state.poly.max_step(&state.current, &circuit, sign)?;
            if step.entering.len() > 1 {
                return Err(Error::DegenerateInstance(format!(
                    "pivot makes {} inequalities tight at once",
                    step.entering.len()
                )));
            }
            state.advance(&circuit, sign, &step.epsilon)?;
            let after = state.poly.tight_unchecked(&state.current);
            phase.pivots.push(PivotTrace {
                left: tight.indices().iter().copied().filter(|&i| !after.contains(i)).collect(),
                entered: step.entering.indices().to_vec(),
                arborescence: 0,
            });
            if phase.pivots.len() > m {
                return Err(Error::Internal(format!("insertion phase exceeded {m} pivots")));
            }
        }
        trace.phases.push(phase);
    }
    let walk = state.finish(poly, WalkMode::Edge, target)?;
    Ok((walk, trace))
}

/// Circuit walk from `source` to `target`; see the module docs.
pub fn circuit_walk<T: Scalar>(poly: &Polyhedron<T>, source: &Point<T>, target: &Point<T>) -> Result<Walk<T>> {
    build_circuit_walk(poly, source, target).map(|(walk, _)| walk)
}

pub fn build_circuit_walk<T: Scalar>(poly: &Polyhedron<T>, source: &Point<T>, target: &Point<T>) -> Result<(Walk<T>, BuildTrace)> {
    require_vertices(poly, source, target)?;
    let (mut state, tree) = LevelState::new(poly, source, target)?;
    let mut trace = BuildTrace { target_tree: tree, phases: Vec::new() };
    loop {
        state.contract_tight()?;
        let Some(&rs) = state.pending.first() else { break };
        let n = state.poly.node_count();
        let e = state.poly.graph().edge(rs);
        let mut phase =
            PhaseTrace { node_count: n, edge_count: state.poly.edge_count(), target_edge: rs, pivots: Vec::new() };
        while !state.poly.slack(&state.current, rs).is_zero() {
            let before = state.poly.tight_unchecked(&state.current);
            let (circuit, sign) = build_insertion_partition(&state.poly, &state.current, rs)?;
            let step = state.poly.max_step(&state.current, &circuit, sign)?;
            state.advance(&circuit, sign, &step.epsilon)?;
            let after = state.poly.tight_unchecked(&state.current);
            let arborescence = if after.contains(rs) {
                n
            } else {
                let reach = tight_arborescence(&state.poly, &state.current, e.tail.index(), e.head.index())?;
                reach.iter().filter(|&&b| b).count()
            };
            phase.pivots.push(PivotTrace {
                left: before.indices().iter().copied().filter(|&i| !after.contains(i)).collect(),
                entered: step.entering.indices().to_vec(),
                arborescence,
            });
            if phase.pivots.len() >= n {
                return Err(Error::Internal(format!("insertion phase exceeded {} steps", n - 1)));
            }
        }
        trace.phases.push(phase);
    }
    let walk = state.finish(poly, WalkMode::Circuit, target)?;
    Ok((walk, trace))
}
