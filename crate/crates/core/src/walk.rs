//! Walks and their independent validation.

use std::fmt;

use crate::circuits::{PartitionCircuit, Sign, SignedStep};
use crate::error::{Error, Result};
use crate::polyhedron::{Point, Polyhedron, TightEdgeSet};
use crate::scalar::Scalar;
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WalkMode {
    /// Vertex to adjacent vertex along the 1-skeleton.
    Edge,
    /// Maximal steps along circuit directions, possibly through the interior.
    Circuit,
}

impl fmt::Display for WalkMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WalkMode::Edge => "edge",
            WalkMode::Circuit => "circuit",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Walk<T = Rational> {
    pub mode: WalkMode,
    pub points: Vec<Point<T>>,
    /// `steps[i]` leads from `points[i]` to `points[i + 1]`.
    pub steps: Vec<SignedStep<T>>,
}

impl<T: Scalar> Walk<T> {
    pub fn trivial(mode: WalkMode, at: Point<T>) -> Self {
        Walk { mode, points: vec![at], steps: Vec::new() }
    }

    /// Derives the step metadata from consecutive differences. Fails if a
    /// difference is not a positive multiple of a circuit vector.
    pub fn from_points(poly: &Polyhedron<T>, mode: WalkMode, points: Vec<Point<T>>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidWalk("a walk has at least one point".into()));
        }
        let mut steps = Vec::with_capacity(points.len() - 1);
        for (i, pair) in points.windows(2).enumerate() {
            let step = derive_step(poly, &pair[0], &pair[1])
                .map_err(|kind| Error::InvalidWalk(format!("step {i}: {kind}")))?;
            steps.push(step);
        }
        Ok(Walk { mode, points, steps })
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn source(&self) -> &Point<T> {
        &self.points[0]
    }

    pub fn target(&self) -> &Point<T> {
        self.points.last().expect("walks are nonempty")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ViolationKind {
    DimensionMismatch,
    InfeasiblePoint,
    /// Consecutive points coincide (step length must be positive).
    ZeroStep,
    /// The difference is not `ε·g` for a connected bipartition.
    NotACircuitMultiple,
    /// No inequality across the cut is tight at the destination.
    NotMaximal,
    NotAVertex,
    NotAdjacent,
    /// The recorded step metadata disagrees with the points.
    StepMismatch,
    /// Step list length does not match point list length.
    Shape,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            ViolationKind::DimensionMismatch => "wrong dimension",
            ViolationKind::InfeasiblePoint => "infeasible point",
            ViolationKind::ZeroStep => "zero-length step",
            ViolationKind::NotACircuitMultiple => "difference is not a multiple of a circuit",
            ViolationKind::NotMaximal => "step is not maximal",
            ViolationKind::NotAVertex => "point is not a vertex",
            ViolationKind::NotAdjacent => "consecutive vertices are not adjacent",
            ViolationKind::StepMismatch => "recorded step disagrees with the points",
            ViolationKind::Shape => "step count does not match point count",
        };
        f.write_str(text)
    }
}

/// First violation found; `index` is a point index for point-level checks and
/// a step index for step-level checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkViolation {
    pub index: usize,
    pub kind: ViolationKind,
}

impl fmt::Display for WalkViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}", self.kind, self.index)
    }
}

fn derive_step<T: Scalar>(poly: &Polyhedron<T>, from: &Point<T>, to: &Point<T>) -> Result<SignedStep<T>, ViolationKind> {
    let diff = to.difference(from);
    let mut delta: Option<T> = None;
    let mut in_s = vec![false; diff.len()];
    for (i, d) in diff.iter().enumerate() {
        if d.is_zero() {
            continue;
        }
        match &delta {
            None => delta = Some(d.clone()),
            Some(v) if v == d => {}
            Some(_) => return Err(ViolationKind::NotACircuitMultiple),
        }
        in_s[i] = true;
    }
    let delta = delta.ok_or(ViolationKind::ZeroStep)?;
    let circuit = PartitionCircuit::from_indicator(in_s);
    circuit.validate(poly.graph()).map_err(|_| ViolationKind::NotACircuitMultiple)?;
    let sign = if delta.is_positive() { Sign::Plus } else { Sign::Minus };
    let entering: Vec<usize> =
        circuit.blocking_edges(poly.graph(), sign).filter(|&i| poly.slack(to, i).is_zero()).collect();
    Ok(SignedStep { circuit, sign, epsilon: delta.abs(), entering: TightEdgeSet::from_sorted(entering) })
}

/// Checks feasibility, circuit-multiple differences, maximality, and in edge
/// mode vertexhood plus adjacency.
pub fn validate_points<T: Scalar>(poly: &Polyhedron<T>, mode: WalkMode, points: &[Point<T>]) -> Option<WalkViolation> {
    let fail = |index, kind| Some(WalkViolation { index, kind });
    for (i, p) in points.iter().enumerate() {
        if p.dim() != poly.node_count() {
            return fail(i, ViolationKind::DimensionMismatch);
        }
        if !poly.is_feasible(p).expect("dimension checked") {
            return fail(i, ViolationKind::InfeasiblePoint);
        }
        if mode == WalkMode::Edge && !poly.is_vertex(p).expect("feasible") {
            return fail(i, ViolationKind::NotAVertex);
        }
    }
    for (i, pair) in points.windows(2).enumerate() {
        let step = match derive_step(poly, &pair[0], &pair[1]) {
            Ok(step) => step,
            Err(kind) => return fail(i, kind),
        };
        if step.entering.is_empty() {
            return fail(i, ViolationKind::NotMaximal);
        }
        if mode == WalkMode::Edge && !poly.are_adjacent(&pair[0], &pair[1]).unwrap_or(false) {
            return fail(i, ViolationKind::NotAdjacent);
        }
    }
    None
}

/// Validates the points of `walk` and that its recorded steps agree with them.
pub fn validate_walk<T: Scalar>(poly: &Polyhedron<T>, walk: &Walk<T>) -> Option<WalkViolation> {
    if walk.points.is_empty() || walk.steps.len() + 1 != walk.points.len() {
        return Some(WalkViolation { index: 0, kind: ViolationKind::Shape });
    }
    if let Some(v) = validate_points(poly, walk.mode, &walk.points) {
        return Some(v);
    }
    for (i, (pair, step)) in walk.points.windows(2).zip(&walk.steps).enumerate() {
        let derived = derive_step(poly, &pair[0], &pair[1]).expect("validated above");
        if &derived != step {
            return Some(WalkViolation { index: i, kind: ViolationKind::StepMismatch });
        }
    }
    None
}
