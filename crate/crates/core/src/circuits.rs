//! Circuit directions as node bipartitions and maximal circuit steps.
//!
//! A circuit is given by a split `V = R ∪ S` with both sides connected in the
//! underlying undirected graph. Its direction is the 0/1 indicator of `S`.
//! The representation always keeps the anchor in `R`; the [`Sign`] of a step
//! carries the direction.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::polyhedron::{Point, Polyhedron, TightEdgeSet};
use crate::scalar::Scalar;
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    /// Raise every coordinate in `S`.
    Plus,
    /// Lower every coordinate in `S`.
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// The `S` side of a connected bipartition, anchor excluded.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartitionCircuit {
    members: Vec<usize>,
    in_s: Vec<bool>,
}

impl PartitionCircuit {
    pub fn new(graph: &Digraph, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let n = graph.node_count();
        let mut in_s = vec![false; n];
        for v in members {
            if v >= n {
                return Err(Error::BadPartition(format!("node {v} out of range")));
            }
            in_s[v] = true;
        }
        let circuit = Self::from_indicator(in_s);
        circuit.validate(graph)?;
        Ok(circuit)
    }

    pub(crate) fn from_indicator(in_s: Vec<bool>) -> Self {
        let members = in_s.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect();
        PartitionCircuit { members, in_s }
    }

    pub(crate) fn validate(&self, graph: &Digraph) -> Result<()> {
        if self.members.is_empty() {
            return Err(Error::BadPartition("S is empty".into()));
        }
        if self.in_s[0] {
            return Err(Error::BadPartition("anchor must lie in R".into()));
        }
        if !graph.induces_connected(&self.in_s) {
            return Err(Error::BadPartition("S is not connected".into()));
        }
        let r: Vec<bool> = self.in_s.iter().map(|b| !b).collect();
        if !graph.induces_connected(&r) {
            return Err(Error::BadPartition("R is not connected".into()));
        }
        Ok(())
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.in_s[v]
    }

    pub fn node_count(&self) -> usize {
        self.in_s.len()
    }

    /// `g_i = 1` on `S`, `0` on `R`.
    pub fn vector<T: Scalar>(&self) -> Vec<T> {
        self.in_s.iter().map(|&b| if b { T::one() } else { T::zero() }).collect()
    }

    /// Edges along which a step with `sign` is blocked: `R -> S` for
    /// [`Sign::Plus`], `S -> R` for [`Sign::Minus`].
    pub fn blocking_edges<'g>(&'g self, graph: &'g Digraph, sign: Sign) -> impl Iterator<Item = usize> + 'g {
        graph.edges().iter().enumerate().filter_map(move |(i, e)| {
            let (t, h) = (self.in_s[e.tail.0], self.in_s[e.head.0]);
            let crosses = match sign {
                Sign::Plus => !t && h,
                Sign::Minus => t && !h,
            };
            crosses.then_some(i)
        })
    }
}

impl fmt::Display for PartitionCircuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.members.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "v{v}")?;
        }
        write!(f, "}}")
    }
}

/// A maximal step: `u ± epsilon·g` with `epsilon > 0` and the edges that
/// become tight at the destination.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedStep<T = Rational> {
    pub circuit: PartitionCircuit,
    pub sign: Sign,
    pub epsilon: T,
    pub entering: TightEdgeSet,
}

/// Every valid `S` (nonempty, anchor-free, both sides connected), sorted
/// lexicographically by member list. Exponential in the node count.
pub fn enumerate_partitions(graph: &Digraph) -> Vec<PartitionCircuit> {
    let n = graph.node_count();
    assert!(n <= 31, "partition enumeration is limited to 31 nodes");
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << (n - 1)) {
        let mut in_s = vec![false; n];
        for (bit, slot) in in_s.iter_mut().skip(1).enumerate() {
            *slot = mask & (1 << bit) != 0;
        }
        let r: Vec<bool> = in_s.iter().map(|b| !b).collect();
        if graph.induces_connected(&in_s) && graph.induces_connected(&r) {
            out.push(PartitionCircuit::from_indicator(in_s));
        }
    }
    out.sort();
    out
}

/// The circuit vector of `S` in dimension `n`.
pub fn circuit_vector<T: Scalar>(members: &[usize], n: usize) -> Vec<T> {
    let mut g = vec![T::zero(); n];
    for &v in members {
        g[v] = T::one();
    }
    g
}

/// Smallest slack among `candidates` with every edge attaining it, or `None`
/// when `candidates` is empty.
pub(crate) fn min_slack<T: Scalar>(slacks: &[T], candidates: impl Iterator<Item = usize>) -> Option<(T, Vec<usize>)> {
    let mut best: Option<(T, Vec<usize>)> = None;
    for i in candidates {
        let s = &slacks[i];
        match &mut best {
            None => best = Some((s.clone(), vec![i])),
            Some((value, edges)) => {
                if s < value {
                    *value = s.clone();
                    edges.clear();
                    edges.push(i);
                } else if s == value {
                    edges.push(i);
                }
            }
        }
    }
    best
}

impl<T: Scalar> Polyhedron<T> {
    /// Longest feasible move from `u` along `±g(S)`.
    pub fn max_step(&self, u: &Point<T>, circuit: &PartitionCircuit, sign: Sign) -> Result<SignedStep<T>> {
        self.require_feasible(u)?;
        if circuit.node_count() != self.node_count() {
            return Err(Error::DimensionMismatch { expected: self.node_count(), found: circuit.node_count() });
        }
        let slacks = self.slacks(u);
        let (epsilon, mut entering) =
            min_slack(&slacks, circuit.blocking_edges(self.graph(), sign)).ok_or(Error::UnboundedDirection)?;
        if epsilon.is_zero() {
            return Err(Error::NotApplicable);
        }
        entering.sort_unstable();
        Ok(SignedStep { circuit: circuit.clone(), sign, epsilon, entering: TightEdgeSet::from_sorted(entering) })
    }

    /// `u ± epsilon·g` without any consistency check.
    pub(crate) fn shifted(&self, u: &Point<T>, circuit: &PartitionCircuit, sign: Sign, epsilon: &T) -> Point<T> {
        let coords = u
            .coords()
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if !circuit.contains(i) {
                    c.clone()
                } else {
                    match sign {
                        Sign::Plus => c.clone() + epsilon.clone(),
                        Sign::Minus => c.clone() - epsilon.clone(),
                    }
                }
            })
            .collect();
        Point::new(coords).expect("anchor is never in S")
    }

    /// Applies a step previously computed by [`Polyhedron::max_step`] at `u`.
    pub fn apply_circuit_step(&self, u: &Point<T>, step: &SignedStep<T>) -> Result<Point<T>> {
        let fresh = self.max_step(u, &step.circuit, step.sign).map_err(|e| match e {
            Error::NotApplicable | Error::UnboundedDirection => Error::StaleStep,
            other => other,
        })?;
        if fresh.epsilon != step.epsilon || fresh.entering != step.entering {
            return Err(Error::StaleStep);
        }
        Ok(self.shifted(u, &step.circuit, step.sign, &step.epsilon))
    }

    /// Each applicable maximal step from `u` over all partitions and signs.
    pub fn circuit_steps_from(&self, u: &Point<T>, partitions: &[PartitionCircuit]) -> Result<Vec<(SignedStep<T>, Point<T>)>> {
        self.require_feasible(u)?;
        let slacks = self.slacks(u);
        let mut out = Vec::new();
        for circuit in partitions {
            for sign in Sign::BOTH {
                let Some((epsilon, entering)) = min_slack(&slacks, circuit.blocking_edges(self.graph(), sign)) else {
                    continue;
                };
                if epsilon.is_zero() {
                    continue;
                }
                let dest = self.shifted(u, circuit, sign, &epsilon);
                let step = SignedStep {
                    circuit: circuit.clone(),
                    sign,
                    epsilon,
                    entering: TightEdgeSet::from_sorted(entering),
                };
                out.push((step, dest));
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::example_graph;
    use crate::graph::Edge;

    fn s(members: &[usize]) -> PartitionCircuit {
        PartitionCircuit::new(example_graph().graph(), members.iter().copied()).unwrap()
    }

    fn pt(f: &[(i64, i64)]) -> Point {
        Point::from_fractions(f).unwrap()
    }

    #[test]
    fn partitions_of_small_graphs() {
        let single_edge = Digraph::new(2, vec![Edge::new(0, 1)]).unwrap();
        let parts = enumerate_partitions(&single_edge);
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].members(), &[1]);

        let path = Digraph::new(3, vec![Edge::new(0, 1), Edge::new(1, 2)]).unwrap();
        let members: Vec<Vec<usize>> = enumerate_partitions(&path).iter().map(|p| p.members().to_vec()).collect();
        assert_eq!(members, vec![vec![1, 2], vec![2]]);

        let all: Vec<Vec<usize>> =
            enumerate_partitions(example_graph().graph()).iter().map(|p| p.members().to_vec()).collect();
        assert_eq!(
            all,
            vec![vec![1], vec![1, 2], vec![1, 2, 3], vec![1, 3], vec![2], vec![2, 3], vec![3]]
        );
    }

    #[test]
    fn circuit_vectors() {
        let v = |m: &[usize]| circuit_vector::<Rational>(m, 4);
        let r = |x: [i64; 4]| x.map(Rational::from_int).to_vec();
        assert_eq!(v(&[3]), r([0, 0, 0, 1]));
        assert_eq!(v(&[1, 3]), r([0, 1, 0, 1]));
        assert_eq!(v(&[1, 2, 3]), r([0, 1, 1, 1]));
        assert_eq!(s(&[1, 3]).vector::<Rational>(), r([0, 1, 0, 1]));
    }

    #[test]
    fn invalid_partitions_are_rejected() {
        let g = example_graph();
        assert!(PartitionCircuit::new(g.graph(), [0, 1]).is_err());
        assert!(PartitionCircuit::new(g.graph(), []).is_err());
        let path = Digraph::new(3, vec![Edge::new(0, 1), Edge::new(1, 2)]).unwrap();
        assert!(PartitionCircuit::new(&path, [1]).is_err());
    }

    #[test]
    fn maximal_steps_from_the_origin() {
        let p = example_graph();
        let o = Point::origin(4);
        let step = p.max_step(&o, &s(&[3]), Sign::Plus).unwrap();
        assert_eq!(step.epsilon, Rational::from_fraction(10, 9));
        assert_eq!(step.entering.indices(), &[8]);

        for sign in Sign::BOTH {
            assert_eq!(p.max_step(&o, &s(&[1, 2]), sign), Err(Error::NotApplicable));
        }

        let step = p.max_step(&o, &s(&[1]), Sign::Minus).unwrap();
        assert_eq!(step.epsilon, Rational::from_int(1));
        assert_eq!(step.entering.indices(), &[7]);
    }

    #[test]
    fn applying_steps() {
        let p = example_graph();
        let o = Point::origin(4);
        let apply = |m: &[usize], sign| {
            let step = p.max_step(&o, &s(m), sign).unwrap();
            p.apply_circuit_step(&o, &step).unwrap()
        };
        assert_eq!(apply(&[1, 3], Sign::Plus), pt(&[(0, 1), (1, 1), (0, 1), (1, 1)]));
        assert_eq!(apply(&[1, 2, 3], Sign::Plus), pt(&[(0, 1), (1, 1), (1, 1), (1, 1)]));
        assert_eq!(apply(&[1], Sign::Minus), pt(&[(0, 1), (-1, 1), (0, 1), (0, 1)]));
    }

    #[test]
    fn stale_steps_are_refused() {
        let p = example_graph();
        let o = Point::origin(4);
        let step = p.max_step(&o, &s(&[3]), Sign::Plus).unwrap();
        let moved = p.apply_circuit_step(&o, &step).unwrap();
        assert_eq!(p.apply_circuit_step(&moved, &step), Err(Error::StaleStep));
    }

    #[test]
    fn unbounded_directions() {
        let p = Polyhedron::new(
            Digraph::new(2, vec![Edge::new(0, 1)]).unwrap(),
            vec![Rational::from_int(1)],
        )
        .unwrap();
        let circuit = PartitionCircuit::new(p.graph(), [1]).unwrap();
        assert_eq!(p.max_step(&Point::origin(2), &circuit, Sign::Minus), Err(Error::UnboundedDirection));
        assert!(p.max_step(&Point::origin(2), &circuit, Sign::Plus).is_ok());
    }
}
