//! The dual network flow polyhedron `{u : -u_a + u_b <= c_ab for all ab, u_0 = 0}`
//! and its pointwise combinatorics: feasibility, tight graphs, vertices.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{ControlFlow, Index};

use crate::error::{Error, Result};
use crate::graph::{Digraph, Edge};
use crate::scalar::Scalar;
use crate::trees::{for_each_spanning_tree, SpanningTree};
use crate::Rational;

/// A point `u` with `u_0 = 0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point<T = Rational>(Vec<T>);

impl<T: Scalar> Point<T> {
    pub fn new(coords: Vec<T>) -> Result<Self> {
        match coords.first() {
            None => Err(Error::DimensionMismatch { expected: 1, found: 0 }),
            Some(c) if !c.is_zero() => {
                Err(Error::Validation(format!("anchor coordinate must be 0, got {c}")))
            }
            Some(_) => Ok(Point(coords)),
        }
    }

    /// Shifts all coordinates so the anchor coordinate becomes zero.
    pub fn anchored(mut coords: Vec<T>) -> Self {
        assert!(!coords.is_empty(), "a point has at least one coordinate");
        let base = coords[0].clone();
        if !base.is_zero() {
            for c in &mut coords {
                *c = c.clone() - base.clone();
            }
        }
        Point(coords)
    }

    pub fn origin(dim: usize) -> Self {
        Point(vec![T::zero(); dim])
    }

    pub fn from_fractions(fractions: &[(i64, i64)]) -> Result<Self> {
        Point::new(fractions.iter().map(|&(n, d)| T::from_fraction(n, d)).collect())
    }

    pub fn coords(&self) -> &[T] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn into_coords(self) -> Vec<T> {
        self.0
    }

    /// Coordinate-wise `self - other`.
    pub fn difference(&self, other: &Point<T>) -> Vec<T> {
        self.0.iter().zip(&other.0).map(|(a, b)| a.clone() - b.clone()).collect()
    }
}

impl<T> Index<usize> for Point<T> {
    type Output = T;
    fn index(&self, i: usize) -> &T {
        &self.0[i]
    }
}

impl<T: Scalar> fmt::Display for Point<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c.compact_string())?;
        }
        write!(f, ")")
    }
}

/// Indices of the edges whose inequality holds with equality at some point.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct TightEdgeSet(Vec<usize>);

impl TightEdgeSet {
    pub fn from_sorted(indices: Vec<usize>) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        TightEdgeSet(indices)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, edge: usize) -> bool {
        self.0.binary_search(&edge).is_ok()
    }

    pub fn intersection(&self, other: &TightEdgeSet) -> TightEdgeSet {
        TightEdgeSet(self.0.iter().copied().filter(|&e| other.contains(e)).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility<T = Rational> {
    Feasible { witness: Point<T> },
    /// Edge indices of a directed cycle with negative total cost.
    Infeasible { negative_cycle: Vec<usize> },
}

impl<T> Feasibility<T> {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegeneracyReport<T = Rational> {
    pub vertex_count: usize,
    /// Vertices whose tight graph has more than `|V| - 1` edges.
    pub witnesses: Vec<Point<T>>,
}

impl<T> DegeneracyReport<T> {
    pub fn is_degenerate(&self) -> bool {
        !self.witnesses.is_empty()
    }
}

/// Graph plus cost vector: the data defining `P_{G,c}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polyhedron<T = Rational> {
    graph: Digraph,
    costs: Vec<T>,
}

impl<T: Scalar> Polyhedron<T> {
    pub fn new(graph: Digraph, costs: Vec<T>) -> Result<Self> {
        if costs.len() != graph.edge_count() {
            return Err(Error::DimensionMismatch { expected: graph.edge_count(), found: costs.len() });
        }
        Ok(Polyhedron { graph, costs })
    }

    /// Builds a polyhedron from `(tail, head, cost)` triples, keeping the
    /// smallest cost when a `(tail, head)` pair repeats. First-occurrence
    /// order is preserved.
    pub fn from_merged_edges(
        node_count: usize,
        edges: impl IntoIterator<Item = (usize, usize, T)>,
    ) -> Result<Self> {
        let mut position: HashMap<(usize, usize), usize> = HashMap::new();
        let mut list: Vec<Edge> = Vec::new();
        let mut costs: Vec<T> = Vec::new();
        for (tail, head, cost) in edges {
            match position.get(&(tail, head)) {
                Some(&i) => {
                    if cost < costs[i] {
                        costs[i] = cost;
                    }
                }
                None => {
                    position.insert((tail, head), list.len());
                    list.push(Edge::new(tail, head));
                    costs.push(cost);
                }
            }
        }
        Polyhedron::new(Digraph::new(node_count, list)?, costs)
    }

    pub fn graph(&self) -> &Digraph {
        &self.graph
    }

    pub fn costs(&self) -> &[T] {
        &self.costs
    }

    pub fn cost(&self, edge: usize) -> &T {
        &self.costs[edge]
    }

    pub fn node_count(&self) -> usize {
        self.graph.node_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    /// Copy with one cost replaced.
    pub fn with_cost(&self, edge: usize, cost: T) -> Self {
        let mut costs = self.costs.clone();
        costs[edge] = cost;
        Polyhedron { graph: self.graph.clone(), costs }
    }

    fn check_dim(&self, u: &Point<T>) -> Result<()> {
        if u.dim() != self.node_count() {
            return Err(Error::DimensionMismatch { expected: self.node_count(), found: u.dim() });
        }
        Ok(())
    }

    /// `c_e - (-u_tail + u_head)`; nonnegative exactly when edge `e` is satisfied.
    pub fn slack(&self, u: &Point<T>, edge: usize) -> T {
        let e = self.graph.edge(edge);
        self.costs[edge].clone() + u[e.tail.0].clone() - u[e.head.0].clone()
    }

    pub fn slacks(&self, u: &Point<T>) -> Vec<T> {
        (0..self.edge_count()).map(|i| self.slack(u, i)).collect()
    }

    pub fn is_feasible(&self, u: &Point<T>) -> Result<bool> {
        self.check_dim(u)?;
        Ok((0..self.edge_count()).all(|i| !self.slack(u, i).is_negative()))
    }

    pub(crate) fn require_feasible(&self, u: &Point<T>) -> Result<()> {
        if self.is_feasible(u)? {
            Ok(())
        } else {
            Err(Error::InfeasiblePoint)
        }
    }

    /// Bellman-Ford from a virtual source joined to every node with cost 0.
    pub fn feasibility_status(&self) -> Feasibility<T> {
        let n = self.node_count();
        let mut dist = vec![T::zero(); n];
        let mut pred: Vec<Option<usize>> = vec![None; n];
        let mut last_relaxed = None;
        for _ in 0..n {
            last_relaxed = None;
            for (i, e) in self.graph.edges().iter().enumerate() {
                let candidate = dist[e.tail.0].clone() + self.costs[i].clone();
                if candidate < dist[e.head.0] {
                    dist[e.head.0] = candidate;
                    pred[e.head.0] = Some(i);
                    last_relaxed = Some(e.head.0);
                }
            }
            if last_relaxed.is_none() {
                return Feasibility::Feasible { witness: Point::anchored(dist) };
            }
        }
        // Still relaxing after n rounds: walk predecessors back onto the cycle.
        let mut v = last_relaxed.expect("relaxation happened in the final round");
        for _ in 0..n {
            let e = pred[v].expect("relaxed node has a predecessor");
            v = self.graph.edge(e).tail.0;
        }
        let start = v;
        let mut cycle = Vec::new();
        loop {
            let e = pred[v].expect("cycle node has a predecessor");
            cycle.push(e);
            v = self.graph.edge(e).tail.0;
            if v == start {
                break;
            }
        }
        cycle.reverse();
        Feasibility::Infeasible { negative_cycle: cycle }
    }

    /// Edges tight at `u` without a feasibility check.
    pub(crate) fn tight_unchecked(&self, u: &Point<T>) -> TightEdgeSet {
        TightEdgeSet((0..self.edge_count()).filter(|&i| self.slack(u, i).is_zero()).collect())
    }

    /// `E(G(u))`: edges whose inequality is tight at the feasible point `u`.
    pub fn tight_graph(&self, u: &Point<T>) -> Result<TightEdgeSet> {
        self.require_feasible(u)?;
        Ok(self.tight_unchecked(u))
    }

    /// The point fixed by making every tree edge tight, if feasible.
    pub fn vertex_from_tree(&self, tree: &SpanningTree) -> Result<Point<T>> {
        let u = self.tree_point(tree);
        match (0..self.edge_count()).find(|&i| self.slack(&u, i).is_negative()) {
            Some(edge) => Err(Error::InfeasibleTree { edge }),
            None => Ok(u),
        }
    }

    /// Solves the tree equations from the anchor outward; no feasibility check.
    pub(crate) fn tree_point(&self, tree: &SpanningTree) -> Point<T> {
        let n = self.node_count();
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &i in tree.edge_indices() {
            let e = self.graph.edge(i);
            incident[e.tail.0].push(i);
            incident[e.head.0].push(i);
        }
        let mut coords: Vec<Option<T>> = vec![None; n];
        coords[0] = Some(T::zero());
        let mut stack = vec![0usize];
        while let Some(v) = stack.pop() {
            let uv = coords[v].clone().expect("visited node has a value");
            for &i in &incident[v] {
                let e = self.graph.edge(i);
                let (w, value) = if e.tail.0 == v {
                    (e.head.0, uv.clone() + self.costs[i].clone())
                } else {
                    (e.tail.0, uv.clone() - self.costs[i].clone())
                };
                if coords[w].is_none() {
                    coords[w] = Some(value);
                    stack.push(w);
                }
            }
        }
        Point(coords.into_iter().map(|c| c.expect("tree spans all nodes")).collect())
    }

    /// A feasible point is a vertex iff its tight graph is connected and
    /// touches every node.
    pub fn is_vertex(&self, u: &Point<T>) -> Result<bool> {
        let tight = self.tight_graph(u)?;
        Ok(self.spans(&tight))
    }

    pub(crate) fn spans(&self, edges: &TightEdgeSet) -> bool {
        self.graph.component_count(edges.indices().iter().map(|&i| self.graph.edge(i))) == 1
    }

    /// Number of connected components of `(V, edges)`.
    pub fn components_of(&self, edges: &TightEdgeSet) -> usize {
        self.graph.component_count(edges.indices().iter().map(|&i| self.graph.edge(i)))
    }

    /// All vertices, each with the spanning trees that determine it, in order
    /// of first appearance during lexicographic tree enumeration.
    pub fn vertices_with_trees(&self, tree_cap: usize) -> Result<Vec<(Point<T>, Vec<SpanningTree>)>> {
        let mut index: BTreeMap<Point<T>, usize> = BTreeMap::new();
        let mut out: Vec<(Point<T>, Vec<SpanningTree>)> = Vec::new();
        for_each_spanning_tree(&self.graph, tree_cap, |tree| {
            if let Ok(u) = self.vertex_from_tree(tree) {
                match index.get(&u) {
                    Some(&k) => out[k].1.push(tree.clone()),
                    None => {
                        index.insert(u.clone(), out.len());
                        out.push((u, vec![tree.clone()]));
                    }
                }
            }
            ControlFlow::Continue(())
        })?;
        Ok(out)
    }

    /// Lists every vertex whose tight graph has more than `|V| - 1` edges.
    pub fn degeneracy_report(&self, tree_cap: usize) -> Result<DegeneracyReport<T>> {
        let vertices = self.vertices_with_trees(tree_cap)?;
        let witnesses = vertices
            .iter()
            .filter(|(u, _)| self.tight_unchecked(u).len() + 1 > self.node_count())
            .map(|(u, _)| u.clone())
            .collect();
        Ok(DegeneracyReport { vertex_count: vertices.len(), witnesses })
    }
}
