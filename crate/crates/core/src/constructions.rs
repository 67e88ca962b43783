//! Instance generators: the four-node example, glueing, the lower-bound
//! family, leaf addition, and complete bipartite (transportation) instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Digraph, Edge, NodeId};
use crate::polyhedron::Polyhedron;
use crate::scalar::Scalar;
use crate::Rational;

/// `(tail, head, numerator, denominator)` of the four-node example.
const EXAMPLE_EDGES: [(usize, usize, i64, i64); 9] = [
    (3, 0, 0, 1),
    (2, 0, 0, 1),
    (3, 1, 0, 1),
    (0, 3, 2, 1),
    (0, 2, 4, 3),
    (1, 3, 4, 3),
    (0, 1, 1, 1),
    (1, 2, 1, 1),
    (2, 3, 10, 9),
];

/// Four nodes, circuit diameter 4.
pub fn example_graph() -> Polyhedron {
    example_graph_in()
}

pub fn example_graph_in<T: Scalar>() -> Polyhedron<T> {
    let edges = EXAMPLE_EDGES.iter().map(|&(t, h, _, _)| Edge::new(t, h)).collect();
    let costs = EXAMPLE_EDGES.iter().map(|&(_, _, p, q)| T::from_fraction(p, q)).collect();
    Polyhedron::new(Digraph::new(4, edges).expect("example graph is valid"), costs).expect("costs match edges")
}

/// Parts to fuse: each polyhedron together with the node that gets identified
/// with the shared node.
#[derive(Debug, Clone)]
pub struct GlueSpec<T = Rational> {
    pub parts: Vec<(Polyhedron<T>, NodeId)>,
}

#[derive(Debug, Clone)]
pub struct Glued<T = Rational> {
    pub poly: Polyhedron<T>,
    /// `node_maps[i][v]` is the glued index of node `v` of part `i`.
    pub node_maps: Vec<Vec<usize>>,
}

/// Fuses the attach nodes of all parts into node 0 of the result. The other
/// nodes follow part by part in their original order; costs are unchanged.
pub fn glue<T: Scalar>(spec: &GlueSpec<T>) -> Result<Glued<T>> {
    if spec.parts.is_empty() {
        return Err(Error::Validation("glueing needs at least one part".into()));
    }
    let mut next = 1;
    let mut node_maps = Vec::with_capacity(spec.parts.len());
    let mut edges = Vec::new();
    for (poly, attach) in &spec.parts {
        let n = poly.node_count();
        if attach.index() >= n {
            return Err(Error::Validation(format!("attach node {attach} out of range for {n} nodes")));
        }
        let map: Vec<usize> = (0..n)
            .map(|v| {
                if v == attach.index() {
                    0
                } else {
                    next += 1;
                    next - 1
                }
            })
            .collect();
        for (i, e) in poly.graph().edges().iter().enumerate() {
            edges.push((map[e.tail.index()], map[e.head.index()], poly.cost(i).clone()));
        }
        node_maps.push(map);
    }
    let poly = Polyhedron::from_merged_edges(next, edges)?;
    Ok(Glued { poly, node_maps })
}

/// `k` copies of the example glued at their node `v0`.
pub fn family_gk(k: usize) -> Result<Polyhedron> {
    if k == 0 {
        return Err(Error::Validation("k must be at least 1".into()));
    }
    let parts = (0..k).map(|_| (example_graph(), NodeId::ANCHOR)).collect();
    Ok(glue(&GlueSpec { parts })?.poly)
}

/// Adds a node `n` and the edge `attach -> n` with cost 0.
pub fn add_leaf<T: Scalar>(poly: &Polyhedron<T>, attach: NodeId) -> Result<Polyhedron<T>> {
    let n = poly.node_count();
    if attach.index() >= n {
        return Err(Error::Validation(format!("attach node {attach} out of range for {n} nodes")));
    }
    let mut edges = poly.graph().edges().to_vec();
    edges.push(Edge::new(attach.index(), n));
    let mut costs = poly.costs().to_vec();
    costs.push(T::zero());
    Polyhedron::new(Digraph::new(n + 1, edges)?, costs)
}

/// The `n`-node member of the lower-bound family: `G^k` with
/// `k = (n-1)/3` plus leaves at the anchor.
pub fn lower_bound_instance(n: usize) -> Result<Polyhedron> {
    if n < 4 {
        return Err(Error::Validation("the family starts at 4 nodes".into()));
    }
    let k = (n - 1) / 3;
    let mut poly = family_gk(k)?;
    while poly.node_count() < n {
        poly = add_leaf(&poly, NodeId::ANCHOR)?;
    }
    Ok(poly)
}

/// Nodes `0..m` on the left, `m..m+n` on the right, edge `i -> m+j` with cost
/// `costs[i][j]`.
pub fn complete_bipartite<T: Scalar>(m: usize, n: usize, costs: &[Vec<T>]) -> Result<Polyhedron<T>> {
    if m == 0 || n == 0 {
        return Err(Error::Validation("both sides need at least one node".into()));
    }
    if costs.len() != m || costs.iter().any(|row| row.len() != n) {
        return Err(Error::Validation(format!("expected a {m}x{n} cost matrix")));
    }
    let mut edges = Vec::with_capacity(m * n);
    let mut flat = Vec::with_capacity(m * n);
    for (i, row) in costs.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            edges.push(Edge::new(i, m + j));
            flat.push(c.clone());
        }
    }
    Polyhedron::new(Digraph::new(m + n, edges)?, flat)
}

/// Random rational in `[0, max_value]` (or `(0, max_value]` when `positive`)
/// with denominator at most `max_denom`.
fn random_rational<R: Rng, T: Scalar>(rng: &mut R, max_value: i64, max_denom: i64, positive: bool) -> T {
    let q = rng.gen_range(1..=max_denom);
    let p = rng.gen_range(i64::from(positive)..=max_value * q);
    T::from_fraction(p, q)
}

/// Complete bipartite instance with costs in `(0, 10]`, denominators at most 100.
pub fn random_bipartite(m: usize, n: usize, seed: u64) -> Result<Polyhedron> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let costs: Vec<Vec<Rational>> =
        (0..m).map(|_| (0..n).map(|_| random_rational(&mut rng, 10, 100, true)).collect()).collect();
    complete_bipartite(m, n, &costs)
}

/// Connected orientation of a random subgraph of `K_n`: each node pair gets
/// one edge in a random direction with probability `density`. Costs lie in
/// `[0, max_cost]` with denominators at most `max_denom`, so the origin is
/// always feasible.
pub fn random_subtournament<R: Rng, T: Scalar>(
    rng: &mut R,
    n: usize,
    density: f64,
    max_cost: i64,
    max_denom: i64,
) -> Polyhedron<T> {
    assert!(n >= 1, "need at least one node");
    loop {
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if rng.gen_bool(density) {
                    edges.push(if rng.gen_bool(0.5) { Edge::new(a, b) } else { Edge::new(b, a) });
                }
            }
        }
        let costs = (0..edges.len()).map(|_| random_rational(rng, max_cost, max_denom, false)).collect();
        if let Ok(graph) = Digraph::new(n, edges) {
            return Polyhedron::new(graph, costs).expect("one cost per edge");
        }
    }
}

/// Adds an independent random `r / 10^9` with `1 <= r <= 10^6` to every cost.
pub fn perturb_costs<T: Scalar>(poly: &Polyhedron<T>, seed: u64) -> Polyhedron<T> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let costs = poly
        .costs()
        .iter()
        .map(|c| c.clone() + T::from_fraction(rng.gen_range(1..=1_000_000), 1_000_000_000))
        .collect();
    Polyhedron::new(poly.graph().clone(), costs).expect("same edge count")
}
