//! Helpers shared by the integration tests: random instances and brute-force
//! reference computations that do not use the library's own algorithms.

#![allow(dead_code)]

use circuitwalk::constructions::random_subtournament;
use circuitwalk::{Digraph, Edge, Feasibility, Point, Polyhedron, Rational, Scalar};
use num_traits::{One, Signed, Zero};
use rand::Rng;

pub fn r(p: i64, q: i64) -> Rational {
    Rational::from_fraction(p, q)
}

pub fn pt(f: &[(i64, i64)]) -> Point {
    Point::from_fractions(f).unwrap()
}

pub fn u1() -> Point {
    Point::origin(4)
}

pub fn u2() -> Point {
    pt(&[(0, 1), (2, 3), (4, 3), (2, 1)])
}

/// Sub-tournament with `n` nodes, density in `[0.5, 1]`, costs in `[0, 3]`
/// with denominators at most 20.
pub fn random_tournament<R: Rng>(rng: &mut R, n: usize) -> Polyhedron {
    let density = rng.gen_range(0.5..=1.0);
    random_subtournament(rng, n, density, 3, 20)
}

/// Random connected digraph that may contain antiparallel pairs and negative
/// costs; retried until feasible.
pub fn random_digraph<R: Rng>(rng: &mut R, n: usize) -> Polyhedron {
    loop {
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                match rng.gen_range(0..5) {
                    0 => {}
                    1 => edges.push(Edge::new(a, b)),
                    2 => edges.push(Edge::new(b, a)),
                    _ => {
                        edges.push(Edge::new(a, b));
                        edges.push(Edge::new(b, a));
                    }
                }
            }
        }
        let costs: Vec<Rational> = edges
            .iter()
            .map(|_| {
                let q = rng.gen_range(1..=6);
                r(rng.gen_range(-q..=3 * q), q)
            })
            .collect();
        let Ok(graph) = Digraph::new(n, edges) else { continue };
        let poly = Polyhedron::new(graph, costs).unwrap();
        if poly.feasibility_status().is_feasible() {
            return poly;
        }
    }
}

/// Rank of a rational matrix by Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for i in 0..rows.len() {
            if i != rank && !rows[i][c].is_zero() {
                let f = rows[i][c].clone() / pivot.clone();
                for j in c..cols {
                    let v = rows[rank][j].clone() * f.clone();
                    rows[i][j] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Solves `A x = b` for square `A`; `None` when singular.
pub fn solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = a.len();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero())?;
        a.swap(c, p);
        b.swap(c, p);
        let pivot = a[c][c].clone();
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let f = a[i][c].clone() / pivot.clone();
                for j in c..n {
                    let v = a[c][j].clone() * f.clone();
                    a[i][j] -= v;
                }
                let v = b[c].clone() * f;
                b[i] -= v;
            }
        }
    }
    Some((0..n).map(|i| b[i].clone() / a[i][i].clone()).collect())
}

/// Row of the inequality `-u_tail + u_head <= c`.
pub fn edge_row(n: usize, e: Edge) -> Vec<Rational> {
    let mut row = vec![Rational::zero(); n];
    row[e.tail.0] = -Rational::one();
    row[e.head.0] = Rational::one();
    row
}

pub fn anchor_row(n: usize) -> Vec<Rational> {
    let mut row = vec![Rational::zero(); n];
    row[0] = Rational::one();
    row
}

fn slack(poly: &Polyhedron, u: &[Rational], i: usize) -> Rational {
    let e = poly.graph().edge(i);
    poly.cost(i).clone() + u[e.tail.0].clone() - u[e.head.0].clone()
}

pub fn tight_rows(poly: &Polyhedron, u: &[Rational]) -> Vec<usize> {
    (0..poly.edge_count()).filter(|&i| slack(poly, u, i).is_zero()).collect()
}

/// Vertex test by rank: the tight rows together with `u_0 = 0` have rank `n`.
pub fn is_vertex_by_rank(poly: &Polyhedron, u: &[Rational]) -> bool {
    let n = poly.node_count();
    if (0..poly.edge_count()).any(|i| slack(poly, u, i).is_negative()) {
        return false;
    }
    let mut rows: Vec<Vec<Rational>> = tight_rows(poly, u).into_iter().map(|i| edge_row(n, poly.graph().edge(i))).collect();
    rows.push(anchor_row(n));
    rank(rows) == n
}

/// Adjacency by rank: the common tight rows plus the anchor have rank `n - 1`.
pub fn adjacent_by_rank(poly: &Polyhedron, u: &[Rational], v: &[Rational]) -> bool {
    let n = poly.node_count();
    let tu = tight_rows(poly, u);
    let tv = tight_rows(poly, v);
    let mut rows: Vec<Vec<Rational>> =
        tu.iter().filter(|i| tv.contains(i)).map(|&i| edge_row(n, poly.graph().edge(i))).collect();
    rows.push(anchor_row(n));
    rank(rows) == n - 1
}

fn for_each_subset(m: usize, k: usize, start: usize, chosen: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if chosen.len() == k {
        f(chosen);
        return;
    }
    for i in start..m {
        if m - i < k - chosen.len() {
            break;
        }
        chosen.push(i);
        for_each_subset(m, k, i + 1, chosen, f);
        chosen.pop();
    }
}

/// Vertices by solving every `(n-1)`-subset of inequalities as equalities.
pub fn vertices_by_subsets(poly: &Polyhedron) -> Vec<Vec<Rational>> {
    let n = poly.node_count();
    let mut out: Vec<Vec<Rational>> = Vec::new();
    if n == 1 {
        return vec![vec![Rational::zero()]];
    }
    for_each_subset(poly.edge_count(), n - 1, 0, &mut Vec::new(), &mut |subset| {
        let mut a: Vec<Vec<Rational>> = subset.iter().map(|&i| edge_row(n, poly.graph().edge(i))).collect();
        let mut b: Vec<Rational> = subset.iter().map(|&i| poly.cost(i).clone()).collect();
        a.push(anchor_row(n));
        b.push(Rational::zero());
        if let Some(u) = solve(a, b) {
            if (0..poly.edge_count()).all(|i| !slack(poly, &u, i).is_negative()) && !out.contains(&u) {
                out.push(u);
            }
        }
    });
    out.sort();
    out
}

/// Every simple directed cycle, as edge index lists, by DFS from its
/// smallest node.
pub fn simple_cycles(graph: &Digraph) -> Vec<Vec<usize>> {
    fn extend(graph: &Digraph, start: usize, at: usize, on_path: &mut Vec<bool>, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        for (i, e) in graph.edges().iter().enumerate() {
            if e.tail.0 != at || e.head.0 < start {
                continue;
            }
            if e.head.0 == start {
                let mut cycle = path.clone();
                cycle.push(i);
                out.push(cycle);
            } else if !on_path[e.head.0] {
                on_path[e.head.0] = true;
                path.push(i);
                extend(graph, start, e.head.0, on_path, path, out);
                path.pop();
                on_path[e.head.0] = false;
            }
        }
    }
    let mut out = Vec::new();
    for start in 0..graph.node_count() {
        let mut on_path = vec![false; graph.node_count()];
        on_path[start] = true;
        extend(graph, start, start, &mut on_path, &mut Vec::new(), &mut out);
    }
    out
}

pub fn has_negative_cycle(poly: &Polyhedron) -> bool {
    simple_cycles(poly.graph())
        .iter()
        .any(|c| c.iter().fold(Rational::zero(), |acc, &i| acc + poly.cost(i).clone()).is_negative())
}

/// Number of spanning trees of the underlying multigraph by the matrix-tree
/// theorem.
pub fn spanning_tree_count(graph: &Digraph) -> usize {
    let n = graph.node_count();
    if n == 1 {
        return 1;
    }
    let mut lap = vec![vec![Rational::zero(); n]; n];
    for e in graph.edges() {
        let (a, b) = (e.tail.0, e.head.0);
        lap[a][a] += Rational::one();
        lap[b][b] += Rational::one();
        lap[a][b] -= Rational::one();
        lap[b][a] -= Rational::one();
    }
    let mut m: Vec<Vec<Rational>> = lap[1..].iter().map(|row| row[1..].to_vec()).collect();
    let k = n - 1;
    let mut det = Rational::one();
    for c in 0..k {
        let Some(p) = (c..k).find(|&i| !m[i][c].is_zero()) else { return 0 };
        if p != c {
            m.swap(c, p);
            det = -det;
        }
        let pivot = m[c][c].clone();
        det *= pivot.clone();
        for i in c + 1..k {
            if !m[i][c].is_zero() {
                let f = m[i][c].clone() / pivot.clone();
                for j in c..k {
                    let v = m[c][j].clone() * f.clone();
                    m[i][j] -= v;
                }
            }
        }
    }
    det.to_integer().try_into().expect("small count")
}

/// Connected bipartitions `(R, S)` with `0` in `R`, by checking every subset.
pub fn partitions_by_brute_force(graph: &Digraph) -> Vec<Vec<usize>> {
    let n = graph.node_count();
    let connected = |side: &[bool]| {
        let Some(first) = (0..n).find(|&v| side[v]) else { return false };
        let mut seen = vec![false; n];
        seen[first] = true;
        let mut stack = vec![first];
        while let Some(v) = stack.pop() {
            for e in graph.edges() {
                for (x, y) in [(e.tail.0, e.head.0), (e.head.0, e.tail.0)] {
                    if x == v && side[y] && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        (0..n).all(|v| !side[v] || seen[v])
    };
    let mut out = Vec::new();
    for mask in 1u32..(1 << (n - 1)) {
        let s: Vec<bool> = (0..n).map(|v| v > 0 && mask & (1 << (v - 1)) != 0).collect();
        let rside: Vec<bool> = s.iter().map(|b| !b).collect();
        if connected(&s) && connected(&rside) {
            out.push((0..n).filter(|&v| s[v]).collect());
        }
    }
    out.sort();
    out
}

pub fn feasible(poly: &Polyhedron) -> bool {
    matches!(poly.feasibility_status(), Feasibility::Feasible { .. })
}
