//! The library's enumerations and searches against brute-force references
//! built from linear algebra and subset enumeration.

mod common;

use circuitwalk::circuits::enumerate_partitions;
use circuitwalk::constructions::example_graph;
use circuitwalk::oracle::{CircuitSearch, Skeleton};
use circuitwalk::trees::spanning_trees;
use circuitwalk::{
    parse_graph, serialize_graph, validate_walk, Digraph, Edge, Feasibility, Limits, Point, Polyhedron, Rational, Scalar,
    SmallRational, Walk, WalkMode, DEFAULT_TREE_CAP,
};
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;

fn coords(p: &Point) -> Vec<Rational> {
    p.coords().to_vec()
}

fn sample(seed: u64, count: usize, sizes: std::ops::RangeInclusive<usize>) -> Vec<Polyhedron> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(sizes.clone());
            random_digraph(&mut rng, n)
        })
        .collect()
}

/// Connected digraph with costs in `[-2, 3]`, feasible or not.
fn any_digraph(rng: &mut ChaCha8Rng, n: usize) -> Polyhedron {
    loop {
        let mut edges = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a != b && rng.gen_bool(0.45) {
                    edges.push(Edge::new(a, b));
                }
            }
        }
        let costs = edges.iter().map(|_| r(rng.gen_range(-4..=6), 2)).collect();
        if let Ok(graph) = Digraph::new(n, edges) {
            return Polyhedron::new(graph, costs).unwrap();
        }
    }
}

#[test]
fn feasibility_matches_negative_cycle_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let (mut feasible_seen, mut infeasible_seen) = (0, 0);
    for _ in 0..300 {
        let n = rng.gen_range(2..=5);
        let poly = any_digraph(&mut rng, n);
        match poly.feasibility_status() {
            Feasibility::Feasible { witness } => {
                feasible_seen += 1;
                assert!(!has_negative_cycle(&poly));
                assert!(poly.is_feasible(&witness).unwrap());
            }
            Feasibility::Infeasible { negative_cycle } => {
                infeasible_seen += 1;
                assert!(has_negative_cycle(&poly));
                let g = poly.graph();
                for (i, &e) in negative_cycle.iter().enumerate() {
                    let next = negative_cycle[(i + 1) % negative_cycle.len()];
                    assert_eq!(g.edge(e).head, g.edge(next).tail, "{negative_cycle:?} is not a cycle");
                }
                let total = negative_cycle.iter().fold(Rational::zero(), |acc, &e| acc + poly.cost(e).clone());
                assert!(total.is_negative());
            }
        }
    }
    assert!(feasible_seen > 20 && infeasible_seen > 20, "{feasible_seen} feasible, {infeasible_seen} infeasible");
}

#[test]
fn vertices_match_subset_enumeration() {
    for poly in sample(2, 80, 1..=5) {
        let mut found: Vec<Vec<Rational>> = poly.enumerate_vertices(DEFAULT_TREE_CAP).unwrap().vertices.iter().map(coords).collect();
        found.sort();
        assert_eq!(found, vertices_by_subsets(&poly), "{}", serialize_graph(&poly));
    }
}

#[test]
fn vertex_test_matches_rank() {
    for poly in sample(3, 60, 2..=5) {
        let vs = poly.enumerate_vertices(DEFAULT_TREE_CAP).unwrap().vertices;
        for v in &vs {
            assert!(is_vertex_by_rank(&poly, v.coords()));
            assert!(poly.is_vertex(v).unwrap());
        }
        for pair in vs.windows(2) {
            let mid: Vec<Rational> =
                pair[0].coords().iter().zip(pair[1].coords()).map(|(a, b)| (a.clone() + b.clone()) / r(2, 1)).collect();
            let mid = Point::new(mid).unwrap();
            assert_eq!(poly.is_vertex(&mid).unwrap(), is_vertex_by_rank(&poly, mid.coords()), "midpoint {mid}");
        }
    }
}

#[test]
fn adjacency_matches_rank_and_is_symmetric() {
    for poly in sample(4, 50, 2..=5) {
        let vs = poly.enumerate_vertices(DEFAULT_TREE_CAP).unwrap().vertices;
        for u in &vs {
            for v in &vs {
                if u == v {
                    continue;
                }
                let adjacent = poly.are_adjacent(u, v).unwrap();
                assert_eq!(adjacent, adjacent_by_rank(&poly, u.coords(), v.coords()), "{u} {v}");
                assert_eq!(adjacent, poly.are_adjacent(v, u).unwrap());
            }
        }
    }
}

#[test]
fn skeleton_edges_are_circuit_directions() {
    for poly in sample(5, 40, 2..=5) {
        let vs = poly.enumerate_vertices(DEFAULT_TREE_CAP).unwrap().vertices;
        for u in &vs {
            for v in &vs {
                if u != v && poly.are_adjacent(u, v).unwrap() {
                    let walk = Walk::from_points(&poly, WalkMode::Edge, vec![u.clone(), v.clone()]).unwrap();
                    assert_eq!(validate_walk(&poly, &walk), None);
                }
            }
        }
    }
}

#[test]
fn partitions_match_brute_force() {
    for poly in sample(6, 80, 1..=6) {
        let found: Vec<Vec<usize>> = enumerate_partitions(poly.graph()).iter().map(|c| c.members().to_vec()).collect();
        assert_eq!(found, partitions_by_brute_force(poly.graph()));
    }
}

#[test]
fn spanning_tree_count_matches_matrix_tree_theorem() {
    for poly in sample(7, 80, 1..=6) {
        let trees = spanning_trees(poly.graph(), DEFAULT_TREE_CAP).unwrap();
        assert_eq!(trees.len(), spanning_tree_count(poly.graph()));
    }
}

#[test]
fn circuit_distance_never_exceeds_edge_distance() {
    let limits = Limits::default();
    for poly in sample(8, 30, 2..=5) {
        let skeleton = Skeleton::build(&poly, DEFAULT_TREE_CAP).unwrap();
        let vs = skeleton.vertices.vertices.clone();
        let rows = CircuitSearch::new(&poly).distance_matrix(&vs, &vs, &limits).unwrap();
        for (i, row) in rows.iter().enumerate() {
            let (edge, _) = skeleton.bfs(i);
            for (j, &d) in row.iter().enumerate() {
                assert!(d <= edge[j].unwrap());
                assert_eq!(d == 0, i == j);
            }
        }
    }
}

#[test]
fn small_and_big_rationals_agree() {
    let limits = Limits::default();
    for poly in sample(9, 25, 2..=5) {
        let small: Polyhedron<SmallRational> = parse_graph(&serialize_graph(&poly)).unwrap();
        let big_vs = poly.enumerate_vertices(DEFAULT_TREE_CAP).unwrap().vertices;
        let small_vs = small.enumerate_vertices(DEFAULT_TREE_CAP).unwrap().vertices;
        let text = |v: &[String]| v.join(",");
        let big_text: Vec<String> = big_vs.iter().map(|p| text(&p.coords().iter().map(Scalar::canonical_string).collect::<Vec<_>>())).collect();
        let small_text: Vec<String> =
            small_vs.iter().map(|p| text(&p.coords().iter().map(Scalar::canonical_string).collect::<Vec<_>>())).collect();
        assert_eq!(big_text, small_text);
        let big = CircuitSearch::new(&poly).distance_matrix(&big_vs, &big_vs, &limits).unwrap();
        let small = CircuitSearch::new(&small).distance_matrix(&small_vs, &small_vs, &limits).unwrap();
        assert_eq!(big, small);
    }
}

#[test]
fn example_regression_values() {
    let poly = example_graph();
    let limits = Limits::default();
    assert_eq!(poly.enumerate_vertices(DEFAULT_TREE_CAP).unwrap().len(), 14);
    assert_eq!(poly.circuit_distance(&u1(), &u2(), &limits).unwrap().length, 4);
    let back = poly.circuit_distance(&u2(), &u1(), &limits).unwrap();
    assert_eq!(back.length, 2);
    assert_eq!(back.walk.points[1], pt(&[(0, 1), (2, 3), (0, 1), (2, 3)]));
    assert_eq!(poly.combinatorial_distance(&u2(), &u1(), &limits).unwrap().length, 4);
    assert_eq!(poly.diameter(WalkMode::Circuit, &limits).unwrap().value, 4);
    assert_eq!(poly.diameter(WalkMode::Edge, &limits).unwrap().value, 4);
}
