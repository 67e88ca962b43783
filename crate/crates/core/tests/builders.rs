//! Invariants of the walk builders' traces on random instances.

mod common;

use circuitwalk::builders::{build_circuit_walk, build_edge_walk, circuit_walk, edge_walk};
use circuitwalk::constructions::{example_graph, random_subtournament};
use circuitwalk::{validate_walk, Error, Polyhedron, DEFAULT_TREE_CAP};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{random_tournament, u1, u2};

fn instances(seed: u64, count: usize) -> Vec<Polyhedron> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=5);
            random_tournament(&mut rng, n)
        })
        .collect()
}

#[test]
fn edge_pivots_swap_one_edge_each() {
    for poly in instances(21, 40) {
        if poly.degeneracy_report(DEFAULT_TREE_CAP).unwrap().is_degenerate() {
            continue;
        }
        let vs = poly.enumerate_vertices(DEFAULT_TREE_CAP).unwrap().vertices;
        for a in &vs {
            for b in &vs {
                let (walk, trace) = build_edge_walk(&poly, a, b).unwrap();
                assert!(trace.phases.len() < poly.node_count());
                let pivots: usize = trace.phases.iter().map(|p| p.pivots.len()).sum();
                assert_eq!(pivots, walk.len());
                for phase in &trace.phases {
                    assert!(phase.pivots.len() <= phase.edge_count);
                    for pivot in &phase.pivots {
                        assert_eq!(pivot.left.len(), 1, "{pivot:?}");
                        assert_eq!(pivot.entered.len(), 1, "{pivot:?}");
                    }
                    assert_eq!(phase.pivots.last().map(|p| p.entered[0]).unwrap_or(phase.target_edge), phase.target_edge);
                }
            }
        }
    }
}

#[test]
fn circuit_arborescence_grows_every_step() {
    for poly in instances(22, 40) {
        let n = poly.node_count();
        let vs = poly.enumerate_vertices(DEFAULT_TREE_CAP).unwrap().vertices;
        for a in &vs {
            for b in &vs {
                let (walk, trace) = build_circuit_walk(&poly, a, b).unwrap();
                assert!(walk.len() <= n * (n - 1) / 2);
                for phase in &trace.phases {
                    assert!(!phase.pivots.is_empty());
                    assert!(phase.pivots.len() < phase.node_count);
                    let sizes: Vec<usize> = phase.pivots.iter().map(|p| p.arborescence).collect();
                    assert!(sizes.windows(2).all(|w| w[0] < w[1]), "{sizes:?}");
                    assert_eq!(*sizes.last().unwrap(), phase.node_count);
                }
            }
        }
    }
}

#[test]
fn degenerate_instances_still_get_circuit_walks() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let mut degenerate_seen = 0;
    for _ in 0..40 {
        let n = rng.gen_range(3..=5);
        let poly: Polyhedron = random_subtournament(&mut rng, n, 1.0, 2, 1);
        if !poly.degeneracy_report(DEFAULT_TREE_CAP).unwrap().is_degenerate() {
            continue;
        }
        degenerate_seen += 1;
        let vs = poly.enumerate_vertices(DEFAULT_TREE_CAP).unwrap().vertices;
        for a in &vs {
            for b in &vs {
                let walk = circuit_walk(&poly, a, b).unwrap();
                assert_eq!(validate_walk(&poly, &walk), None);
                assert_eq!(walk.target(), b);
                assert!(walk.len() <= n * (n - 1) / 2);
                match edge_walk(&poly, a, b) {
                    Ok(walk) => assert_eq!(validate_walk(&poly, &walk), None),
                    Err(Error::DegenerateInstance(_)) => {}
                    Err(e) => panic!("unexpected {e}"),
                }
            }
        }
    }
    assert!(degenerate_seen > 5, "only {degenerate_seen} degenerate instances");
}

#[test]
fn example_walks_in_both_directions() {
    let poly = example_graph();
    for (a, b) in [(u1(), u2()), (u2(), u1())] {
        for walk in [edge_walk(&poly, &a, &b).unwrap(), circuit_walk(&poly, &a, &b).unwrap()] {
            assert_eq!(validate_walk(&poly, &walk), None);
            assert_eq!(walk.source(), &a);
            assert_eq!(walk.target(), &b);
        }
    }
}
