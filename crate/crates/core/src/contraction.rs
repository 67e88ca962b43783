//! Contracting a tight edge: the face `{u in P : -u_a + u_b = c_ab}` is again a
//! dual network flow polyhedron on the graph with `b` merged into `a`.
//!
//! The merged variable is identified with `u_a`, so `u_b = u_a + c_ab`. That
//! gives
//!
//! * out-edges `a -> j`: `min{c_aj, c_bj + c_ab}`
//! * in-edges `i -> a`: `min{c_ia, c_ib - c_ab}`
//! * an antiparallel `b -> a` becomes the constant constraint `c_ab + c_ba >= 0`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{Digraph, Edge, NodeId};
use crate::polyhedron::{Feasibility, Point, Polyhedron};
use crate::scalar::Scalar;
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionRecord<T = Rational> {
    /// The instance before contraction.
    pub original: Polyhedron<T>,
    /// Index of the contracted edge in `original`.
    pub edge: usize,
    pub kept_node: NodeId,
    pub removed_node: NodeId,
    /// `c_ab`: the removed node sits at `u_kept + offset`.
    pub offset: T,
    /// Old node index to new node index (`removed_node` maps like `kept_node`).
    pub node_map: Vec<usize>,
    /// New node index to the old node it came from (`kept_node` for the merged one).
    pub origin: Vec<usize>,
    /// Old edge index to new edge index; `None` for the contracted edge and a
    /// dropped antiparallel edge.
    pub edge_map: Vec<Option<usize>>,
    /// The removed node was the anchor; the kept node becomes new node 0.
    pub anchor_relocated: bool,
}

impl<T: Scalar> Polyhedron<T> {
    pub fn contract_edge(&self, edge: usize) -> Result<(Polyhedron<T>, ContractionRecord<T>)> {
        if edge >= self.edge_count() {
            return Err(Error::EdgeMissing(edge));
        }
        let Edge { tail: a, head: b } = self.graph().edge(edge);
        let (a, b) = (a.index(), b.index());
        let c_ab = self.cost(edge).clone();
        let n = self.node_count();

        let anchor_relocated = b == 0;
        let origin: Vec<usize> = if anchor_relocated {
            std::iter::once(a).chain((0..n).filter(|&v| v != a && v != b)).collect()
        } else {
            (0..n).filter(|&v| v != b).collect()
        };
        let mut node_map = vec![usize::MAX; n];
        for (new, &old) in origin.iter().enumerate() {
            node_map[old] = new;
        }
        node_map[b] = node_map[a];

        let mut edges: Vec<Edge> = Vec::new();
        let mut costs: Vec<T> = Vec::new();
        let mut position: HashMap<(usize, usize), usize> = HashMap::new();
        let mut edge_map = vec![None; self.edge_count()];
        for (i, e) in self.graph().edges().iter().enumerate() {
            if i == edge {
                continue;
            }
            let (t, h) = (e.tail.index(), e.head.index());
            let mut cost = self.cost(i).clone();
            if t == b {
                cost = cost + c_ab.clone();
            }
            if h == b {
                cost = cost - c_ab.clone();
            }
            let (nt, nh) = (node_map[t], node_map[h]);
            if nt == nh {
                // Only `b -> a` lands here: -u_b + u_a <= c_ba with u_b = u_a + c_ab.
                if (self.cost(i).clone() + c_ab.clone()).is_negative() {
                    return Err(Error::NegativeSelfLoop { edge });
                }
                continue;
            }
            let slot = *position.entry((nt, nh)).or_insert_with(|| {
                edges.push(Edge::new(nt, nh));
                costs.push(cost.clone());
                edges.len() - 1
            });
            if cost < costs[slot] {
                costs[slot] = cost;
            }
            edge_map[i] = Some(slot);
        }
        let contracted = Polyhedron::new(Digraph::new(n - 1, edges)?, costs)?;
        if let Feasibility::Infeasible { .. } = contracted.feasibility_status() {
            return Err(Error::FaceEmpty(edge));
        }
        let record = ContractionRecord {
            original: self.clone(),
            edge,
            kept_node: NodeId(a),
            removed_node: NodeId(b),
            offset: c_ab,
            node_map,
            origin,
            edge_map,
            anchor_relocated,
        };
        Ok((contracted, record))
    }
}

impl<T: Scalar> ContractionRecord<T> {
    /// Inverse of [`ContractionRecord::project_point`] on the face: rebuilds
    /// the original coordinates with the contracted edge tight.
    pub fn lift_point(&self, u: &Point<T>) -> Result<Point<T>> {
        if u.dim() != self.origin.len() {
            return Err(Error::DimensionMismatch { expected: self.origin.len(), found: u.dim() });
        }
        let (a, b) = (self.kept_node.index(), self.removed_node.index());
        let raw: Vec<T> = (0..self.node_map.len())
            .map(|v| {
                if v == b {
                    u[self.node_map[a]].clone() + self.offset.clone()
                } else {
                    u[self.node_map[v]].clone()
                }
            })
            .collect();
        let lifted = Point::anchored(raw);
        if !self.original.is_feasible(&lifted)? {
            return Err(Error::InfeasibleLift);
        }
        Ok(lifted)
    }

    /// Coordinates of a point of the face in the contracted instance.
    pub fn project_point(&self, u: &Point<T>) -> Point<T> {
        Point::anchored(self.origin.iter().map(|&old| u[old].clone()).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::example_graph;
    use num_traits::Zero;

    fn pt(f: &[(i64, i64)]) -> Point {
        Point::from_fractions(f).unwrap()
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::from_fraction(n, d)
    }

    #[test]
    fn contracting_v0v1_in_the_example() {
        let p = example_graph();
        let e = p.graph().find_edge(0, 1).unwrap();
        let (q, rec) = p.contract_edge(e).unwrap();
        assert_eq!(q.node_count(), 3);
        // New indices: v0 -> 0, v2 -> 1, v3 -> 2.
        let cost = |t: usize, h: usize| q.cost(q.graph().find_edge(t, h).unwrap()).clone();
        assert_eq!(q.edge_count(), 5);
        assert_eq!(cost(0, 1), r(4, 3));
        assert_eq!(cost(0, 2), r(2, 1));
        assert_eq!(cost(1, 0), r(0, 1));
        assert_eq!(cost(2, 0), r(-1, 1));
        assert_eq!(cost(1, 2), r(10, 9));
        assert_eq!(rec.node_map, vec![0, 0, 1, 2]);
        assert!(!rec.anchor_relocated);

        assert_eq!(rec.lift_point(&pt(&[(0, 1), (4, 3), (2, 1)])).unwrap(), pt(&[(0, 1), (1, 1), (4, 3), (2, 1)]));
        assert_eq!(rec.lift_point(&pt(&[(0, 1), (0, 1), (1, 1)])).unwrap(), pt(&[(0, 1), (1, 1), (0, 1), (1, 1)]));
        // The origin violates the merged edge v3 -> v0 with cost -1.
        assert_eq!(rec.lift_point(&Point::origin(3)), Err(Error::InfeasibleLift));
    }

    #[test]
    fn contracting_a_two_node_graph() {
        let p = Polyhedron::new(Digraph::new(2, vec![Edge::new(0, 1)]).unwrap(), vec![r(1, 1)]).unwrap();
        let (q, rec) = p.contract_edge(0).unwrap();
        assert_eq!(q.node_count(), 1);
        assert_eq!(q.edge_count(), 0);
        assert_eq!(rec.lift_point(&Point::origin(1)).unwrap(), pt(&[(0, 1), (1, 1)]));
    }

    #[test]
    fn negative_self_loop_and_missing_edge() {
        let p = Polyhedron::new(
            Digraph::new(2, vec![Edge::new(0, 1), Edge::new(1, 0)]).unwrap(),
            vec![r(1, 1), r(-2, 1)],
        )
        .unwrap();
        assert_eq!(p.contract_edge(0), Err(Error::NegativeSelfLoop { edge: 0 }));
        assert_eq!(p.contract_edge(5), Err(Error::EdgeMissing(5)));
    }

    #[test]
    fn anchor_relocation_shifts_lifted_points() {
        let p = example_graph();
        // v3 -> v0 with cost 0 removes the anchor.
        let (q, rec) = p.contract_edge(0).unwrap();
        assert!(rec.anchor_relocated);
        assert_eq!(rec.origin, vec![3, 1, 2]);
        for u in q.enumerate_vertices(1000).unwrap().vertices {
            let lifted = rec.lift_point(&u).unwrap();
            assert!(p.slack(&lifted, 0).is_zero());
            assert_eq!(rec.project_point(&lifted), u);
        }
        // v0 -> v3 with cost 2 removes v3; the anchor stays.
        let (q, rec) = p.contract_edge(3).unwrap();
        assert!(!rec.anchor_relocated);
        for u in q.enumerate_vertices(1000).unwrap().vertices {
            let lifted = rec.lift_point(&u).unwrap();
            assert_eq!(lifted[3], lifted[0].clone() + r(2, 1));
        }
    }

    #[test]
    fn empty_face_is_detected() {
        // u2 <= u0 and u1 <= u2 force u1 <= 0, so 0->1 (cost 1) is never tight.
        let p = Polyhedron::new(
            Digraph::new(3, vec![Edge::new(0, 1), Edge::new(0, 2), Edge::new(2, 1)]).unwrap(),
            vec![r(1, 1), r(0, 1), r(0, 1)],
        )
        .unwrap();
        assert!(p.feasibility_status().is_feasible());
        assert_eq!(p.contract_edge(0), Err(Error::FaceEmpty(0)));
        assert!(p.contract_edge(1).is_ok());
    }
}
