//! Edge walks and circuit walks on dual network flow polyhedra
//! `P = {u : -u_a + u_b <= c_ab for every edge ab, u_0 = 0}` in exact
//! rational arithmetic.
//!
//! The pieces:
//!
//! * [`Polyhedron`]: feasibility, tight graphs, vertices from spanning trees.
//! * [`circuits`]: circuit directions as connected bipartitions and maximal steps.
//! * [`oracle`]: brute-force distances and diameters, for small instances.
//! * [`builders`]: constructive edge and circuit walks with step bounds.
//! * [`constructions`]: instance generators.
//!
//! Every type is generic over an exact [`Scalar`]; [`Rational`] is the default.

pub mod builders;
pub mod circuits;
pub mod constructions;
pub mod contraction;
pub mod error;
pub mod format;
pub mod graph;
pub mod oracle;
pub mod polyhedron;
pub mod scalar;
pub mod trees;
pub mod verify;
pub mod walk;

pub use builders::{circuit_walk, edge_walk};
pub use circuits::{PartitionCircuit, Sign, SignedStep};
pub use contraction::ContractionRecord;
pub use error::{Error, Result};
pub use format::{parse_graph, serialize_graph};
pub use graph::{Digraph, Edge, NodeId};
pub use oracle::{Limits, DEFAULT_STATE_CAP, DEFAULT_TREE_CAP};
pub use polyhedron::{Feasibility, Point, Polyhedron, TightEdgeSet};
pub use scalar::Scalar;
pub use trees::SpanningTree;
pub use walk::{validate_walk, Walk, WalkMode};

/// Arbitrary-precision rational; the default scalar everywhere.
pub type Rational = num_rational::BigRational;
/// `i64`-backed rational for small instances where overflow is impossible.
pub type SmallRational = num_rational::Rational64;
