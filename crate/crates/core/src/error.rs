use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("invalid instance: {0}")]
    Validation(String),
    #[error("expected {expected} coordinates, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("point is not feasible")]
    InfeasiblePoint,
    #[error("instance is infeasible: negative cycle through edges {cycle:?}")]
    InfeasibleInstance { cycle: Vec<usize> },
    #[error("tree-determined point violates edge {edge}")]
    InfeasibleTree { edge: usize },
    #[error("not a spanning tree: {0}")]
    NotASpanningTree(String),
    #[error("instance too large: more than {cap} {what}")]
    InstanceTooLarge { what: &'static str, cap: usize },
    #[error("circuit step has zero length (an inequality across the cut is already tight)")]
    NotApplicable,
    #[error("no inequality bounds the circuit step (feasible ray)")]
    UnboundedDirection,
    #[error("step does not match the point it is applied to")]
    StaleStep,
    #[error("point is not a vertex")]
    NotAVertex,
    #[error("points are identical")]
    IdenticalPoints,
    #[error("no walk within depth cap {cap}")]
    DepthCapExceeded { cap: usize },
    #[error("search frontier exceeded {cap} states")]
    FrontierTooLarge { cap: usize },
    #[error("edge {0} does not exist")]
    EdgeMissing(usize),
    #[error("no feasible point has edge {0} tight")]
    FaceEmpty(usize),
    #[error("contracting edge {edge} leaves a negative self-loop")]
    NegativeSelfLoop { edge: usize },
    #[error("lifted point is infeasible in the original instance")]
    InfeasibleLift,
    #[error("no backward edge on the tree path from {r} to {s}")]
    NoBackwardEdge { r: usize, s: usize },
    #[error("degenerate instance: {0}; perturb the costs (see `perturb_costs`) and retry")]
    DegenerateInstance(String),
    #[error("constructed partition is not a circuit: {0}")]
    InvalidPartition(String),
    #[error("tight directed path from {r} to {s} other than the edge itself")]
    PathConflict { r: usize, s: usize },
    #[error("invalid walk: {0}")]
    InvalidWalk(String),
    #[error("invalid partition: {0}")]
    BadPartition(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    /// Stable machine-readable code used in reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Syntax { .. } => "SyntaxError",
            Error::Validation(_) => "ValidationError",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::InfeasiblePoint => "InfeasiblePoint",
            Error::InfeasibleInstance { .. } => "InfeasibleInstance",
            Error::InfeasibleTree { .. } => "InfeasibleTree",
            Error::NotASpanningTree(_) => "NotASpanningTree",
            Error::InstanceTooLarge { .. } => "InstanceTooLarge",
            Error::NotApplicable => "NotApplicable",
            Error::UnboundedDirection => "UnboundedDirection",
            Error::StaleStep => "StaleStep",
            Error::NotAVertex => "NotAVertex",
            Error::IdenticalPoints => "IdenticalPoints",
            Error::DepthCapExceeded { .. } => "DepthCapExceeded",
            Error::FrontierTooLarge { .. } => "FrontierTooLarge",
            Error::EdgeMissing(_) => "EdgeMissing",
            Error::FaceEmpty(_) => "FaceEmpty",
            Error::NegativeSelfLoop { .. } => "NegativeSelfLoop",
            Error::InfeasibleLift => "InfeasibleLift",
            Error::NoBackwardEdge { .. } => "NoBackwardEdge",
            Error::DegenerateInstance(_) => "DegenerateInstance",
            Error::InvalidPartition(_) => "InvalidPartition",
            Error::PathConflict { .. } => "PathConflict",
            Error::InvalidWalk(_) => "InvalidWalk",
            Error::BadPartition(_) => "BadPartition",
            Error::Internal(_) => "Internal",
        }
    }
}
