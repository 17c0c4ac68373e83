//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertex set indexes a graph with {set_n} vertices, expected {graph_n}")]
    HostMismatch { set_n: usize, graph_n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("edge list parse error at line {line}: {reason}")]
    EdgeListParse { line: usize, reason: String },

    #[error("unknown graph family {0:?}")]
    UnknownFamily(String),

    #[error("bad family parameter {0}")]
    BadFamilyParameter(String),

    #[error("family spec syntax error: {0}")]
    FamilySyntax(String),

    #[error("endpoints {0} and {1} are adjacent; internally disjoint path count is defined for non-adjacent vertices")]
    AdjacentEndpoints(usize, usize),

    #[error("endpoints must be distinct (got {0} twice)")]
    IdenticalEndpoints(usize),

    #[error("hypothesis violation: {0}")]
    HypothesisViolation(String),

    #[error("estimated work {estimate} exceeds guard {guard}")]
    WorkGuardExceeded { estimate: u128, guard: u128 },

    #[error("input graph must be connected")]
    NotConnected,

    #[error("no path of {wanted} vertices inside the layer starting at the anchor")]
    AnchorPathMissing { wanted: usize },

    #[error("anchor pair {0}-{1} is not an edge of the factor")]
    AnchorNotAnEdge(usize, usize),

    #[error("fault sets must be distinct")]
    IdenticalFaultSets,

    #[error("witness precondition violated: {0}")]
    WitnessPrecondition(String),

    #[error("result has no finite value/witness to check")]
    NoFiniteWitness,
}
