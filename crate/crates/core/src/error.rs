use thiserror::Error;

use crate::graph::NodeId;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("node {0} does not exist in the graph")]
    InvalidNode(NodeId),

    #[error("node {0} has already been removed")]
    RemovedNode(NodeId),

    #[error("invalid edge {u}-{v}: {reason}")]
    InvalidEdge {
        u: usize,
        v: usize,
        reason: &'static str,
    },

    #[error("graph is not connected")]
    Disconnected,

    #[error("delta must be at least 1, got {0}")]
    InvalidDelta(u32),

    #[error("graph has {nodes} live nodes, above the exhaustive-search cap of {cap}")]
    TooLarge { nodes: usize, cap: usize },

    #[error("no connected sample after {attempts} attempts (n={n}, p={p})")]
    Generation { n: usize, p: f64, attempts: u64 },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid replacement sequence: {0}")]
    InvalidSequence(String),

    #[error("criticality map does not match the graph: {0}")]
    CriticalityMismatch(String),

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("empty input")]
    EmptyInput,

    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
