use thiserror::Error;

use crate::transform::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty graph")]
    EmptyGraph,
    #[error("{n} vertices exceeds the limit of {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("{what} = {value} outside supported range {min}..={max}")]
    OutOfRange { what: &'static str, value: usize, min: usize, max: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("elimination order is not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("elimination order is not a perfect elimination order")]
    NotPerfectEliminationOrder,
    #[error("invalid SD-word: {0}")]
    InvalidWord(String),
    #[error("invalid vector: {0}")]
    InvalidVector(String),
    #[error("rejected: {0}")]
    Rejected(Violation),
    #[error("clique count overflow")]
    Overflow,
    #[error("homology self-check failed: {0}")]
    HomologySelfCheck(String),
    #[error("realization postcondition failed: {0}")]
    Realization(String),
    #[error("thread pool: {0}")]
    ThreadPool(String),
    #[error("unknown theorem `{0}` (expected main, froberg, betti or counting)")]
    UnknownTheorem(String),
}
