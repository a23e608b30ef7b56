use thiserror::Error;

use crate::graph::{EdgeId, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    LoopEdge(VertexId),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(VertexId, VertexId),
    #[error("vertex {vertex} out of range for a graph with {count} vertices")]
    BadVertex { vertex: VertexId, count: usize },
    #[error("edge id {0} out of range")]
    BadEdge(EdgeId),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no perfect matching")]
    NoPerfectMatching,
    #[error("edge set is not a perfect matching")]
    NotPerfect,
    #[error("cycle is not alternating with respect to the matching")]
    NotAlternating,
    #[error("graph is not elementary bipartite")]
    NotElementary,
    #[error("enumeration cap of {0} exceeded")]
    CapExceeded(usize),
    #[error("invalid face set: {0}")]
    BadFaceSet(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Chain(#[from] crate::chain::ChainError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
