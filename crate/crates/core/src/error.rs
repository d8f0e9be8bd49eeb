//! Error type shared across the crate.

use std::path::PathBuf;

use thiserror::Error;

use crate::speculative::ConvergenceTrace;

#[derive(Debug, Error)]
pub enum Error {
    #[error("edge {index}: endpoint {vertex} out of range for {num_vertices} vertices")]
    EdgeOutOfRange {
        index: usize,
        vertex: usize,
        num_vertices: usize,
    },

    #[error("edge list is not canonical: {0}")]
    NotCanonical(String),

    #[error("matrix market: line {line}: {reason}")]
    MatrixMarket { line: usize, reason: String },

    #[error("invalid r-mat parameters: {0}")]
    InvalidRmatParams(String),

    #[error("cannot place {requested} distinct undirected edges in a graph with {num_vertices} vertices")]
    UnsatisfiableEdgeCount { requested: usize, num_vertices: usize },

    #[error("r-mat sampling gave up after {attempts} draws with {placed} of {requested} edges placed")]
    RmatSamplingExhausted {
        attempts: usize,
        placed: usize,
        requested: usize,
    },

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("order is not a permutation of the vertex set: {0}")]
    NotAPermutation(String),

    #[error("coloring has {coloring_len} entries but graph has {num_vertices} vertices")]
    LengthMismatch {
        coloring_len: usize,
        num_vertices: usize,
    },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("no convergence within {cap} iterations")]
    NonConvergence {
        cap: usize,
        trace: Box<ConvergenceTrace>,
    },

    #[error("csr cache: {0}")]
    Cache(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
