use thiserror::Error;

/// Unified error type for the whole crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("loop edge ({v},{v}) rejected")]
    LoopEdge { v: usize },

    #[error("edge ({u},{v}) not present")]
    MissingEdge { u: usize, v: usize },

    #[error("{what} supports at most n = {limit}, got n = {got}")]
    SizeGuard {
        what: &'static str,
        limit: usize,
        got: usize,
    },

    #[error("k = {k} out of range ({reason})")]
    KOutOfRange { k: usize, reason: &'static str },

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("malformed family spec `{0}` (expected name(p1,p2,...))")]
    FamilyParse(String),

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("matrix is not symmetric (entry ({i},{j}) differs beyond 1e-12)")]
    NotSymmetric { i: usize, j: usize },

    #[error("eigensolver failed to converge within the sweep limit")]
    NoConvergence,

    #[error("zero polynomial has no well-defined root set")]
    ZeroPolynomial,

    #[error("polynomial division was not exact")]
    InexactDivision,

    #[error("negative discriminant: threshold formula has no real value for n={n}, e={e}")]
    NegativeDiscriminant { n: usize, e: usize },

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
