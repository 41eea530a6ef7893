use thiserror::Error;

/// Errors produced by graph construction, parsing, numerics and oracles.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("invalid family spec: {0}")]
    InvalidFamily(String),

    #[error("matrix is not Hermitian: {0}")]
    NotHermitian(String),

    #[error("edge weight on non-edge ({v},{w})")]
    WeightOnNonEdge { v: u32, w: u32 },

    #[error("eigensolver failed: {0}")]
    Eigensolver(String),

    #[error("bound undefined: {0}")]
    BoundUndefined(String),

    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A certified lower bound exceeded a certified upper bound. This
    /// indicates an implementation bug and is surfaced loudly.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("certificate error: {0}")]
    Certificate(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
