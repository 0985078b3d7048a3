use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid edge {0}-{1}")]
    InvalidEdge(usize, usize),

    #[error("invalid graph operation: {0}")]
    InvalidOperation(String),

    #[error("degenerate framework: {0}")]
    Degenerate(String),

    #[error("invalid pins: {0}")]
    InvalidPins(String),

    #[error("matrix is singular")]
    Singular,

    #[error("vertex {0} is mapped to infinity")]
    PointAtInfinity(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("edge set is dependent")]
    Dependent,

    #[error("no case of the five-set classification applies")]
    Unclassified,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
