use thiserror::Error;

/// Failures raised by the library operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty fold")]
    EmptyFold,
    #[error("{what} exceeds the enumeration bound of {bound}")]
    BoundExceeded { what: &'static str, bound: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("conflicting weights for edge {0}")]
    WeightConflict(String),
    #[error("negative edge weight on edge {0}")]
    NegativeWeight(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not undirected")]
    NotUndirected,
    #[error("matrix is not square")]
    NotSquare,
    #[error("singular matrix")]
    Singular,
    #[error("inconsistent system")]
    Inconsistent,
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} not present")]
    NotFound(String),
    #[error("mixed element types in {0}")]
    MixedTypes(&'static str),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Invalid(msg.into()))
}
