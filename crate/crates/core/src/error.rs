use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("genericity violation: {0}")]
    GenericityViolation(String),
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("tower mismatch")]
    TowerMismatch,
    #[error("index {index} out of range for rank {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("invalid vertex: {0}")]
    InvalidVertex(String),
    #[error("invalid ring context: {0}")]
    InvalidContext(String),
    #[error("paths have different lengths")]
    LengthMismatch,
    #[error("skein rewriting failed to terminate: {0}")]
    NonTermination(String),
    #[error("singular system: {0}")]
    SingularSystem(String),
    #[error("separation failure: {0}")]
    SeparationFailure(String),
    #[error("usage: {0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
