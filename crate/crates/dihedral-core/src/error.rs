use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid input: {0}")]
    Validation(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(i64),
    #[error("boundary mismatch: {0} vs {1}")]
    BoundaryMismatch(String, String),
    #[error("missing weight for vertex {0}")]
    MissingWeight(i64),
    #[error("Coxeter number mismatch: graph has {graph}, field has n = {field}")]
    CoxeterMismatch { graph: u32, field: u32 },
    #[error("graph is not of ADE type")]
    NotAde,
    #[error("JW_{k} undefined: [{k_minus_1}]_q = 0")]
    UndefinedJw { k: usize, k_minus_1: usize },
    #[error("power iteration did not converge after {0} steps")]
    NoConvergence(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
