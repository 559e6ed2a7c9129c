use thiserror::Error;

/// Error type shared by the whole crate.
#[derive(Debug, Error)]
pub enum Dp5Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("point not on surface")]
    PointNotOnSurface,
    #[error("conjugation defined only for quadratic fields here")]
    NotQuadratic,
    #[error("unexpected positive-dimensional intersection")]
    PositiveDimensional,
    #[error("degenerate system: {0}")]
    Degenerate(String),
    #[error("Lemma 5 violated: special subspace has dimension {0}")]
    SpecialSubspaceDimension(i64),
    #[error("Lemma 7 bound exceeded: no usable tangent direction after {0} attempts")]
    TangentBudgetExceeded(usize),
    #[error("resource limit: {0}")]
    ResourceLimit(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Dp5Error>;
