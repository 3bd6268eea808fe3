use thiserror::Error;

/// Everything that can go wrong in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("empty input: {0}")]
    EmptyInput(String),

    #[error("negative size parameter: {0}")]
    NegativeSize(String),

    #[error("unbounded: {0}")]
    Unbounded(String),

    #[error("invalid fan: {0}")]
    InvalidFan(String),

    #[error("invalid flags: {0}")]
    InvalidFlags(String),

    #[error("unrepresented divisor: coefficient on flag ray {ray} is nonzero; {hint}")]
    UnrepresentedDivisor { ray: usize, hint: String },

    #[error("point not in polytope: {0}")]
    NotInPolytope(String),

    #[error("unsupported generality: {0}")]
    UnsupportedGenerality(String),

    #[error("class is not pseudo-effective: {0}")]
    NotPsef(String),

    #[error("class is not big: {0}")]
    NotBig(String),

    #[error("class is not nef: {0}")]
    NotNef(String),

    #[error("singular support system: {0}")]
    SingularSupport(String),

    #[error("algebraic degree too high: {0}")]
    HigherDegree(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
