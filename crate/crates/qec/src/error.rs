use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is singular (rank {rank} < dimension {dim})")]
    SingularMatrix { rank: usize, dim: usize },

    #[error("extension degree {0} outside supported range 1..=16")]
    UnsupportedDegree(usize),

    #[error("field elements belong to different field contexts")]
    ContextMismatch,

    #[error("length {0} must be odd")]
    EvenLength(usize),

    #[error("minimal polynomial has a coefficient outside GF(2): {0}")]
    CoefficientNotBinary(String),

    #[error("vector length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("dual condition violated: required dual is not contained in the code")]
    DualConditionViolated,

    #[error("code of dimension {inner} is not a subcode of the code of dimension {outer}")]
    NotASubcode { inner: usize, outer: usize },

    #[error("dimension order violated: expected strictly larger code ({kprime} <= {k})")]
    DimensionOrder { k: usize, kprime: usize },

    #[error("fixed-point-free map needs size >= 2, got {0}")]
    SizeTooSmall(usize),

    #[error("enlargement needs k' > k + 1 (got k = {k}, k' = {kprime})")]
    InsufficientEnlargement { k: usize, kprime: usize },

    #[error("operation not applicable: {0}")]
    NotApplicable(String),

    #[error("argument {value} outside domain {domain}")]
    DomainError { value: f64, domain: &'static str },

    #[error("invalid code data: {0}")]
    BadCodeData(String),
}

pub type Result<T> = std::result::Result<T, Error>;
