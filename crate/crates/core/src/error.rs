use crate::field::FieldSpec;

/// Errors raised by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: FieldSpec, right: FieldSpec },

    #[error("{0} is not a prime below 2^32")]
    NotPrime(u64),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("Cauchy entry undefined: u[{i}] + v[{j}] = 0")]
    CauchyPole { i: usize, j: usize },

    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    #[error("elements belong to different algebras")]
    AlgebraMismatch,

    #[error("cannot take the quotient by the zero form")]
    ZeroForm,

    #[error("the degree {0} component is zero")]
    EmptyDegree(usize),

    #[error("no degree-1 elements to test (A_1 = 0 but socle degree is {0})")]
    NoLinearForms(usize),

    #[error("scaling search failed after {0} candidates")]
    ScalingSearchFailed(usize),

    #[error(
        "classification mismatch at (i={i}, j={j}): predicted {predicted}, rank {rank} with dims ({source_dim}, {target_dim})"
    )]
    ClassificationMismatch {
        i: usize,
        j: usize,
        predicted: &'static str,
        rank: usize,
        source_dim: usize,
        target_dim: usize,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
