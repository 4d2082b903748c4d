use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("dimension {0} outside the supported range 2..=64")]
    DimensionOutOfRange(usize),

    #[error("matrix is not square: {rows} rows, row {row} has {cols} entries")]
    NotSquare { rows: usize, row: usize, cols: usize },

    #[error("matrix is not Hermitian: defect {defect:e} exceeds allowed {allowed:e}")]
    NotHermitian { defect: f64, allowed: f64 },

    #[error("non-finite value in input")]
    NonFinite,

    #[error("null vector (norm {0:e}) cannot be normalized")]
    NullVector(f64),

    #[error("state norm {0} too far from 1 to renormalize")]
    NotNormalized(f64),

    #[error("orthogonal complement of a one-dimensional state is empty")]
    EmptyComplement,

    #[error("vector is not orthogonal to the state: overlap {0:e}")]
    NotOrthogonal(f64),

    #[error("{what} mean has a spurious {part} part {value:e}; inputs are not Hermitian")]
    PhaseViolation {
        what: &'static str,
        part: &'static str,
        value: f64,
    },

    #[error("Jacobi eigensolver did not converge after {0} sweeps")]
    NoConvergence(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("at least {required} samples required, got {got}")]
    TooFewSamples { required: usize, got: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
