//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch contracting axis {a_axis} of lhs (extent {a_extent}) with axis {b_axis} of rhs (extent {b_extent})")]
    ContractionMismatch {
        a_axis: usize,
        b_axis: usize,
        a_extent: usize,
        b_extent: usize,
    },

    #[error("axis {axis} out of range for tensor of order {order}")]
    AxisOutOfRange { axis: usize, order: usize },

    #[error("axis {axis} paired more than once in contraction")]
    DuplicateAxis { axis: usize },

    #[error("shape mismatch: expected {expected}, got {got}")]
    ShapeMismatch { expected: String, got: String },

    #[error("matrix is not Hermitian (relative residual {residual:.3e})")]
    NotHermitian { residual: f64 },

    #[error("power iteration did not converge within {max_iter} iterations; spectrum is degenerate or gap too small")]
    DegenerateSpectrum { max_iter: usize },

    #[error("fixed-point operator is numerically singular (min eigenvalue {min_eig:.3e}, max {max_eig:.3e})")]
    SingularFixedPoint { min_eig: f64, max_eig: f64 },

    #[error("normalization is not positive (Z = {value:.6e})")]
    NonPositiveNormalization { value: f64 },

    #[error("symbol {symbol} out of range at site {site} (alphabet size {dim})")]
    SymbolOutOfRange {
        site: usize,
        symbol: usize,
        dim: usize,
    },

    #[error("sequence length {got} does not match model horizon {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("operation not supported for this constraint: {0}")]
    UnsupportedConstraint(String),

    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("zero-probability symbol {symbol} at step {step}")]
    ZeroProbability { step: usize, symbol: usize },

    #[error("CPD fit residual {residual:.3e} above tolerance at maximum rank {rank}")]
    CpdApproximationFailure { residual: f64, rank: usize },

    #[error("training failed: {0}")]
    TrainingFailure(String),

    #[error("state space too large: {size} states exceeds limit {limit}")]
    StateSpaceTooLarge { size: u128, limit: u128 },

    #[error("degenerate split: fraction {fraction} of {n} rows leaves an empty part")]
    DegenerateSplit { n: usize, fraction: f64 },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("dataset error: {0}")]
    Dataset(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error("csv error: {0}")]
    Csv(String),
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Csv(e.to_string())
    }
}
