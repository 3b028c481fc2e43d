use thiserror::Error;

/// Errors raised by the algebra, elimination and resultant routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("coefficient domain is not a field: {0}")]
    NotAField(String),
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("genericity could not be reached: {0}")]
    GenericityFailed(String),
    #[error("zero Macaulay denominator: {0}")]
    ZeroDenominator(String),
    #[error("interpolation failed: {0}")]
    InterpolationFailed(String),
    #[error("computation budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("{line}:{column}: {message}")]
    Parse { line: usize, column: usize, message: String },
}

impl Error {
    /// Stable machine-readable code used by the command-line front end.
    pub fn code(&self) -> &'static str {
        match self {
            Error::RingMismatch(_) => "RING_MISMATCH",
            Error::UnknownVariable(_) => "UNKNOWN_VARIABLE",
            Error::DimensionMismatch(_) => "DIM_MISMATCH",
            Error::Singular => "SINGULAR",
            Error::NotAField(_) => "NOT_A_FIELD",
            Error::InexactDivision(_) => "INEXACT_DIVISION",
            Error::NotHomogeneous(_) => "NOT_HOMOGENEOUS",
            Error::InvalidInput(_) => "INVALID_INPUT",
            Error::GenericityFailed(_) => "GENERICITY_FAILED",
            Error::ZeroDenominator(_) => "ZERO_DENOMINATOR",
            Error::InterpolationFailed(_) => "INTERPOLATION_FAILED",
            Error::BudgetExceeded(_) => "BUDGET_EXCEEDED",
            Error::Unsupported(_) => "UNSUPPORTED",
            Error::Parse { .. } => "PARSE_ERROR",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
