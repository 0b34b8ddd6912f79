use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("signature must have m >= 1 (got m={m}, n={n})")]
    InvalidSignature { m: usize, n: usize },
    #[error("covariance condition fails: a_m = {a_m} < {j0}")]
    CovarianceViolation { a_m: usize, j0: usize },
    #[error("length mismatch: {0}")]
    LengthMismatch(String),
    #[error("signature mismatch: sl({0},{1}) vs sl({2},{3})")]
    SignatureMismatch(usize, usize, usize, usize),
    #[error("shapes are not comparable: {0}")]
    NotComparable(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("entry {entry} outside 1..={max}")]
    EntryOutOfRange { entry: usize, max: usize },
    #[error("tableau is not semistandard")]
    NotSemistandard,
    #[error("tableau is not quasistandard")]
    NotQuasistandard,
    #[error("({0},{1}) is not an outer corner")]
    NotOuterCorner(usize, usize),
    #[error("slide blocked: {0}")]
    SlideBlocked(String),
    #[error("dual shape needs n >= 1")]
    DualUndefined,
    #[error("{boxes} boxes exceed the budget of {max}")]
    BudgetExceeded { boxes: usize, max: usize },
    #[error("no solution in the semistandard basis: {0}")]
    InconsistentSystem(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
}

impl Error {
    /// Variant name, as reported by the command line.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidSignature { .. } => "InvalidSignature",
            Error::CovarianceViolation { .. } => "CovarianceViolation",
            Error::LengthMismatch(_) => "LengthMismatch",
            Error::SignatureMismatch(..) => "SignatureMismatch",
            Error::NotComparable(_) => "NotComparable",
            Error::ShapeMismatch(_) => "ShapeMismatch",
            Error::EntryOutOfRange { .. } => "EntryOutOfRange",
            Error::NotSemistandard => "NotSemistandard",
            Error::NotQuasistandard => "NotQuasistandard",
            Error::NotOuterCorner(..) => "NotOuterCorner",
            Error::SlideBlocked(_) => "SlideBlocked",
            Error::DualUndefined => "DualUndefined",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
            Error::InconsistentSystem(_) => "InconsistentSystem",
            Error::IndexOutOfRange(_) => "IndexOutOfRange",
            Error::PreconditionViolation(_) => "PreconditionViolation",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
