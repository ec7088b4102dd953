use thiserror::Error;

/// Errors raised by the algebra kernel and the ideal-family constructors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("variable spaces do not match: {left} vs {right}")]
    SpaceMismatch { left: String, right: String },

    #[error("monomial orders do not match")]
    OrderMismatch,

    #[error("leading term of zero")]
    LeadingTermOfZero,

    #[error("{0} of the zero polynomial")]
    ZeroInput(&'static str),

    #[error("variable {0} occurs but is not mapped")]
    UnmappedVariable(String),

    #[error("variable {0} does not exist in this space")]
    UnknownVariable(String),

    #[error("budget exceeded after {pairs} pairs: {reason}")]
    BudgetExceeded { pairs: u64, reason: String },

    #[error("improper ideal (contains a unit)")]
    ImproperIdeal,

    #[error("ideal is not a squarefree monomial ideal")]
    NotSquarefreeMonomial,

    #[error("generator is not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

impl AlgebraError {
    pub fn is_budget(&self) -> bool {
        matches!(self, AlgebraError::BudgetExceeded { .. })
    }
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
