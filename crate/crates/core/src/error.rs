use thiserror::Error;

/// Errors surfaced by fallible constructors, parsers and identity checks.
///
/// Dimension mismatches between algebra elements are programming errors and
/// panic instead; everything reachable from user input goes through here.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("denominator is zero")]
    ZeroDenominator,

    #[error("cannot parse `{0}` as a rational")]
    InvalidRational(String),

    #[error("block index {k} out of range for n = {n}")]
    BlockOutOfRange { k: usize, n: usize },

    #[error("expected {expected} coordinates, got {got}")]
    CoordinateLength { expected: usize, got: usize },

    #[error("variable count {0} is not a multiple of 8")]
    VariableCount(usize),

    #[error("{context}: expected {expected}, got {actual}")]
    IdentityMismatch {
        context: String,
        expected: String,
        actual: String,
    },

    #[error("element is not of the form e0⊗(grade-1 vector): {0}")]
    NotRealVector(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
