use alloc::string::String;
use core::fmt;

/// Errors surfaced by construction and invariant computations.
///
/// Structural *violations* (axioms that fail to hold for given structure
/// constants) are reported through dedicated report types, not through this
/// enum; `Error` covers misuse and genuinely unsupported inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Operands live over different fields.
    FieldMismatch,
    /// A dimension or shape did not match what the operation requires.
    DimensionMismatch { expected: usize, got: usize },
    /// Division by zero or inversion of a singular matrix.
    NotInvertible,
    /// The claimed inclusion U subset of W does not hold.
    NotASubspace,
    /// Radical computation is not available for this field/characteristic.
    UnsupportedField(String),
    /// The antipode does not stabilize the coradical, so the Hopf coradical
    /// machinery does not apply.
    CoradicalNotStable,
    /// Two independent routes to the same invariant disagreed.
    CrossCheckFailed(String),
    /// Input structure constants are malformed or violate a precondition.
    InvalidStructure(String),
    /// Parameters to a corpus builder are invalid.
    InvalidParameter(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::FieldMismatch => write!(f, "operands belong to different fields"),
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::NotInvertible => write!(f, "element or matrix is not invertible"),
            Error::NotASubspace => write!(f, "claimed subspace inclusion does not hold"),
            Error::UnsupportedField(s) => write!(f, "unsupported field: {s}"),
            Error::CoradicalNotStable => {
                write!(f, "antipode does not map the coradical into itself")
            }
            Error::CrossCheckFailed(s) => write!(f, "cross-check failed: {s}"),
            Error::InvalidStructure(s) => write!(f, "invalid structure: {s}"),
            Error::InvalidParameter(s) => write!(f, "invalid parameter: {s}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
