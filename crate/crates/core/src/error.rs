use thiserror::Error;

/// Errors raised by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input: wrong shapes, mismatched dimensions, bad scalars.
    #[error("input error: {0}")]
    Input(String),

    /// The operation divides by an integer that is zero in the base field.
    #[error(
        "characteristic error: {operation} needs 1/{denominator}, but the field has characteristic {characteristic}"
    )]
    Characteristic { operation: String, denominator: u64, characteristic: u64 },

    /// An arity cap, enumeration budget, or truncation window was exceeded.
    #[error("capacity error: {0}")]
    Capacity(String),

    /// A hypothesis of the operation does not hold for the given data.
    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}
