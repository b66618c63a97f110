use thiserror::Error;

/// Errors raised by the index, code and oracle layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed textual input (index lists, code words).
    #[error("parse error: {0}")]
    Parse(String),
    /// Well-formed input outside the domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A code word that does not describe a valid composition.
    #[error("invalid code: {0}")]
    InvalidCode(String),
    /// Two computations that must agree did not. Always a bug.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// True for errors that indicate a library bug rather than bad input.
    pub fn is_invariant(&self) -> bool {
        matches!(self, Error::Invariant(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
