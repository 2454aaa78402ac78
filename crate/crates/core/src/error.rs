use thiserror::Error;

/// Errors surfaced by the algebra kernel.
///
/// Mathematical "false" answers (a failed containment, a non-exact complex)
/// are ordinary results, not errors; `Error` covers precondition violations
/// and malformed input only.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("search failed: {0}")]
    SearchFailed(String),

    #[error("{0} is not prime")]
    NotPrime(u64),
}

impl Error {
    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub fn ring_mismatch(msg: impl Into<String>) -> Self {
        Error::RingMismatch(msg.into())
    }
}
