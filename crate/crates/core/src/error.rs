use thiserror::Error;

/// Errors raised by the library. Mathematical verdicts (a failed
/// equality, an uncertified eigenvalue) are reported values, never errors.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument violated an operation's precondition.
    #[error("domain error: {0}")]
    Domain(String),
    /// A dense object would exceed the configured size cap.
    #[error("resource cap exceeded: {what} needs {required} vertices, cap is {cap}")]
    Resource {
        what: String,
        required: u64,
        cap: u64,
    },
    /// Malformed text input (rational literal, matrix file, family file).
    #[error("parse error: {0}")]
    Parse(String),
    /// A constructed object broke one of its own invariants.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
