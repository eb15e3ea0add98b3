use thiserror::Error;

/// Errors raised by the library.
///
/// The variants map onto distinct process exit codes in the command-line
/// tool: parse failures exit with 2, domain/precondition failures with 3 and
/// exceeded resource caps with 4.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("{0}")]
    Domain(String),
    /// A configured size cap would be exceeded.
    #[error("{what} exceeds the configured cap of {cap}")]
    Resource { what: &'static str, cap: u64 },
    /// A design file could not be parsed.
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    /// A design violates a structural invariant (block size, ordering, range).
    #[error("malformed design: {0}")]
    Structure(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
