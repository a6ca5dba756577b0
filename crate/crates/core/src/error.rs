use thiserror::Error;

/// Errors raised by library operations.
///
/// `Domain` means a precondition on the mathematical input was violated;
/// `Resource` means a configured enumeration cap was exceeded. The two are
/// kept distinct so callers (in particular the CLI) can map them to
/// different exit codes.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("resource cap exceeded: {0}")]
    Resource(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

pub(crate) fn resource<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Resource(msg.into()))
}
