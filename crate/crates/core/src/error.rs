use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed or inconsistent input data.
    #[error("input error: {0}")]
    Input(String),
    /// A text file could not be parsed.
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    /// A query reached past the degree or homological bound a structure was built with.
    #[error("bound error: {0}")]
    Bound(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}

pub(crate) fn bound<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Bound(msg.into()))
}
