use thiserror::Error;

/// Errors raised by every module of the crate.
///
/// The variant names double as the stable one-line codes printed by the
/// command-line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An input lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A documented precondition does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// An elimination collapsed to the zero polynomial.
    #[error("degenerate input: {0}")]
    Degenerate(String),
    /// A computation would exceed its size guard.
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    /// Evaluation hit a pole.
    #[error("pole: {0}")]
    Pole(String),
    /// Text input could not be parsed; `column` is 1-based.
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
}

impl Error {
    /// Short machine-readable code for the variant.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Domain(_) => "domain",
            Error::Precondition(_) => "precondition",
            Error::Degenerate(_) => "degenerate",
            Error::Resource(_) => "resource",
            Error::Pole(_) => "pole",
            Error::Parse { .. } => "parse",
        }
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn parse(column: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            column,
            message: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
