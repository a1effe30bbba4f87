use thiserror::Error;

/// Errors raised by partition construction, the bijections and the series engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("malformed profile word: {0}")]
    Encoding(String),

    #[error("{op}: precondition violated: {detail}")]
    Precondition { op: &'static str, detail: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("parameter out of range: {0}")]
    Parameter(String),

    #[error("series normalization: {0}")]
    Normalization(String),

    #[error("internal consistency: {0}")]
    Consistency(String),
}

impl Error {
    pub(crate) fn precondition(op: &'static str, detail: impl Into<String>) -> Self {
        Error::Precondition {
            op,
            detail: detail.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
