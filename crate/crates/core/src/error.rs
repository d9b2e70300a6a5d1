use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("invalid pattern graph: {0}")]
    InvalidPattern(String),

    /// An exact search was refused because the instance is larger than the
    /// configured guard.
    #[error("{what}: instance has {size} vertices, guard is {limit} (raise it with TWINKERNEL_GUARD)")]
    Capacity {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
