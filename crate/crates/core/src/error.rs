use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("pole at s = {s}")]
    Pole { s: f64 },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("invalid curve: {0}")]
    InvalidCurve(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("numerical corruption: {0}")]
    Corruption(String),

    #[error("truncation insufficient: remainder bound {bound:e} exceeds {limit:e}")]
    Truncation { bound: f64, limit: f64 },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Stable machine-readable tag, used by the CLI error object.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Domain(_) => "domain",
            Error::Pole { .. } => "pole",
            Error::InvalidConfig(_) => "invalid_config",
            Error::InvalidCurve(_) => "invalid_curve",
            Error::Parse { .. } => "parse",
            Error::Corruption(_) => "corruption",
            Error::Truncation { .. } => "truncation",
            Error::Io(_) => "io",
        }
    }
}
