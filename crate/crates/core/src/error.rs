use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An index or size argument outside the domain of the operation.
    #[error("out of range: {0}")]
    Range(String),

    /// Violated precondition of an operation (uniformity mismatch, bad parameter, ...).
    #[error("contract violation: {0}")]
    Contract(String),

    /// Instance exceeds what the bit-mask representation or the search engine supports.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("undefined statistics: {0}")]
    UndefinedStatistics(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
