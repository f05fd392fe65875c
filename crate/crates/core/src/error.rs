use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("invalid diagram: {}", .0.join("; "))]
    Invalid(Vec<String>),

    #[error("variable `{0}` has a negative exponent but its assigned value is not invertible")]
    NonInvertible(String),

    #[error("variable `{0}` has no assigned value")]
    Unassigned(String),

    #[error("{what} cap exceeded: {got} > {cap}")]
    CapExceeded { what: &'static str, got: usize, cap: usize },

    #[error("dimension mismatch: {0}")]
    Mismatch(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("illegal move site: {0}")]
    IllegalMove(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, col: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, col, msg: msg.into() }
    }
}
