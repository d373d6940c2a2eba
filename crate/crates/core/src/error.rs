use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("field error: {0}")]
    Field(String),

    #[error("parse error at {path}: {msg}")]
    Parse { path: String, msg: String },

    #[error("dimension mismatch in {table}: {msg}")]
    Dimension { table: String, msg: String },

    #[error("subspace is not an ideal: {0}")]
    NotAnIdeal(String),

    #[error("map or action does not descend to the quotient: {0}")]
    Descent(String),

    #[error("level {need} required but truncation is {have}")]
    Truncation { need: usize, have: usize },

    #[error("invalid input structure: {0}")]
    InvalidInput(String),

    #[error("construction failed: {0}")]
    Construction(String),

    #[error("usage: {0}")]
    Usage(String),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn at(self, path: &str) -> Error {
        match self {
            Error::Parse { path: p, msg } if p.is_empty() => Error::Parse { path: path.to_string(), msg },
            other => other,
        }
    }
}
