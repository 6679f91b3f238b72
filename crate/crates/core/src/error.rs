use std::io;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("token {index} ({token:?}) is not a non-negative integer")]
    Parse { index: usize, token: String },

    #[error("query line {line}: {reason}")]
    QueryParse { line: usize, reason: String },

    #[error("position {pos} out of range 1..={max}")]
    OutOfRange { pos: usize, max: usize },

    #[error("query ({}, {}) crosses earlier query ({}, {})", .current.0, .current.1, .earlier.0, .earlier.1)]
    Crossing {
        earlier: (usize, usize),
        current: (usize, usize),
    },

    #[error("backend was built over a different text")]
    TextMismatch,

    #[error("backend has already answered {0} queries")]
    BackendNotFresh(u64),

    #[error(transparent)]
    Io(#[from] io::Error),
}
