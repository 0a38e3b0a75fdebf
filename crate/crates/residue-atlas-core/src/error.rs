use alloc::string::String;
use core::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "error", content = "detail", rename_all = "snake_case")]
pub enum Error {
    InvalidStratum(String),
    EmptyStratum(String),
    LengthMismatch { expected: usize, got: usize },
    InvalidTuple(String),
    Precondition(String),
    InvalidGraph(String),
    InvalidSurface(String),
    Unsupported(String),
    Numeric(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidStratum(m) => write!(f, "invalid stratum: {}", m),
            Error::EmptyStratum(m) => write!(f, "empty stratum: {}", m),
            Error::LengthMismatch { expected, got } => {
                write!(f, "residue tuple has {} entries, stratum expects {}", got, expected)
            }
            Error::InvalidTuple(m) => write!(f, "invalid residue tuple: {}", m),
            Error::Precondition(m) => write!(f, "precondition failed: {}", m),
            Error::InvalidGraph(m) => write!(f, "invalid graph: {}", m),
            Error::InvalidSurface(m) => write!(f, "invalid surface: {}", m),
            Error::Unsupported(m) => write!(f, "unsupported construction: {}", m),
            Error::Numeric(m) => write!(f, "numerical failure: {}", m),
        }
    }
}
