#![doc = include_str!("../README.md")]

pub mod cli;
pub mod data;
pub mod io;
pub mod json;
pub mod parallel;
pub mod svg;
mod witness;

use std::fmt;

use serde::Serialize;

pub use witness::witness;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Machine-readable failure: `{"error": kind, "detail": message}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AppError {
    pub error: String,
    pub detail: String,
}

impl AppError {
    pub fn new(kind: &str, detail: impl Into<String>) -> Self {
        AppError { error: kind.to_string(), detail: detail.into() }
    }
}

impl fmt::Display for AppError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.error, self.detail)
    }
}

impl std::error::Error for AppError {}

impl From<residue_atlas_core::Error> for AppError {
    fn from(e: residue_atlas_core::Error) -> Self {
        let kind = match serde_json::to_value(&e) {
            Ok(v) => v.get("error").and_then(|k| k.as_str()).unwrap_or("error").to_string(),
            Err(_) => "error".to_string(),
        };
        AppError { error: kind, detail: e.to_string() }
    }
}
