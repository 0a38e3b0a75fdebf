use std::env;
use std::fs;

use residue_atlas_core::classifier::SporadicTable;

use crate::AppError;

pub const DATA_ENV: &str = "RESIDUE_ATLAS_DATA";

/// The sporadic table shipped in `data/sporadic.json`.
pub const BUNDLED: &str = include_str!("../data/sporadic.json");

pub fn parse_table(text: &str) -> Result<SporadicTable, AppError> {
    serde_json::from_str(text).map_err(|e| AppError::new("invalid_data", e.to_string()))
}

/// The table named by `RESIDUE_ATLAS_DATA`, or the bundled one.
pub fn sporadic_table() -> Result<SporadicTable, AppError> {
    match env::var_os(DATA_ENV) {
        Some(path) => {
            let text = fs::read_to_string(&path)
                .map_err(|e| AppError::new("io", format!("{}: {}", path.to_string_lossy(), e)))?;
            parse_table(&text)
        }
        None => parse_table(BUNDLED),
    }
}
