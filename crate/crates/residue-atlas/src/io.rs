//! Input formats: strata, residue tuples and the combined problem file.

use std::fs;
use std::path::Path;

use residue_atlas_core::surface::FlatSurface;
use residue_atlas_core::{QComplex, Stratum};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::AppError;

#[derive(Deserialize)]
#[serde(untagged)]
enum OrderEntry {
    Int(i64),
    Text(String),
}

/// `5`, `"-1^7"` or `"(-1^7)"`.
fn expand(entry: &OrderEntry, out: &mut Vec<i64>) -> Result<(), String> {
    match entry {
        OrderEntry::Int(m) => out.push(*m),
        OrderEntry::Text(t) => {
            let t = t.trim().trim_start_matches('(').trim_end_matches(')').replace('−', "-");
            let (base, times) = match t.split_once('^') {
                Some((b, m)) => (b.trim(), m.trim().parse::<usize>().map_err(|_| format!("bad multiplicity in {:?}", t))?),
                None => (t.as_str(), 1),
            };
            let m: i64 = base.parse().map_err(|_| format!("bad order {:?}", base))?;
            out.extend(std::iter::repeat_n(m, times));
        }
    }
    Ok(())
}

fn one() -> u32 {
    1
}

#[derive(Deserialize)]
struct RawStratum {
    #[serde(default = "one")]
    k: u32,
    #[serde(default)]
    genus: u32,
    orders: Vec<OrderEntry>,
}

pub fn parse_stratum(v: &Value) -> Result<Stratum, AppError> {
    let raw: RawStratum = from_value(v.clone(), "stratum")?;
    let mut orders = Vec::new();
    for e in &raw.orders {
        expand(e, &mut orders).map_err(|m| AppError::new("invalid_input", m))?;
    }
    Ok(Stratum::new(raw.k, raw.genus, orders))
}

pub fn parse_tuple(v: &Value) -> Result<Vec<QComplex>, AppError> {
    from_value(v.clone(), "residue tuple")
}

fn from_value<T: DeserializeOwned>(v: Value, what: &str) -> Result<T, AppError> {
    serde_json::from_value(v).map_err(|e| AppError::new("invalid_input", format!("{}: {}", what, e)))
}

fn field<'a>(v: &'a Value, names: &[&str]) -> Option<&'a Value> {
    names.iter().find_map(|n| v.get(n))
}

/// Stratum with a residue tuple, as `{"stratum": …, "residues": […]}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Problem {
    pub stratum: Stratum,
    pub residues: Vec<QComplex>,
}

impl Problem {
    pub fn from_value(v: &Value) -> Result<Self, AppError> {
        let s = field(v, &["stratum"]).ok_or_else(|| AppError::new("invalid_input", "missing \"stratum\""))?;
        let stratum = parse_stratum(s)?;
        let residues = match field(v, &["residues", "tuple", "r"]) {
            Some(r) => parse_tuple(r)?,
            None => Vec::new(),
        };
        Ok(Problem { stratum, residues })
    }
}

/// Surface together with the stratum and residues it should realize.
pub struct SurfaceInput {
    pub problem: Problem,
    pub surface: FlatSurface,
}

impl SurfaceInput {
    pub fn from_value(v: &Value) -> Result<Self, AppError> {
        let problem = Problem::from_value(v)?;
        let s = v.get("surface").ok_or_else(|| AppError::new("invalid_input", "missing \"surface\""))?;
        Ok(SurfaceInput { problem, surface: from_value(s.clone(), "surface")? })
    }
}

/// Reads JSON from a path, from standard input (`-`), or inline when the
/// argument itself starts with `{` or `[`.
pub fn read_input(arg: &str) -> Result<Value, AppError> {
    let t = arg.trim_start();
    let text = if t.starts_with('{') || t.starts_with('[') {
        arg.to_string()
    } else if arg == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| AppError::new("io", e.to_string()))?
    } else {
        fs::read_to_string(Path::new(arg)).map_err(|e| AppError::new("io", format!("{}: {}", arg, e)))?
    };
    serde_json::from_str(&text).map_err(|e| AppError::new("invalid_json", e.to_string()))
}
