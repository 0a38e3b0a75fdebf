//! Command-line front end. `run` does all the work and returns the exit code
//! with the JSON report, so it can be driven without a process.

use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use residue_atlas_core::classifier::{classify_with, is_triangular};
use residue_atlas_core::graph::{decide_cylinders, forbidden_bound};
use residue_atlas_core::oracle::FitOptions;
use residue_atlas_core::surface::verify_surface;
use residue_atlas_core::{Decision, Verdict};
use serde_json::{json, Map, Value};

use crate::io::{parse_stratum, parse_tuple, read_input, Problem, SurfaceInput};
use crate::{data, json, parallel, svg, witness, AppError, VERSION};

#[derive(Debug, Parser)]
#[command(name = "residue-atlas", version, about = "Residues of meromorphic k-differentials")]
pub struct Cli {
    /// JSON input: a path, `-` for standard input, or the JSON text itself.
    #[arg(long, global = true)]
    pub input: Option<String>,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a residue tuple in a stratum.
    Decide {
        #[arg(long)]
        emit_certificate: bool,
    },
    /// Build and verify a flat surface with the given residues.
    Witness {
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        emit_certificate: bool,
    },
    /// Primitive integer tuples with S1 positive and S2 negative entries
    /// admitting no connection graph.
    EnumerateForbidden {
        s1: usize,
        s2: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Search up to this positive sum instead of the bound s1·s2/2.
        #[arg(long)]
        max_sum: Option<i64>,
    },
    /// Check a surface against a stratum and residue tuple.
    VerifySurface {
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Fit a genus-zero differential to the residues numerically.
    OracleFit {
        #[arg(long, default_value_t = 0)]
        seed: u32,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, default_value_t = 64)]
        starts: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Whether three numbers have square roots summing to zero.
    Triangular,
    /// Cylinders with given circumferences in a holomorphic abelian stratum.
    Cylinders {
        #[arg(long)]
        emit_certificate: bool,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Decide { .. } => "decide",
            Command::Witness { .. } => "witness",
            Command::EnumerateForbidden { .. } => "enumerate-forbidden",
            Command::VerifySurface { .. } => "verify-surface",
            Command::OracleFit { .. } => "oracle-fit",
            Command::Triangular => "triangular",
            Command::Cylinders { .. } => "cylinders",
        }
    }
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_UNDECIDED: i32 = 2;

#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub report: Value,
}

fn header(command: &str) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("tool".into(), json!("residue-atlas"));
    m.insert("version".into(), json!(VERSION));
    m.insert("command".into(), json!(command));
    m
}

fn to_json<T: serde::Serialize>(v: &T) -> Result<Value, AppError> {
    serde_json::to_value(v).map_err(|e| AppError::new("serialization", e.to_string()))
}

fn input(cli: &Cli) -> Result<Value, AppError> {
    let arg = cli.input.as_deref().ok_or_else(|| AppError::new("invalid_input", "--input is required"))?;
    read_input(arg)
}

fn decision_fields(m: &mut Map<String, Value>, d: &Decision, certificate: bool) -> Result<i32, AppError> {
    m.insert("verdict".into(), to_json(&d.verdict)?);
    m.insert("tag".into(), json!(d.tag));
    if certificate {
        m.insert("certificate".into(), to_json(&d.certificate)?);
    }
    Ok(if d.verdict == Verdict::Undecided { EXIT_UNDECIDED } else { EXIT_OK })
}

fn write_file(path: &PathBuf, text: &str) -> Result<(), AppError> {
    fs::write(path, text).map_err(|e| AppError::new("io", format!("{}: {}", path.display(), e)))
}

fn execute(cli: &Cli, m: &mut Map<String, Value>) -> Result<i32, AppError> {
    match &cli.command {
        Command::Decide { emit_certificate } => {
            let p = Problem::from_value(&input(cli)?)?;
            let d = classify_with(&p.stratum, &p.residues, &data::sporadic_table()?)?;
            m.insert("stratum".into(), to_json(&p.stratum)?);
            m.insert("residues".into(), to_json(&p.residues)?);
            decision_fields(m, &d, *emit_certificate)
        }
        Command::Witness { svg: svg_path, emit_certificate } => {
            let p = Problem::from_value(&input(cli)?)?;
            let d = classify_with(&p.stratum, &p.residues, &data::sporadic_table()?)?;
            let surface = witness(&p.stratum, &p.residues, &d)?;
            let report = verify_surface(&surface, &p.stratum, &p.residues);
            if let Some(path) = svg_path {
                write_file(path, &svg::surface_svg(&surface))?;
            }
            m.insert("stratum".into(), to_json(&p.stratum)?);
            m.insert("residues".into(), to_json(&p.residues)?);
            decision_fields(m, &d, *emit_certificate)?;
            m.insert("surface".into(), to_json(&surface)?);
            m.insert("verification".into(), to_json(&report)?);
            if !report.pass {
                return Err(AppError::new("verification_failed", report.mismatches.join("; ")));
            }
            Ok(EXIT_OK)
        }
        Command::EnumerateForbidden { s1, s2, jobs, max_sum } => {
            if *s1 == 0 || *s2 == 0 {
                return Err(AppError::new("invalid_input", "s1 and s2 must be positive"));
            }
            let set = parallel::enumerate_forbidden(*s1, *s2, *max_sum, *jobs)?;
            m.insert("s1".into(), json!(s1));
            m.insert("s2".into(), json!(s2));
            m.insert("bound".into(), json!(forbidden_bound(*s1, *s2)));
            m.insert("max_sum".into(), json!(max_sum.unwrap_or_else(|| forbidden_bound(*s1, *s2))));
            m.insert("forbidden".into(), to_json(&set)?);
            Ok(EXIT_OK)
        }
        Command::VerifySurface { svg: svg_path } => {
            let si = SurfaceInput::from_value(&input(cli)?)?;
            let report = verify_surface(&si.surface, &si.problem.stratum, &si.problem.residues);
            if let Some(path) = svg_path {
                write_file(path, &svg::surface_svg(&si.surface))?;
            }
            m.insert("pass".into(), json!(report.pass));
            m.insert("report".into(), to_json(&report)?);
            Ok(EXIT_OK)
        }
        Command::OracleFit { seed, tol, starts, jobs } => {
            let p = Problem::from_value(&input(cli)?)?;
            let opts = FitOptions { n_starts: *starts, tol: *tol, seed: *seed, ..FitOptions::default() };
            let r = parallel::fit_with_jobs(&p.stratum, &p.residues, &opts, (*jobs).max(1))?;
            m.insert("found".into(), json!(r.found));
            m.insert("config".into(), to_json(&r.config)?);
            m.insert("residual".into(), json!(r.residual));
            m.insert("starts".into(), json!(r.starts));
            m.insert("ambiguous".into(), json!(r.ambiguous));
            m.insert("seed".into(), json!(seed));
            m.insert("log".into(), to_json(&r.log)?);
            Ok(EXIT_OK)
        }
        Command::Triangular => {
            let v = input(cli)?;
            let r = parse_tuple(v.get("residues").unwrap_or(&v))?;
            if r.len() != 3 {
                return Err(AppError::new("invalid_input", format!("need three numbers, got {}", r.len())));
            }
            m.insert("triangular".into(), json!(is_triangular(&r[0], &r[1], &r[2])?));
            Ok(EXIT_OK)
        }
        Command::Cylinders { emit_certificate } => {
            let v = input(cli)?;
            let s = parse_stratum(v.get("stratum").ok_or_else(|| AppError::new("invalid_input", "missing \"stratum\""))?)?;
            let lambda = parse_tuple(v.get("lambda").ok_or_else(|| AppError::new("invalid_input", "missing \"lambda\""))?)?;
            let d = decide_cylinders(&s, &lambda)?;
            m.insert("stratum".into(), to_json(&s)?);
            m.insert("lambda".into(), to_json(&lambda)?);
            decision_fields(m, &d, *emit_certificate)
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let mut m = header(cli.command.name());
    match execute(cli, &mut m) {
        Ok(code) => Outcome { code, report: Value::Object(m) },
        Err(e) => {
            m.insert("error".into(), json!(e.error));
            m.insert("detail".into(), json!(e.detail));
            Outcome { code: EXIT_ERROR, report: Value::Object(m) }
        }
    }
}

/// Runs and writes the report; returns the exit code.
pub fn main_with(cli: &Cli) -> i32 {
    let out = run(cli);
    let text = match json::to_string(&out.report) {
        Ok(t) => t + "\n",
        Err(e) => format!("{{\"error\":\"serialization\",\"detail\":{:?}}}\n", e.to_string()),
    };
    match &cli.output {
        Some(path) => {
            if let Err(e) = fs::write(path, &text) {
                eprintln!("{}: {}", path.display(), e);
                return EXIT_ERROR;
            }
        }
        None => print!("{}", text),
    }
    out.code
}
