//! Multi-threaded drivers over the deterministic work splits of the core crate.

use std::collections::BTreeSet;

use rayon::prelude::*;
use residue_atlas_core::graph::{enumerate_forbidden_shard, forbidden_bound};
use residue_atlas_core::oracle::{agreement, fit_by, CrossCheck, FitOptions, FitReport};
use residue_atlas_core::{Decision, Error, QComplex, Stratum};

use crate::AppError;

fn pool(jobs: usize) -> Result<rayon::ThreadPool, AppError> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| AppError::new("runtime", e.to_string()))
}

/// Oracle fit with the starts spread over the current rayon pool; the report
/// equals the sequential one.
pub fn fit(s: &Stratum, r: &[QComplex], opts: &FitOptions) -> Result<FitReport, Error> {
    fit_by(s, r, opts, |p, range| range.into_par_iter().map(|i| p.run_start(i, opts)).collect())
}

pub fn cross_check(s: &Stratum, r: &[QComplex], decision: &Decision, opts: &FitOptions) -> Result<CrossCheck, Error> {
    Ok(agreement(decision, &fit(s, r, opts)?))
}

pub fn fit_with_jobs(s: &Stratum, r: &[QComplex], opts: &FitOptions, jobs: usize) -> Result<FitReport, AppError> {
    pool(jobs)?.install(|| fit(s, r, opts)).map_err(AppError::from)
}

/// Forbidden tuples up to `max_sum` (default: the bound `s1·s2/2`), split
/// into `jobs` shards.
pub fn enumerate_forbidden(s1: usize, s2: usize, max_sum: Option<i64>, jobs: usize) -> Result<BTreeSet<Vec<i64>>, AppError> {
    let jobs = jobs.max(1);
    let max_sum = max_sum.unwrap_or_else(|| forbidden_bound(s1, s2));
    let shards: Vec<BTreeSet<Vec<i64>>> = pool(jobs)?.install(|| {
        (0..jobs).into_par_iter().map(|i| enumerate_forbidden_shard(s1, s2, max_sum, i, jobs)).collect()
    });
    Ok(shards.into_iter().flatten().collect())
}
