use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;
use core::ops::Range;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::config::{Configuration, Gauge};
use super::residue::residue_jacobian;
use crate::decision::{Decision, Verdict};
use crate::field::QComplex;
use crate::strata::{residue_tuple_valid, validate_stratum, Stratum};
use crate::Error;

const COLLISION: f64 = 1e-8;
const SEPARATION: f64 = 0.05;
const STALL: f64 = 1e-4;
const FAR: f64 = 1e8;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FitOptions {
    pub n_starts: usize,
    pub tol: f64,
    pub seed: u32,
    pub max_iter: usize,
}

impl Default for FitOptions {
    fn default() -> Self {
        FitOptions { n_starts: 64, tol: 1e-9, seed: 0, max_iter: 200 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StartOutcome {
    Converged,
    Diverged,
    Collided,
    Stalled,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StartLog {
    pub index: usize,
    pub outcome: StartOutcome,
    pub iterations: usize,
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StartResult {
    pub log: StartLog,
    pub config: Option<Configuration>,
}

/// Outcome of a multi-start fit. `found == false` is evidence, not proof.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FitReport {
    pub found: bool,
    pub config: Option<Configuration>,
    pub residual: f64,
    pub starts: usize,
    /// Some start stalled between the tolerance and 1e−4 even after the re-run.
    pub ambiguous: bool,
    pub log: Vec<StartLog>,
}

/// Stratum, targets and gauge of a fit, shared by all starts.
#[derive(Clone, Debug)]
pub struct Problem {
    pub stratum: Stratum,
    pub targets: Vec<Complex64>,
    pub gauge: Gauge,
    /// Residue slots entering the least-squares system.
    pub equations: Vec<usize>,
}

impl Problem {
    pub fn new(s: &Stratum, r: &[QComplex]) -> Result<Self, Error> {
        if let Some(v) = validate_stratum(s).first() {
            return Err(Error::InvalidStratum(format!("{}", v)));
        }
        if s.genus != 0 {
            return Err(Error::Precondition("the oracle fits genus zero only".into()));
        }
        if !residue_tuple_valid(s, r)? {
            return Err(Error::InvalidTuple("tuple is not in the residue space".into()));
        }
        let orders = s.canonical_orders();
        let gauge = Gauge::standard(&orders, s.k);
        let len = r.len();
        // the residue theorem makes the last abelian equation redundant
        let equations = if s.k == 1 && len > 0 { (0..len - 1).collect() } else { (0..len).collect() };
        Ok(Problem { stratum: s.clone(), targets: r.iter().map(QComplex::to_c64).collect(), gauge, equations })
    }

    fn n_unknowns(&self) -> usize {
        self.gauge.free.len() + 1
    }

    fn config(&self, u: &[Complex64]) -> Configuration {
        let n = u.len();
        Configuration::new(&self.stratum, &u[..n - 1], u[n - 1]).expect("unknowns match the gauge")
    }

    /// Starting positions from a scrambled Sobol sequence in the unit disk,
    /// kept at least 0.05 apart from each other and from 0 and 1.
    fn start(&self, index: usize, seed: u32) -> Vec<Complex64> {
        let free = self.gauge.free.len();
        let mut fixed = vec![Complex64::new(0.0, 0.0)];
        if self.gauge.one.is_some() {
            fixed.push(Complex64::new(1.0, 0.0));
        }
        let mut sample = (index as u32).wrapping_mul(97);
        let mut pts = Vec::with_capacity(free);
        let mut tries = 0u32;
        while pts.len() < free {
            let dim = 2 * pts.len() as u32;
            let (idx, scramble) = (sample & 0xFFFF, seed ^ (sample >> 16).wrapping_mul(0x9E37_79B9));
            let u = sobol_burley::sample(idx, dim, scramble) as f64;
            let v = sobol_burley::sample(idx, dim + 1, scramble) as f64;
            let z = Complex64::from_polar(libm::sqrt(u), 2.0 * PI * v);
            sample = sample.wrapping_add(1);
            tries += 1;
            if tries < 10_000 && fixed.iter().chain(pts.iter()).any(|p: &Complex64| (p - z).norm() < SEPARATION) {
                continue;
            }
            pts.push(z);
        }
        pts
    }

    fn residual(&self, res: &[Complex64]) -> f64 {
        libm::sqrt(res.iter().zip(&self.targets).map(|(a, b)| (a - b).norm_sqr()).sum::<f64>())
    }

    /// Damped Newton (Levenberg–Marquardt) from start `index`.
    pub fn run_start(&self, index: usize, opts: &FitOptions) -> StartResult {
        let mut u = self.start(index, opts.seed);
        let probe = self.config(&{
            let mut v = u.clone();
            v.push(Complex64::new(1.0, 0.0));
            v
        });
        let scale = match residue_jacobian(&probe) {
            Ok(j) => {
                let num: Complex64 = j.residues.iter().zip(&self.targets).map(|(a, b)| a.conj() * b).sum();
                let den: f64 = j.residues.iter().map(|a| a.norm_sqr()).sum();
                if den > 0.0 && num.norm() > 0.0 {
                    num / den
                } else {
                    Complex64::new(1.0, 0.0)
                }
            }
            Err(_) => Complex64::new(1.0, 0.0),
        };
        u.push(scale);
        let mut lambda = 1e-3;
        let log = |outcome, iterations, residual| StartLog { index, outcome, iterations, residual };
        let mut iterations = 0;
        loop {
            let config = self.config(&u);
            if config.min_separation() < COLLISION {
                return StartResult { log: log(StartOutcome::Collided, iterations, f64::INFINITY), config: None };
            }
            let jac = match residue_jacobian(&config) {
                Ok(j) => j,
                Err(_) => return StartResult { log: log(StartOutcome::Collided, iterations, f64::INFINITY), config: None },
            };
            let res = self.residual(&jac.residues);
            if !res.is_finite() {
                return StartResult { log: log(StartOutcome::Diverged, iterations, res), config: None };
            }
            if res < opts.tol {
                return StartResult { log: log(StartOutcome::Converged, iterations, res), config: Some(config) };
            }
            if iterations >= opts.max_iter {
                return StartResult { log: log(StartOutcome::Stalled, iterations, res), config: None };
            }
            iterations += 1;
            let (f, j) = self.system(&jac);
            let jt = j.transpose();
            let jtj = &jt * &j;
            let g = &jt * &f;
            let mut accepted = false;
            while lambda < 1e14 {
                let mut a = jtj.clone();
                for d in 0..a.nrows() {
                    a[(d, d)] += lambda * (1.0 + jtj[(d, d)]);
                }
                let Some(step) = a.lu().solve(&(-&g)) else {
                    lambda *= 4.0;
                    continue;
                };
                let mut trial = u.clone();
                for (q, t) in trial.iter_mut().enumerate() {
                    *t += Complex64::new(step[2 * q], step[2 * q + 1]);
                }
                if trial.iter().any(|t| !t.is_finite() || t.norm() > FAR) || trial[trial.len() - 1].norm() == 0.0 {
                    return StartResult { log: log(StartOutcome::Diverged, iterations, res), config: None };
                }
                let tc = self.config(&trial);
                let better = tc.min_separation() >= COLLISION
                    && residue_jacobian(&tc).map(|t| self.residual(&t.residues) < res).unwrap_or(false);
                if better {
                    u = trial;
                    lambda = (lambda / 3.0).max(1e-12);
                    accepted = true;
                    break;
                }
                lambda *= 4.0;
            }
            if !accepted {
                return StartResult { log: log(StartOutcome::Stalled, iterations, res), config: None };
            }
        }
    }

    /// Stacked real residual vector and its real Jacobian.
    fn system(&self, jac: &super::ResidueJacobian) -> (DVector<f64>, DMatrix<f64>) {
        let m = self.equations.len();
        let n = self.n_unknowns();
        let mut f = DVector::zeros(2 * m);
        let mut j = DMatrix::zeros(2 * m, 2 * n);
        for (row, &slot) in self.equations.iter().enumerate() {
            let d = jac.residues[slot] - self.targets[slot];
            f[2 * row] = d.re;
            f[2 * row + 1] = d.im;
            let mut cols: Vec<Complex64> = self.gauge.free.iter().map(|&p| jac.d_points[slot][p]).collect();
            cols.push(jac.d_scale[slot]);
            for (col, w) in cols.into_iter().enumerate() {
                j[(2 * row, 2 * col)] = w.re;
                j[(2 * row, 2 * col + 1)] = -w.im;
                j[(2 * row + 1, 2 * col)] = w.im;
                j[(2 * row + 1, 2 * col + 1)] = w.re;
            }
        }
        (f, j)
    }
}

/// Multi-start fit run sequentially.
pub fn fit(s: &Stratum, r: &[QComplex], opts: &FitOptions) -> Result<FitReport, Error> {
    fit_by(s, r, opts, |p, range| range.map(|i| p.run_start(i, opts)).collect())
}

/// Multi-start fit with a caller-supplied runner for ranges of start indices.
/// When nothing converges but some start stalls between the tolerance and
/// 1e−4, the run is extended to four times as many starts.
pub fn fit_by<F>(s: &Stratum, r: &[QComplex], opts: &FitOptions, run: F) -> Result<FitReport, Error>
where
    F: Fn(&Problem, Range<usize>) -> Vec<StartResult>,
{
    let problem = Problem::new(s, r)?;
    if opts.n_starts == 0 {
        return Err(Error::Precondition("at least one start".into()));
    }
    let mut results = run(&problem, 0..opts.n_starts);
    let ambiguous = |rs: &[StartResult]| {
        rs.iter().any(|x| x.log.outcome == StartOutcome::Stalled && x.log.residual > opts.tol && x.log.residual < STALL)
    };
    let converged = |rs: &[StartResult]| rs.iter().any(|x| x.log.outcome == StartOutcome::Converged);
    if !converged(&results) && ambiguous(&results) {
        results.extend(run(&problem, opts.n_starts..4 * opts.n_starts));
    }
    results.sort_by_key(|x| x.log.index);
    let best = results
        .iter()
        .filter(|x| x.log.outcome == StartOutcome::Converged)
        .min_by(|a, b| a.log.residual.partial_cmp(&b.log.residual).unwrap_or(core::cmp::Ordering::Equal));
    let found = best.is_some();
    let residual = match best {
        Some(b) => b.log.residual,
        None => results.iter().map(|x| x.log.residual).fold(f64::INFINITY, f64::min),
    };
    Ok(FitReport {
        found,
        config: best.and_then(|b| b.config.clone()),
        residual,
        starts: results.len(),
        ambiguous: !found && ambiguous(&results),
        log: results.into_iter().map(|x| x.log).collect(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Agreement {
    Pass,
    Conflict,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CrossCheck {
    pub agreement: Agreement,
    pub verdict: Verdict,
    pub tag: String,
    pub found: bool,
    pub residual: f64,
    pub starts: usize,
}

/// Compares a decision with a numerical fit: a realizable verdict without a
/// numerical solution, or a non-realizable verdict with one, is a conflict.
pub fn cross_check(s: &Stratum, r: &[QComplex], decision: &Decision, opts: &FitOptions) -> Result<CrossCheck, Error> {
    let report = fit(s, r, opts)?;
    Ok(agreement(decision, &report))
}

pub fn agreement(decision: &Decision, report: &FitReport) -> CrossCheck {
    let conflict = matches!(
        (decision.verdict, report.found),
        (Verdict::Realizable, false) | (Verdict::NotRealizable, true)
    );
    CrossCheck {
        agreement: if conflict { Agreement::Conflict } else { Agreement::Pass },
        verdict: decision.verdict,
        tag: decision.tag.clone(),
        found: report.found,
        residual: report.residual,
        starts: report.starts,
    }
}
