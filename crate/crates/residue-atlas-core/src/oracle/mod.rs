//! Numerical witnesses for genus-zero strata: residues of explicit rational
//! k-differentials and a multi-start least-squares fit to target residues.

mod config;
mod fit;
mod residue;

pub use config::{Configuration, Gauge};
pub use fit::{agreement, cross_check, fit, fit_by, Agreement, CrossCheck, FitOptions, FitReport, Problem, StartLog, StartOutcome, StartResult};
pub use residue::{residue_jacobian, residues_of_configuration, ResidueJacobian};
