#![no_std]
#![doc = include_str!("../README.md")]
extern crate alloc;

pub mod classifier;
mod decision;
mod error;
pub mod field;
pub mod graph;
pub mod oracle;
pub mod strata;
pub mod surface;

pub use classifier::{classify, classify_with};
pub use decision::{Certificate, Decision, EnrichedEdge, EnrichedVertex, UntyingVertex, Verdict, Weighted};
pub use error::Error;
pub use field::{QComplex, QReal};
pub use strata::{Pole, PoleKind, Stratum};
