use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::build::residue_slots;
use super::coord::Coord;
use super::net::FlatSurface;
use crate::field::QComplex;
use crate::strata::Stratum;

/// Comparison of a glued surface against a stratum and residue tuple.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub pass: bool,
    pub genus: Option<u32>,
    /// Orders of the finite cone points, largest first, regular points dropped.
    pub zeros: Vec<i64>,
    pub poles: Vec<i64>,
    /// Residues read off the net, aligned with the residue tuple.
    pub residues: Vec<Option<Coord>>,
    pub mismatches: Vec<String>,
}

fn multiset_eq(mut a: Vec<i64>, mut b: Vec<i64>) -> bool {
    a.sort_unstable();
    b.sort_unstable();
    a == b
}

/// Checks genus, zero and pole orders, and residues of `surface` against `(s, r)`.
/// Poles carrying a label are compared with that residue slot; the others are
/// matched greedily among poles of the same order.
pub fn verify_surface(surface: &FlatSurface, s: &Stratum, r: &[QComplex]) -> VerifyReport {
    let mut report = VerifyReport {
        pass: false,
        genus: None,
        zeros: Vec::new(),
        poles: Vec::new(),
        residues: Vec::new(),
        mismatches: Vec::new(),
    };
    let m = &mut report.mismatches;
    if surface.k != s.k {
        m.push(format!("surface has k = {}, stratum has k = {}", surface.k, s.k));
    }
    if let Err(e) = surface.validate() {
        m.push(format!("{}", e));
        return report;
    }
    let inv = match surface.invariants() {
        Ok(inv) => inv,
        Err(e) => {
            m.push(format!("{}", e));
            return report;
        }
    };
    report.genus = Some(inv.genus);
    if inv.genus != s.genus {
        m.push(format!("genus {} instead of {}", inv.genus, s.genus));
    }
    let expected_zeros = s.zeros();
    let regular_allowed = expected_zeros.iter().filter(|&&a| a == 0).count();
    let mut zeros: Vec<i64> = inv.orders().into_iter().filter(|&a| a != 0).collect();
    let regular = inv.orders().iter().filter(|&&a| a == 0).count();
    zeros.extend(core::iter::repeat_n(0, regular.min(regular_allowed)));
    zeros.sort_unstable_by(|a, b| b.cmp(a));
    report.zeros = zeros.clone();
    if !multiset_eq(zeros, expected_zeros.clone()) {
        m.push(format!("zero orders {:?} instead of {:?}", report.zeros, expected_zeros));
    }
    report.poles = inv.pole_orders();
    let expected_poles: Vec<i64> = s.poles().iter().map(|p| p.order).collect();
    if !multiset_eq(report.poles.clone(), expected_poles.clone()) {
        m.push(format!("pole orders {:?} instead of {:?}", report.poles, expected_poles));
    }
    if r.len() != s.residue_len() {
        m.push(format!("residue tuple has {} entries, stratum expects {}", r.len(), s.residue_len()));
        report.pass = report.mismatches.is_empty();
        return report;
    }
    let poles = s.poles();
    let slots = residue_slots(s);
    report.residues = alloc::vec![None; r.len()];
    let mut free: Vec<usize> = Vec::new();
    for (e, end) in inv.poles.iter().enumerate() {
        match end.label.filter(|&l| l < poles.len()) {
            Some(l) => {
                if poles[l].order != end.order {
                    m.push(format!("pole labelled {} has order {} instead of {}", l, end.order, poles[l].order));
                }
                if let Some(slot) = slots[l] {
                    report.residues[slot] = Some(end.residue.clone());
                }
            }
            None => free.push(e),
        }
    }
    for (i, p) in poles.iter().enumerate() {
        let Some(slot) = slots[i] else { continue };
        if report.residues[slot].is_some() || inv.poles.iter().any(|e| e.label == Some(i)) {
            continue;
        }
        let want = Coord::Exact(r[slot].clone());
        let pick = free
            .iter()
            .position(|&e| inv.poles[e].order == p.order && inv.poles[e].residue == want)
            .or_else(|| free.iter().position(|&e| inv.poles[e].order == p.order));
        if let Some(pos) = pick {
            let e = free.remove(pos);
            report.residues[slot] = Some(inv.poles[e].residue.clone());
        }
    }
    for (slot, got) in report.residues.iter().enumerate() {
        let want = Coord::Exact(r[slot].clone());
        match got {
            Some(c) if *c == want => {}
            Some(c) => m.push(format!("residue {} is {} instead of {}", slot, c, want)),
            None => m.push(format!("no pole carries residue {}", slot)),
        }
    }
    report.pass = report.mismatches.is_empty();
    report
}
