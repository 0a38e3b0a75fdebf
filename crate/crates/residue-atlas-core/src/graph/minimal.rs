use alloc::format;
use alloc::vec::Vec;

use super::connection::ConnectionSearch;
use crate::decision::{Certificate, Decision, Weighted};
use crate::field::{QComplex, QReal};
use crate::strata::{residue_tuple_valid, Stratum};
use crate::Error;

pub const TAG_POLYGON: &str = "genus0.abelian.single-zero.polygon";
pub const TAG_CONNECTION: &str = "genus0.abelian.single-zero.connection-graph";
pub const TAG_NO_CONNECTION: &str = "genus0.abelian.single-zero.no-connection-graph";

/// When every entry is a real multiple of the first nonzero one `u`,
/// return `u` and the real coordinates.
pub fn collinear_frame(r: &[QComplex]) -> Option<(QComplex, Vec<QReal>)> {
    let u = r.iter().find(|x| !x.is_zero())?.clone();
    let n = u.norm_sqr().inv()?;
    let mut coords = Vec::with_capacity(r.len());
    for x in r {
        if !u.cross(x).is_zero() {
            return None;
        }
        coords.push(&u.dot(x) * &n);
    }
    Some((u, coords))
}

/// Indices ordered by decreasing argument.
pub fn by_decreasing_argument(r: &[QComplex]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..r.len()).collect();
    let args: Vec<f64> = r.iter().map(|x| x.to_c64().arg()).collect();
    idx.sort_by(|&a, &b| args[b].partial_cmp(&args[a]).unwrap_or(core::cmp::Ordering::Equal));
    idx
}

/// Realizability of residues at simple poles around a single zero, with the
/// search cache supplied by the caller.
pub fn minimal_tuple_decision(r: &[QComplex], search: &mut ConnectionSearch<QReal>) -> Decision {
    let Some((u, coords)) = collinear_frame(r) else {
        return Decision::realizable(TAG_POLYGON)
            .with(Certificate::ResidualPolygon { order: by_decreasing_argument(r) });
    };
    let zero = QReal::zero();
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for c in &coords {
        if *c > zero {
            pos.push(c.clone());
        } else {
            neg.push(-c.clone());
        }
    }
    match search.find(&pos, &neg) {
        Some(g) => Decision::realizable(TAG_CONNECTION).with(Certificate::Connection {
            scale: u,
            pos: g.pos.into_iter().map(|w| Weighted { w }).collect(),
            neg: g.neg.into_iter().map(|w| Weighted { w }).collect(),
            edges: g.edges,
        }),
        None => Decision::not_realizable(TAG_NO_CONNECTION).with(Certificate::Exhausted {
            searched: format!("all bipartite trees on {}+{} weighted vertices", pos.len(), neg.len()),
        }),
    }
}

pub fn is_minimal_abelian(s: &Stratum) -> bool {
    s.k == 1 && s.genus == 0 && s.n_zeros() == 1 && s.orders.iter().all(|&m| m >= -1)
}

pub fn decide_minimal_abelian(s: &Stratum, r: &[QComplex]) -> Result<Decision, Error> {
    if !is_minimal_abelian(s) {
        return Err(Error::Precondition(format!("{} is not (a;(-1^(a+2))) with k=1, g=0", s)));
    }
    if !residue_tuple_valid(s, r)? {
        return Err(Error::InvalidTuple("entries must be nonzero and sum to zero".into()));
    }
    Ok(minimal_tuple_decision(r, &mut ConnectionSearch::new()))
}
