use alloc::boxed::Box;
use alloc::format;
use alloc::vec::Vec;

use super::{classify_with, tags, SporadicTable};
use crate::decision::{Certificate, Decision, Verdict};
use crate::field::QComplex;
use crate::strata::{residue_tuple_valid, Stratum};
use crate::Error;

const MAX_CHOICES: usize = 200_000;

/// Genus 0 with gcd(μ, k) = d > 1: every such differential is the d-th power
/// of a (k/d)-differential, and k-residues are d-th powers of the (k/d)-residues.
pub(super) fn classify_power(s: &Stratum, r: &[QComplex], d: u32, table: &SporadicTable) -> Result<Decision, Error> {
    if !residue_tuple_valid(s, r)? {
        return Err(Error::InvalidTuple(format!("tuple is not in the residue space of {}", s)));
    }
    let inner = Stratum::new(s.k / d, 0, s.orders.iter().map(|m| m / d as i64).collect());
    // The residue image is a cone, so dividing by the first nonzero entry keeps the verdict.
    let scale = r.iter().find(|x| !x.is_zero()).cloned().unwrap_or_else(QComplex::one);
    let r: Vec<QComplex> = r.iter().map(|x| x.div(&scale).expect("nonzero divisor")).collect();
    let mut roots: Vec<Vec<QComplex>> = Vec::with_capacity(r.len());
    let mut complete = true;
    let mut first = true;
    for x in &r {
        let mut rs = x.exact_roots(d);
        if !x.is_zero() {
            if rs.len() < d as usize {
                complete = false;
            }
            if first && !rs.is_empty() {
                rs.truncate(1);
                first = false;
            }
        }
        if rs.is_empty() {
            return Ok(Decision::undecided(tags::TRANSPORT_OPEN, "an entry has no d-th root in Q(i,√3)"));
        }
        roots.push(rs);
    }
    let total = roots.iter().try_fold(1usize, |acc, v| acc.checked_mul(v.len()));
    if total.is_none_or(|t| t > MAX_CHOICES) {
        return Ok(Decision::undecided(tags::TRANSPORT_OPEN, "too many root choices"));
    }
    let mut idx = alloc::vec![0usize; r.len()];
    let mut undecided = None;
    loop {
        let choice: Vec<QComplex> = idx.iter().zip(&roots).map(|(&i, v)| v[i].clone()).collect();
        if residue_tuple_valid(&inner, &choice)? {
            let dec = classify_with(&inner, &choice, table)?;
            match dec.verdict {
                Verdict::Realizable => {
                    let tag = format!("{}/{}", tags::TRANSPORT, dec.tag);
                    return Ok(Decision::realizable(&tag).with(Certificate::Transport {
                        d,
                        k: inner.k,
                        scale: scale.clone(),
                        orders: inner.orders.clone(),
                        roots: choice,
                        inner: Box::new(dec),
                    }));
                }
                Verdict::Undecided => undecided = Some(dec),
                Verdict::NotRealizable => {}
            }
        }
        let mut j = 0;
        loop {
            if j == idx.len() {
                return Ok(match undecided {
                    Some(dec) => Decision::undecided(&format!("{}/{}", tags::TRANSPORT, dec.tag), "some root choice is undecided"),
                    None if complete => Decision::not_realizable(tags::TRANSPORT_NONE).with(Certificate::Exhausted {
                        searched: format!("all {}-th roots of the normalized tuple", d),
                    }),
                    None => Decision::undecided(tags::TRANSPORT_OPEN, "some d-th roots lie outside Q(i,√3)"),
                });
            }
            idx[j] += 1;
            if idx[j] < roots[j].len() {
                break;
            }
            idx[j] = 0;
            j += 1;
        }
    }
}
