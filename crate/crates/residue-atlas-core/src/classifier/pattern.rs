use alloc::vec::Vec;

use crate::field::QComplex;

pub fn is_zero_tuple(r: &[QComplex]) -> bool {
    r.iter().all(|x| x.is_zero())
}

fn sorted(v: &[QComplex]) -> Vec<QComplex> {
    let mut v = v.to_vec();
    v.sort();
    v
}

/// `r = λ·pattern` for some λ ≠ 0, entries compared in order.
pub fn proportional(r: &[QComplex], pattern: &[QComplex]) -> bool {
    if r.len() != pattern.len() {
        return false;
    }
    let Some(j) = pattern.iter().position(|p| !p.is_zero()) else {
        return false;
    };
    let Some(lambda) = r[j].div(&pattern[j]) else {
        return false;
    };
    if lambda.is_zero() {
        return false;
    }
    r.iter().zip(pattern).all(|(x, p)| *x == &lambda * p)
}

/// `r` is a permutation of `λ·pattern` for some λ ≠ 0.
pub fn proportional_unordered(r: &[QComplex], pattern: &[QComplex]) -> bool {
    if r.len() != pattern.len() {
        return false;
    }
    let Some(x0) = r.iter().find(|x| !x.is_zero()) else {
        return false;
    };
    let target = sorted(r);
    let mut tried: Vec<&QComplex> = Vec::new();
    for p in pattern.iter().filter(|p| !p.is_zero()) {
        if tried.contains(&p) {
            continue;
        }
        tried.push(p);
        let Some(lambda) = x0.div(p) else { continue };
        let scaled: Vec<QComplex> = pattern.iter().map(|q| &lambda * q).collect();
        if sorted(&scaled) == target {
            return true;
        }
    }
    false
}

/// Distinct values with multiplicities, in sorted order.
pub fn multiplicities(r: &[QComplex]) -> Vec<(QComplex, usize)> {
    let mut out: Vec<(QComplex, usize)> = Vec::new();
    for x in sorted(r) {
        match out.last_mut() {
            Some((y, c)) if *y == x => *c += 1,
            _ => out.push((x, 1)),
        }
    }
    out
}

/// All entries on one open ray from the origin.
pub fn same_ray(r: &[QComplex]) -> bool {
    match r.first() {
        None => true,
        Some(x0) => r.iter().all(|x| x0.same_ray(x)),
    }
}
