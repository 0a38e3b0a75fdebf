use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::coord::{Coord, Scalar};
use super::net::{EdgeRef, FlatSurface, Piece};
use super::polar::{make_polar_part, NetBuilder};
use crate::field::QReal;
use crate::Error;

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, head);
            out.push(p);
        }
    }
    out
}

fn orderings(items: &[usize], roots: &[Coord]) -> Vec<Vec<usize>> {
    if items.len() <= 4 {
        return permutations(items);
    }
    let mut inc = items.to_vec();
    inc.sort_by(|&a, &b| roots[a].arg().partial_cmp(&roots[b].arg()).unwrap_or(core::cmp::Ordering::Equal));
    let mut dec = inc.clone();
    dec.reverse();
    vec![inc, dec]
}

fn sum(xs: impl Iterator<Item = Coord>) -> Coord {
    xs.fold(Coord::zero(), |a, x| &a + &x)
}

fn less(a: &Scalar, b: &Scalar) -> bool {
    b.sub(a).signum() > 0
}

fn all_collinear(xs: &[Coord]) -> bool {
    xs.iter().all(|x| xs.iter().all(|y| x.cross(y).signum() == 0))
}

/// Hypotheses of the polygon lemmas; an error names the first one that fails.
fn check_hypotheses(k: u32, a1: i64, a2: i64, roots: &[Coord], split: Option<&[usize]>) -> Result<(), Error> {
    let s = roots.len();
    if a1.min(a2) < 0 {
        let r1 = &roots[0];
        let t = sum(roots[1..].iter().cloned());
        if t.is_zero() || less(&r1.norm_sqr(), &t.norm_sqr()) {
            return Err(Error::Precondition("need 0 < |r2+…+rs| ≤ |r1|".into()));
        }
        if (0..k).any(|j| t == &Coord::rot(k, j as i64) * r1) {
            return Err(Error::Precondition("r2+…+rs is a root of unity times r1".into()));
        }
        if s >= 4 && all_collinear(&roots[1..]) {
            return Err(Error::Precondition("r2, …, rs are collinear".into()));
        }
    } else if k >= 3 {
        let Some(split) = split else { return Ok(()) };
        let s1 = sum(split.iter().map(|&i| roots[i].clone()));
        let s2 = sum((0..s).filter(|i| !split.contains(i)).map(|i| roots[i].clone()));
        let q2 = Scalar::Exact(if k == 3 { QReal::frac(1, 4) } else { QReal::frac(1, 2) });
        if s1.is_zero() || !less(&s1.norm_sqr(), &q2.mul(&s2.norm_sqr())) {
            return Err(Error::Precondition(format!(
                "need 0 < |s1| < q|s2| with q = {}",
                if k == 3 { "1/2" } else { "1/√2" }
            )));
        }
        if s >= 4 && all_collinear(roots) {
            return Err(Error::Precondition("roots are collinear".into()));
        }
    }
    Ok(())
}

fn try_layout(k: u32, j: u32, roots: &[Coord], e1: &[usize], e2: &[usize], target: &[i64]) -> Option<FlatSurface> {
    let zeta = Coord::rot(k, j as i64);
    let total = sum(roots.iter().map(|r| -r));
    let t1 = (-&total).div(&(&Coord::one() - &zeta))?;
    if t1.is_zero() {
        return None;
    }
    let mut pts = vec![Coord::zero()];
    let mut sides = Vec::new();
    for &i in e1 {
        pts.push(pts.last().unwrap() - &roots[i]);
        sides.push(Some(i));
    }
    pts.push(pts.last().unwrap() + &t1);
    sides.push(None);
    for &i in e2 {
        pts.push(pts.last().unwrap() - &roots[i]);
        sides.push(Some(i));
    }
    sides.push(None);
    let closing = pts.last().unwrap() - &(&zeta * &t1);
    if !closing.is_zero() {
        return None;
    }
    let poly = Piece::polygon("polygon", pts);
    poly.check().ok()?;
    let mut nb = NetBuilder::new(k);
    let p = nb.add_piece(poly);
    nb.join(EdgeRef { piece: p, edge: e1.len() }, EdgeRef { piece: p, edge: e1.len() + e2.len() + 1 }, j);
    for (edge, side) in sides.iter().enumerate() {
        if let Some(i) = side {
            let at = nb.add_part(&make_polar_part(k, 0, vec![roots[*i].clone()], Vec::new(), k).ok()?, Some(*i));
            nb.join(EdgeRef { piece: p, edge }, at.upper[0], 0);
        }
    }
    let surface = nb.finish().ok()?;
    let inv = surface.invariants().ok()?;
    (inv.orders() == target).then_some(surface)
}

/// Two-zero witness in the stratum (a1, a2; (−k^s)) with k-residues `roots[i]^k`:
/// a polygon whose sides are the roots split into two chains separated by a pair
/// of sides glued by a rotation, with half-infinite cylinders on the roots.
/// `split` fixes the roots of the first chain; otherwise all splits are tried.
pub fn construct_c1_c2(k: u32, a1: i64, a2: i64, roots: &[Coord], split: Option<&[usize]>) -> Result<FlatSurface, Error> {
    let s = roots.len();
    if k < 2 || s == 0 {
        return Err(Error::Precondition("need k ≥ 2 and at least one pole".into()));
    }
    if a1 + a2 - (k as i64) * (s as i64) != -2 * k as i64 {
        return Err(Error::InvalidStratum(format!("orders ({}, {}; (−{}^{})) do not sum to −2k", a1, a2, k, s)));
    }
    if a1.min(a2) <= -(k as i64) {
        return Err(Error::InvalidStratum("zero orders must exceed −k".into()));
    }
    if roots.iter().any(Coord::is_zero) {
        return Err(Error::InvalidTuple("roots must be nonzero".into()));
    }
    if let Some(sp) = split {
        if sp.iter().any(|&i| i >= s) {
            return Err(Error::Precondition("split index out of range".into()));
        }
    }
    check_hypotheses(k, a1, a2, roots, split)?;
    let mut target = vec![a1, a2];
    target.sort_unstable_by(|a, b| b.cmp(a));
    let splits: Vec<Vec<usize>> = match split {
        Some(sp) => vec![sp.to_vec()],
        None => (0u32..(1 << s)).map(|m| (0..s).filter(|&i| m >> i & 1 == 1).collect()).collect(),
    };
    for sp in &splits {
        if split.is_none() && a1.min(a2) >= 0 && k >= 3 && check_hypotheses(k, a1, a2, roots, Some(sp)).is_err() {
            continue;
        }
        let rest: Vec<usize> = (0..s).filter(|i| !sp.contains(i)).collect();
        for o1 in orderings(sp, roots) {
            for o2 in orderings(&rest, roots) {
                for j in 1..k {
                    if let Some(surface) = try_layout(k, j, roots, &o1, &o2, &target) {
                        return Ok(surface);
                    }
                }
            }
        }
    }
    Err(Error::Unsupported("no simple polygon of the two types for these roots".into()))
}
