use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use super::coord::Coord;
use super::net::{EdgeRef, FlatSurface, Piece};
use super::polar::{make_polar_part, make_polar_part_along, NetBuilder};
use crate::field::{QComplex, QReal};
use crate::graph::{check_connection_graph, collinear_frame, ConnectionGraph, ConnectionSearch};
use crate::strata::{residue_tuple_valid, validate_stratum, PoleKind, Stratum};
use crate::Error;

/// Pole of a construction: order −`b`, residue `r`, label for the finished surface.
#[derive(Clone, Debug)]
pub struct PoleSpec {
    pub b: u32,
    pub r: Coord,
    pub label: Option<usize>,
}

/// Residue index of each pole of `s`, in canonical order.
pub fn residue_slots(s: &Stratum) -> Vec<Option<usize>> {
    let mut next = 0;
    s.poles()
        .iter()
        .map(|p| {
            if p.carries_residue() {
                next += 1;
                Some(next - 1)
            } else {
                None
            }
        })
        .collect()
}

fn strip(v: Vec<Coord>) -> Result<super::PolarPart, Error> {
    make_polar_part(1, 0, v, Vec::new(), 1)
}

/// Genus-zero surface with one zero realizing a connection graph: one
/// half-infinite cylinder per vertex, cut into the flows of its edges.
pub fn build_from_connection_graph(g: &ConnectionGraph<QReal>, scale: &QComplex) -> Result<FlatSurface, Error> {
    connection_net(g, scale, &vec![None; g.pos.len()], &vec![None; g.neg.len()])
}

fn connection_net(
    g: &ConnectionGraph<QReal>,
    scale: &QComplex,
    pos_labels: &[Option<usize>],
    neg_labels: &[Option<usize>],
) -> Result<FlatSurface, Error> {
    if scale.is_zero() {
        return Err(Error::InvalidGraph("zero scale".into()));
    }
    if !check_connection_graph(g)? {
        return Err(Error::InvalidGraph("weights unbalanced or some edge flow is not positive".into()));
    }
    let flows = g.flows();
    let scale = Coord::Exact(scale.clone());
    let mut nb = NetBuilder::new(1);
    let mut pos_seg: Vec<Option<EdgeRef>> = vec![None; g.edges.len()];
    let mut neg_seg: Vec<Option<EdgeRef>> = vec![None; g.edges.len()];
    for (side, count) in [(true, g.pos.len()), (false, g.neg.len())] {
        for v in 0..count {
            let incident: Vec<usize> =
                (0..g.edges.len()).filter(|&e| if side { g.edges[e].0 == v } else { g.edges[e].1 == v }).collect();
            let chain: Vec<Coord> = incident
                .iter()
                .map(|&e| {
                    let c = &scale * &Coord::Exact(QComplex::from_real(flows[e].clone()));
                    if side {
                        c
                    } else {
                        -c
                    }
                })
                .collect();
            let label = if side { pos_labels[v] } else { neg_labels[v] };
            let at = nb.add_part(&strip(chain)?, label);
            for (slot, &e) in incident.iter().enumerate() {
                if side {
                    pos_seg[e] = Some(at.upper[slot]);
                } else {
                    neg_seg[e] = Some(at.upper[slot]);
                }
            }
        }
    }
    for e in 0..g.edges.len() {
        nb.join(pos_seg[e].unwrap(), neg_seg[e].unwrap(), 0);
    }
    nb.finish()
}

/// Residual polygon construction: a convex polygon with the nonzero residues
/// as sides, a polar part on each side, and trivial parts for zero residues
/// stacked on the first side.
pub fn residual_polygon_net(specs: &[PoleSpec]) -> Result<FlatSurface, Error> {
    let mut nz: Vec<usize> = (0..specs.len()).filter(|&i| !specs[i].r.is_zero()).collect();
    if nz.is_empty() {
        return zero_residue_cycle(specs);
    }
    let args: Vec<f64> = specs.iter().map(|p| p.r.arg()).collect();
    nz.sort_by(|&a, &b| args[b].partial_cmp(&args[a]).unwrap_or(core::cmp::Ordering::Equal));
    let mut pts = vec![Coord::zero()];
    let mut side_of = Vec::new();
    for &i in nz.iter().rev() {
        let next = pts.last().unwrap() - &specs[i].r;
        pts.push(next);
        side_of.push(i);
    }
    if !pts.pop().unwrap().is_zero() {
        return Err(Error::InvalidTuple("residues do not sum to zero".into()));
    }
    let mut nb = NetBuilder::new(1);
    let poly = nb.add_piece(Piece::polygon("residual polygon", pts));
    let mut top: Vec<Option<EdgeRef>> = vec![None; specs.len()];
    for &i in &nz {
        let p = &specs[i];
        let part = if p.b == 1 {
            strip(vec![p.r.clone()])?
        } else {
            make_polar_part_along(p.b, 1, vec![p.r.clone()], Vec::new(), 1, p.r.clone())?
        };
        top[i] = Some(nb.add_part(&part, p.label).upper[0]);
    }
    let host = nz[0];
    let x = specs[host].r.clone();
    for (j, p) in specs.iter().enumerate() {
        if !p.r.is_zero() {
            continue;
        }
        if p.b < 2 {
            return Err(Error::InvalidTuple(format!("simple pole {} has zero residue", j)));
        }
        let part = make_polar_part_along(p.b, 1, vec![x.clone()], vec![x.clone()], 1, x.clone())?;
        let at = nb.add_part(&part, p.label);
        nb.join(top[host].unwrap(), at.lower[0], 0);
        top[host] = Some(at.upper[0]);
    }
    for (e, &i) in side_of.iter().enumerate() {
        nb.join(EdgeRef { piece: poly, edge: e }, top[i].unwrap(), 0);
    }
    nb.finish()
}

/// Every residue zero. With a single pole of order −b, the part (1; 1) of type
/// b − 1 glued to itself has a zero of order b − 2 and a regular marked point;
/// with several poles a single zero cannot carry the zero tuple.
fn zero_residue_cycle(specs: &[PoleSpec]) -> Result<FlatSurface, Error> {
    if specs.iter().any(|p| p.b < 2) {
        return Err(Error::InvalidTuple("a simple pole has zero residue".into()));
    }
    if specs.len() != 1 {
        return Err(Error::Precondition("the zero tuple needs more than one zero when there are several poles".into()));
    }
    let one = Coord::one();
    let b = specs[0].b;
    let part = make_polar_part_along(b, b - 1, vec![one.clone()], vec![one.clone()], 1, one)?;
    let mut nb = NetBuilder::new(1);
    let at = nb.add_part(&part, specs[0].label);
    nb.join(at.upper[0], at.lower[0], 0);
    nb.finish()
}

/// Collinear residues with a pole of higher order: that pole's part absorbs
/// the whole broken line.
fn degenerate_polygon_net(specs: &[PoleSpec], u: &Coord) -> Result<FlatSurface, Error> {
    let sign = |r: &Coord| r.dot(u).signum();
    let higher: Vec<usize> = (0..specs.len()).filter(|&i| specs[i].b >= 2).collect();
    let p1 = *higher
        .iter()
        .find(|&&i| !specs[i].r.is_zero())
        .or(higher.first())
        .ok_or_else(|| Error::Unsupported("collinear residues need a pole of order at least 2".into()))?;
    let neg: Vec<usize> = (0..specs.len()).filter(|&i| i != p1 && sign(&specs[i].r) < 0).collect();
    let pos: Vec<usize> = (0..specs.len()).filter(|&i| i != p1 && sign(&specs[i].r) > 0).collect();
    let v: Vec<Coord> = neg.iter().map(|&i| -&specs[i].r).collect();
    let w: Vec<Coord> = pos.iter().map(|&i| specs[i].r.clone()).collect();
    let mut nb = NetBuilder::new(1);
    let main = nb.add_part(&make_polar_part_along(specs[p1].b, 1, v, w, 1, u.clone())?, specs[p1].label);
    let mut top: Vec<Option<EdgeRef>> = vec![None; specs.len()];
    let mut target: Vec<Option<EdgeRef>> = vec![None; specs.len()];
    for (slot, &i) in neg.iter().enumerate() {
        let p = &specs[i];
        let seg = if p.b == 1 {
            nb.add_part(&strip(vec![p.r.clone()])?, p.label).upper[0]
        } else {
            let part = make_polar_part_along(p.b, 1, Vec::new(), vec![-&p.r], 1, u.clone())?;
            nb.add_part(&part, p.label).lower[0]
        };
        top[i] = Some(seg);
        target[i] = Some(main.upper[slot]);
    }
    for (slot, &i) in pos.iter().enumerate() {
        let p = &specs[i];
        let part = if p.b == 1 {
            strip(vec![p.r.clone()])?
        } else {
            make_polar_part_along(p.b, 1, vec![p.r.clone()], Vec::new(), 1, u.clone())?
        };
        top[i] = Some(nb.add_part(&part, p.label).upper[0]);
        target[i] = Some(main.lower[slot]);
    }
    let zeros: Vec<usize> = (0..specs.len()).filter(|&i| i != p1 && specs[i].r.is_zero()).collect();
    if !zeros.is_empty() {
        let host = *neg.first().or(pos.first()).ok_or_else(|| Error::Unsupported("all residues vanish".into()))?;
        let host_neg = sign(&specs[host].r) < 0;
        let x = if host_neg { -&specs[host].r } else { specs[host].r.clone() };
        for &j in &zeros {
            if specs[j].b < 2 {
                return Err(Error::InvalidTuple(format!("simple pole {} has zero residue", j)));
            }
            let part = make_polar_part_along(specs[j].b, 1, vec![x.clone()], vec![x.clone()], 1, u.clone())?;
            let at = nb.add_part(&part, specs[j].label);
            if host_neg {
                nb.join(top[host].unwrap(), at.upper[0], 0);
                top[host] = Some(at.lower[0]);
            } else {
                nb.join(top[host].unwrap(), at.lower[0], 0);
                top[host] = Some(at.upper[0]);
            }
        }
    }
    for i in 0..specs.len() {
        if let (Some(a), Some(b)) = (top[i], target[i]) {
            nb.join(a, b, 0);
        }
    }
    nb.finish()
}

/// The k-th root of `x` closest to the positive real axis, exact when it lies in K.
pub fn principal_root(x: &QComplex, k: u32) -> Coord {
    let z = x.to_c64();
    let base = z.powf(1.0 / k as f64);
    let mut best = base;
    for j in 0..k {
        let c = base * Complex64::from_polar(1.0, 2.0 * core::f64::consts::PI * j as f64 / k as f64);
        let key = |w: Complex64| (w.arg().abs(), -w.arg());
        if key(c) < key(best) {
            best = c;
        }
    }
    for q in x.exact_roots(k) {
        if (q.to_c64() - best).norm() <= 1e-9 * best.norm().max(1.0) {
            return Coord::Exact(q);
        }
    }
    Coord::approx(best)
}

/// Single-zero k-differential with at least one pole of order not divisible
/// by k: one such part collects every other boundary on its lower line.
fn nondivisible_net(s: &Stratum, r: &[QComplex]) -> Result<FlatSurface, Error> {
    let k = s.k;
    let poles = s.poles();
    let slots = residue_slots(s);
    let nondiv: Vec<usize> = (0..poles.len()).filter(|&i| poles[i].kind == PoleKind::NonDivisible).collect();
    let p1 = nondiv[0];
    let one = Coord::one();
    let mut nb = NetBuilder::new(k);
    let mut lines: Vec<(Coord, EdgeRef)> = Vec::new();
    for &i in &nondiv[1..] {
        let part = make_polar_part_along((-poles[i].order) as u32, 1, vec![one.clone()], Vec::new(), k, one.clone())?;
        lines.push((one.clone(), nb.add_part(&part, Some(i)).upper[0]));
    }
    let mut zero_poles = Vec::new();
    for (i, p) in poles.iter().enumerate() {
        let Some(slot) = slots[i] else { continue };
        if r[slot].is_zero() {
            if p.kind == PoleKind::MinusK {
                return Err(Error::InvalidTuple("zero residue at a pole of order −k".into()));
            }
            zero_poles.push(i);
            continue;
        }
        let root = principal_root(&r[slot], k);
        let b = (-p.order) as u32;
        let part = if p.kind == PoleKind::MinusK {
            make_polar_part(k, 0, vec![root.clone()], Vec::new(), k)?
        } else {
            make_polar_part_along(b, 1, vec![root.clone()], Vec::new(), k, root.clone())?
        };
        lines.push((root, nb.add_part(&part, Some(i)).upper[0]));
    }
    if lines.is_empty() {
        return Err(Error::Unsupported("a single non-divisible pole and no residue to glue".into()));
    }
    if !zero_poles.is_empty() {
        let (x, mut cur) = lines[0].clone();
        for &j in &zero_poles {
            let b = (-poles[j].order) as u32;
            let part = make_polar_part_along(b, 1, vec![x.clone()], vec![x.clone()], k, x.clone())?;
            let at = nb.add_part(&part, Some(j));
            nb.join(cur, at.lower[0], 0);
            cur = at.upper[0];
        }
        lines[0].1 = cur;
    }
    lines.sort_by(|a, b| a.0.arg().partial_cmp(&b.0.arg()).unwrap_or(core::cmp::Ordering::Equal));
    let w: Vec<Coord> = lines.iter().map(|l| l.0.clone()).collect();
    let main = make_polar_part_along((-poles[p1].order) as u32, 1, Vec::new(), w, k, one)?;
    let at = nb.add_part(&main, Some(p1));
    for (j, (_, e)) in lines.iter().enumerate() {
        nb.join(*e, at.lower[j], 0);
    }
    nb.finish()
}

fn connection_from_residues(r: &[QComplex]) -> Result<FlatSurface, Error> {
    let (u, coords) = collinear_frame(r).ok_or_else(|| Error::InvalidTuple("residues are not collinear".into()))?;
    let zero = QReal::zero();
    let (mut pos, mut neg, mut pl, mut nl) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    for (i, c) in coords.into_iter().enumerate() {
        if c > zero {
            pos.push(c);
            pl.push(Some(i));
        } else {
            neg.push(-c);
            nl.push(Some(i));
        }
    }
    let g = ConnectionSearch::new()
        .find(&pos, &neg)
        .ok_or_else(|| Error::Unsupported("no connection graph: the residues are not realizable".into()))?;
    connection_net(&g, &u, &pl, &nl)
}

/// Witness for a genus-zero stratum with a single zero. Pole labels index
/// `s.poles()`.
pub fn build_one_zero_genus0(s: &Stratum, r: &[QComplex]) -> Result<FlatSurface, Error> {
    if let Some(v) = validate_stratum(s).first() {
        return Err(Error::InvalidStratum(format!("{:?}", v)));
    }
    if s.genus != 0 || s.n_zeros() != 1 {
        return Err(Error::Unsupported(format!("{} is not a genus-zero stratum with one zero", s)));
    }
    if !residue_tuple_valid(s, r)? {
        return Err(Error::InvalidTuple("tuple is not in the residue space".into()));
    }
    if s.k >= 2 {
        if s.count_nondivisible() == 0 {
            return Err(Error::Unsupported("single-zero k-differential without a non-divisible pole".into()));
        }
        return nondivisible_net(s, r);
    }
    let poles = s.poles();
    let slots = residue_slots(s);
    let specs: Vec<PoleSpec> = poles
        .iter()
        .enumerate()
        .map(|(i, p)| PoleSpec { b: (-p.order) as u32, r: Coord::Exact(r[slots[i].unwrap()].clone()), label: Some(i) })
        .collect();
    match collinear_frame(r) {
        None => residual_polygon_net(&specs),
        Some((u, _)) => {
            if specs.iter().any(|p| p.b >= 2) {
                degenerate_polygon_net(&specs, &Coord::Exact(u))
            } else {
                connection_from_residues(r)
            }
        }
    }
}

/// The net of the residual-polygon example with poles of orders −2, −2, −3, −1
/// and residues 0, i, −1−i, 1. These orders add up to −8, so the glued zero has
/// order 6 rather than a member of a genus-zero stratum with a zero of order 4.
/// Labels follow the canonical pole order of (6; −3, −2, −2, −1).
pub fn polygon_example_net() -> Result<FlatSurface, Error> {
    let specs = [
        PoleSpec { b: 2, r: Coord::zero(), label: Some(1) },
        PoleSpec { b: 2, r: Coord::int(0, 1), label: Some(2) },
        PoleSpec { b: 3, r: Coord::int(-1, -1), label: Some(0) },
        PoleSpec { b: 1, r: Coord::one(), label: Some(3) },
    ];
    residual_polygon_net(&specs)
}
