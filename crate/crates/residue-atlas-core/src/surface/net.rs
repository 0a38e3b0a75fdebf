use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::coord::{Coord, Scalar};
use crate::field::QReal;
use crate::Error;

const ANGLE_TOL: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Corner {
    Finite(Coord),
    /// Point at infinity reached by a ray leaving in direction `out` and left by
    /// a ray coming back in direction `into`. `pole` labels the pole it belongs to.
    Infinite {
        out: Coord,
        into: Coord,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        pole: Option<usize>,
    },
}

impl Corner {
    pub fn point(&self) -> Option<&Coord> {
        match self {
            Corner::Finite(p) => Some(p),
            Corner::Infinite { .. } => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Corner::Infinite { .. })
    }
}

/// A piece of the net: a simple, counterclockwise boundary, possibly passing
/// through infinity. Edge `j` runs from corner `j` to corner `j+1`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Piece {
    #[serde(default)]
    pub name: String,
    pub corners: Vec<Corner>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeKind {
    Segment,
    /// From a finite corner towards infinity.
    RayOut,
    /// From infinity to a finite corner.
    RayIn,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "(usize, usize)", into = "(usize, usize)")]
pub struct EdgeRef {
    pub piece: usize,
    pub edge: usize,
}

impl From<(usize, usize)> for EdgeRef {
    fn from((piece, edge): (usize, usize)) -> Self {
        EdgeRef { piece, edge }
    }
}

impl From<EdgeRef> for (usize, usize) {
    fn from(e: EdgeRef) -> Self {
        (e.piece, e.edge)
    }
}

/// Edge `a` is glued to edge `b` by `z ↦ e^{2πi t/k} z + c`, reversing orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "(EdgeRef, EdgeRef, u32)", into = "(EdgeRef, EdgeRef, u32)")]
pub struct Identification {
    pub a: EdgeRef,
    pub b: EdgeRef,
    pub t: u32,
}

impl From<(EdgeRef, EdgeRef, u32)> for Identification {
    fn from((a, b, t): (EdgeRef, EdgeRef, u32)) -> Self {
        Identification { a, b, t }
    }
}

impl From<Identification> for (EdgeRef, EdgeRef, u32) {
    fn from(i: Identification) -> Self {
        (i.a, i.b, i.t)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FlatSurface {
    pub k: u32,
    pub pieces: Vec<Piece>,
    pub identifications: Vec<Identification>,
}

/// Class of identified finite corners.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConePoint {
    pub corners: Vec<(usize, usize)>,
    pub angle: f64,
    pub order: i64,
}

/// Class of identified infinite corners.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PoleEnd {
    pub corners: Vec<(usize, usize)>,
    pub order: i64,
    pub label: Option<usize>,
    /// Rotation exponent of the holonomy around the end, modulo k.
    pub rotation: u32,
    /// Period of a loop around the end; `None` when the holonomy is nontrivial.
    pub period: Option<Coord>,
    /// k-residue: the k-th power of the period, or zero.
    pub residue: Coord,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Invariants {
    pub genus: u32,
    pub cone_points: Vec<ConePoint>,
    pub poles: Vec<PoleEnd>,
}

impl Invariants {
    /// Orders of the finite points, largest first; order 0 points included.
    pub fn orders(&self) -> Vec<i64> {
        let mut o: Vec<i64> = self.cone_points.iter().map(|c| c.order).collect();
        o.sort_unstable_by(|a, b| b.cmp(a));
        o
    }

    pub fn pole_orders(&self) -> Vec<i64> {
        let mut o: Vec<i64> = self.poles.iter().map(|c| c.order).collect();
        o.sort_unstable();
        o
    }

    pub fn order_sum(&self) -> i64 {
        self.cone_points.iter().map(|c| c.order).sum::<i64>() + self.poles.iter().map(|p| p.order).sum::<i64>()
    }
}

fn arg(z: Complex64) -> f64 {
    let a = libm::atan2(z.im, z.re);
    if a <= -PI {
        PI
    } else {
        a
    }
}

/// Counterclockwise angle from `u` to `v`, in [0, 2π).
fn ccw_angle(u: &Coord, v: &Coord) -> f64 {
    if u.same_ray(v) {
        return 0.0;
    }
    let mut a = arg(v.to_c64() * u.to_c64().conj());
    if a < 0.0 {
        a += 2.0 * PI;
    }
    if a >= 2.0 * PI - 1e-12 {
        0.0
    } else {
        a
    }
}

struct Line {
    p: Coord,
    d: Coord,
    bounded: bool,
}

fn le(x: &Scalar, y: &Scalar) -> bool {
    y.sub(x).signum() >= 0
}

fn lines_meet(l1: &Line, l2: &Line) -> bool {
    let w = &l2.p - &l1.p;
    let denom = l1.d.cross(&l2.d);
    let ds = denom.signum();
    if ds != 0 {
        let s_num = w.cross(&l2.d);
        let u_num = w.cross(&l1.d);
        let in_range = |num: &Scalar, bounded: bool| {
            if num.signum() * ds < 0 {
                return false;
            }
            !bounded || num.sub(&denom).signum() * ds <= 0
        };
        return in_range(&s_num, l1.bounded) && in_range(&u_num, l2.bounded);
    }
    if w.cross(&l1.d).signum() != 0 {
        return false;
    }
    let dd = l1.d.norm_sqr();
    let a = match w.dot(&l1.d).div(&dd) {
        Some(a) => a,
        None => return false,
    };
    let c = match l2.d.dot(&l1.d).div(&dd) {
        Some(c) => c,
        None => return false,
    };
    let zero = Scalar::Exact(QReal::zero());
    let one = Scalar::Exact(QReal::one());
    let (lo2, hi2) = if l2.bounded {
        let end = a.add(&c);
        if c.signum() > 0 {
            (Some(a), Some(end))
        } else {
            (Some(end), Some(a))
        }
    } else if c.signum() > 0 {
        (Some(a), None)
    } else {
        (None, Some(a))
    };
    let hi1 = if l1.bounded { Some(one) } else { None };
    let left_ok = match (&lo2, &hi1) {
        (Some(x), Some(y)) => le(x, y),
        _ => true,
    };
    let right_ok = match &hi2 {
        Some(y) => le(&zero, y),
        None => true,
    };
    left_ok && right_ok
}

impl Piece {
    pub fn new(name: &str, corners: Vec<Corner>) -> Self {
        Piece { name: name.into(), corners }
    }

    pub fn polygon(name: &str, pts: Vec<Coord>) -> Self {
        Piece::new(name, pts.into_iter().map(Corner::Finite).collect())
    }

    pub fn n_edges(&self) -> usize {
        self.corners.len()
    }

    fn corner(&self, j: usize) -> &Corner {
        let n = self.corners.len();
        &self.corners[j % n]
    }

    pub fn edge_kind(&self, j: usize) -> Result<EdgeKind, Error> {
        match (self.corner(j), self.corner(j + 1)) {
            (Corner::Finite(_), Corner::Finite(_)) => Ok(EdgeKind::Segment),
            (Corner::Finite(_), Corner::Infinite { .. }) => Ok(EdgeKind::RayOut),
            (Corner::Infinite { .. }, Corner::Finite(_)) => Ok(EdgeKind::RayIn),
            _ => Err(Error::InvalidSurface(format!("piece '{}': consecutive corners at infinity", self.name))),
        }
    }

    /// Segment vector, or the direction of travel along a ray.
    pub fn edge_vector(&self, j: usize) -> Result<Coord, Error> {
        Ok(match (self.corner(j), self.corner(j + 1)) {
            (Corner::Finite(p), Corner::Finite(q)) => q - p,
            (Corner::Finite(_), Corner::Infinite { out, .. }) => out.clone(),
            (Corner::Infinite { into, .. }, Corner::Finite(_)) => into.clone(),
            _ => return Err(Error::InvalidSurface(format!("piece '{}': consecutive corners at infinity", self.name))),
        })
    }

    fn line(&self, j: usize) -> Line {
        match (self.corner(j), self.corner(j + 1)) {
            (Corner::Finite(p), Corner::Finite(q)) => Line { p: p.clone(), d: q - p, bounded: true },
            (Corner::Finite(p), Corner::Infinite { out, .. }) => Line { p: p.clone(), d: out.clone(), bounded: false },
            (Corner::Infinite { into, .. }, Corner::Finite(q)) => Line { p: q.clone(), d: -into, bounded: false },
            _ => unreachable!(),
        }
    }

    /// Interior angle at a finite corner, in ]0, 2π[.
    pub fn interior_angle(&self, j: usize) -> Result<f64, Error> {
        let n = self.corners.len();
        let prev = self.edge_vector(j + n - 1)?;
        let next = self.edge_vector(j)?;
        if prev.cross(&next).signum() == 0 && prev.dot(&next).signum() < 0 {
            return Err(Error::InvalidSurface(format!("piece '{}': boundary folds back at corner {}", self.name, j)));
        }
        Ok(PI - arg(next.to_c64() * prev.to_c64().conj()))
    }

    /// Angle swept at infinity between the outgoing and the incoming ray.
    pub fn arc_at_infinity(&self, j: usize) -> Option<f64> {
        match self.corner(j) {
            Corner::Infinite { out, into, .. } => Some(ccw_angle(out, &-into)),
            Corner::Finite(_) => None,
        }
    }

    /// Checks that the boundary is simple and counterclockwise.
    pub fn check(&self) -> Result<(), Error> {
        let n = self.corners.len();
        let bad = |m: &str| Error::InvalidSurface(format!("piece '{}': {}", self.name, m));
        let infinite = self.corners.iter().filter(|c| c.is_infinite()).count();
        if n < 2 || (infinite == 0 && n < 3) || infinite == n {
            return Err(bad("too few corners"));
        }
        for j in 0..n {
            if self.edge_vector(j)?.is_zero() {
                return Err(bad("degenerate edge"));
            }
        }
        let mut turning = 0.0;
        for j in 0..n {
            turning += match self.corner(j) {
                Corner::Finite(_) => PI - self.interior_angle(j)?,
                Corner::Infinite { .. } => PI + self.arc_at_infinity(j).unwrap(),
            };
        }
        if (turning - 2.0 * PI).abs() > ANGLE_TOL {
            return Err(bad("boundary is not a simple counterclockwise curve"));
        }
        let lines: Vec<Line> = (0..n).map(|j| self.line(j)).collect();
        for i in 0..n {
            for j in i + 1..n {
                let shares_finite = |a: usize, b: usize| (a + 1) % n == b && !self.corner(b).is_infinite();
                if shares_finite(i, j) || shares_finite(j, i) {
                    continue;
                }
                if lines_meet(&lines[i], &lines[j]) {
                    return Err(bad(&format!("edges {} and {} intersect", i, j)));
                }
            }
        }
        Ok(())
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

fn integral(x: f64, what: &str) -> Result<i64, Error> {
    let r = libm::round(x);
    if (x - r).abs() > ANGLE_TOL {
        return Err(Error::InvalidSurface(format!("{} gives non-integral order {:.9}", what, x)));
    }
    Ok(r as i64)
}

/// Validates pieces and identifications and returns the glued surface.
pub fn glue(k: u32, pieces: Vec<Piece>, identifications: Vec<Identification>) -> Result<FlatSurface, Error> {
    let s = FlatSurface { k, pieces, identifications };
    s.validate()?;
    Ok(s)
}

impl FlatSurface {
    fn partner_table(&self) -> Result<Vec<Vec<Option<(usize, bool)>>>, Error> {
        let mut table: Vec<Vec<Option<(usize, bool)>>> = self.pieces.iter().map(|p| vec![None; p.n_edges()]).collect();
        for (idx, id) in self.identifications.iter().enumerate() {
            for (e, is_a) in [(id.a, true), (id.b, false)] {
                let slot = table
                    .get_mut(e.piece)
                    .and_then(|row| row.get_mut(e.edge))
                    .ok_or_else(|| Error::InvalidSurface(format!("edge ({}, {}) does not exist", e.piece, e.edge)))?;
                if slot.is_some() {
                    return Err(Error::InvalidSurface(format!("edge ({}, {}) glued twice", e.piece, e.edge)));
                }
                *slot = Some((idx, is_a));
            }
        }
        Ok(table)
    }

    /// Checks every piece, the edge pairing and its congruence, connectedness and
    /// integrality of all cone angles.
    pub fn validate(&self) -> Result<(), Error> {
        if self.k == 0 {
            return Err(Error::InvalidSurface("k must be positive".into()));
        }
        if self.pieces.is_empty() {
            return Err(Error::InvalidSurface("no pieces".into()));
        }
        for p in &self.pieces {
            p.check()?;
        }
        let table = self.partner_table()?;
        for (pi, row) in table.iter().enumerate() {
            for (e, slot) in row.iter().enumerate() {
                if slot.is_none() {
                    return Err(Error::InvalidSurface(format!("edge ({}, {}) is unmatched", pi, e)));
                }
            }
        }
        for id in &self.identifications {
            if id.t >= self.k {
                return Err(Error::InvalidSurface(format!("rotation index {} not below k = {}", id.t, self.k)));
            }
            if id.a == id.b {
                return Err(Error::InvalidSurface("edge glued to itself".into()));
            }
            let (pa, pb) = (&self.pieces[id.a.piece], &self.pieces[id.b.piece]);
            let (ka, kb) = (pa.edge_kind(id.a.edge)?, pb.edge_kind(id.b.edge)?);
            let image = -(&Coord::rot(self.k, id.t as i64) * &pa.edge_vector(id.a.edge)?);
            let vb = pb.edge_vector(id.b.edge)?;
            let ok = match (ka, kb) {
                (EdgeKind::Segment, EdgeKind::Segment) => image == vb,
                (EdgeKind::RayOut, EdgeKind::RayIn) | (EdgeKind::RayIn, EdgeKind::RayOut) => image.same_ray(&vb),
                _ => false,
            };
            if !ok {
                return Err(Error::InvalidSurface(format!(
                    "edges ({}, {}) and ({}, {}) are not congruent under rotation {}",
                    id.a.piece, id.a.edge, id.b.piece, id.b.edge, id.t
                )));
            }
        }
        let mut uf = UnionFind::new(self.pieces.len());
        for id in &self.identifications {
            uf.union(id.a.piece, id.b.piece);
        }
        if (0..self.pieces.len()).any(|p| uf.find(p) != 0) {
            return Err(Error::InvalidSurface("net is not connected".into()));
        }
        self.invariants().map(|_| ())
    }

    fn corner_classes(&self) -> Vec<Vec<(usize, usize)>> {
        let offsets: Vec<usize> = self
            .pieces
            .iter()
            .scan(0, |acc, p| {
                let o = *acc;
                *acc += p.corners.len();
                Some(o)
            })
            .collect();
        let total: usize = self.pieces.iter().map(|p| p.corners.len()).sum();
        let idx = |p: usize, c: usize| offsets[p] + c % self.pieces[p].corners.len();
        let mut uf = UnionFind::new(total);
        for id in &self.identifications {
            let (a, b) = (id.a, id.b);
            uf.union(idx(a.piece, a.edge), idx(b.piece, b.edge + 1));
            uf.union(idx(a.piece, a.edge + 1), idx(b.piece, b.edge));
        }
        let mut root_slot: Vec<Option<usize>> = vec![None; total];
        let mut classes: Vec<Vec<(usize, usize)>> = Vec::new();
        for (p, piece) in self.pieces.iter().enumerate() {
            for c in 0..piece.corners.len() {
                let r = uf.find(idx(p, c));
                match root_slot[r] {
                    Some(s) => classes[s].push((p, c)),
                    None => {
                        root_slot[r] = Some(classes.len());
                        classes.push(vec![(p, c)]);
                    }
                }
            }
        }
        classes
    }

    /// Genus, cone points and pole ends of the glued surface.
    pub fn invariants(&self) -> Result<Invariants, Error> {
        let table = self.partner_table()?;
        let k = self.k as f64;
        let mut cone_points = Vec::new();
        let mut poles = Vec::new();
        let classes = self.corner_classes();
        for class in &classes {
            let infinite: Vec<bool> = class.iter().map(|&(p, c)| self.pieces[p].corners[c].is_infinite()).collect();
            if infinite.iter().any(|&x| x) != infinite.iter().all(|&x| x) {
                return Err(Error::InvalidSurface("finite corner identified with a point at infinity".into()));
            }
            if !infinite[0] {
                let mut angle = 0.0;
                for &(p, c) in class {
                    angle += self.pieces[p].interior_angle(c)?;
                }
                let order = integral(k * angle / (2.0 * PI) - k, "cone angle")?;
                cone_points.push(ConePoint { corners: class.clone(), angle, order });
            } else {
                let mut arc = 0.0;
                for &(p, c) in class {
                    arc += self.pieces[p].arc_at_infinity(c).unwrap();
                }
                let order = integral(-k * arc / (2.0 * PI) - k, "angle at infinity")?;
                poles.push(self.pole_end(class, order, &table)?);
            }
        }
        let v = classes.len() as i64;
        let e = self.identifications.len() as i64;
        let f = self.pieces.len() as i64;
        let chi = v - e + f;
        if chi > 2 || chi % 2 != 0 {
            return Err(Error::InvalidSurface(format!("Euler characteristic {} is impossible", chi)));
        }
        Ok(Invariants { genus: ((2 - chi) / 2) as u32, cone_points, poles })
    }

    fn pole_end(
        &self,
        class: &[(usize, usize)],
        order: i64,
        table: &[Vec<Option<(usize, bool)>>],
    ) -> Result<PoleEnd, Error> {
        let k = self.k as i64;
        let start = class[0];
        let mut cur = start;
        let mut rho = Coord::one();
        let mut rotation: i64 = 0;
        let mut period = Coord::zero();
        let mut visited = 0usize;
        let mut label = None;
        loop {
            let (p, j) = cur;
            let piece = &self.pieces[p];
            let n = piece.corners.len();
            if let Corner::Infinite { pole: Some(l), .. } = &piece.corners[j] {
                label.get_or_insert(*l);
            }
            let a = piece.corners[(j + n - 1) % n].point().unwrap();
            let b = piece.corners[(j + 1) % n].point().unwrap();
            period = &period + &(&rho * &(a - b));
            let out_edge = (j + n - 1) % n;
            let (idx, is_a) = table[p][out_edge].unwrap();
            let id = &self.identifications[idx];
            let (other, t) = if is_a { (id.b, -(id.t as i64)) } else { (id.a, id.t as i64) };
            rho = &rho * &Coord::rot(self.k, t);
            rotation += t;
            cur = (other.piece, other.edge);
            visited += 1;
            if cur == start {
                break;
            }
            if visited > class.len() {
                return Err(Error::InvalidSurface("rays around a point at infinity do not close up".into()));
            }
        }
        if visited != class.len() {
            return Err(Error::InvalidSurface("point at infinity is not a single end".into()));
        }
        let rotation = rotation.rem_euclid(k) as u32;
        let (period, residue) = if rotation == 0 {
            let r = period.pow(self.k);
            (Some(period), r)
        } else {
            (None, Coord::zero())
        };
        Ok(PoleEnd { corners: class.to_vec(), order, label, rotation, period, residue })
    }

    /// Finite points with their total angles and orders.
    pub fn cone_angles(&self) -> Result<Vec<ConePoint>, Error> {
        Ok(self.invariants()?.cone_points)
    }

    pub fn genus(&self) -> Result<u32, Error> {
        Ok(self.invariants()?.genus)
    }

    /// Ends at infinity with their orders and k-residues.
    pub fn pole_ends(&self) -> Result<Vec<PoleEnd>, Error> {
        Ok(self.invariants()?.poles)
    }
}
