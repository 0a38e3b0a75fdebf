use alloc::format;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::coord::Coord;
use super::net::{glue, Corner, EdgeRef, FlatSurface, Identification, Piece};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PolarKind {
    /// Half-infinite cylinder of a simple pole.
    AbelianSimple,
    AbelianHigher,
    /// Order kℓ; built as the abelian part of order ℓ.
    KDivisible { ell: u32 },
    /// Order ℓk + r̄ with 0 < r̄ < k.
    KNonDivisible { ell: u32, rbar: u32 },
}

/// Flat neighbourhood of a single pole, bounded by the broken lines `v` (upper)
/// and `w` (lower). `dir` orients the half-planes.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolarPart {
    pub order: u32,
    pub tau: u32,
    pub v: Vec<Coord>,
    pub w: Vec<Coord>,
    pub dir: Coord,
    pub k: u32,
    pub kind: PolarKind,
}

/// Pieces and internal gluings of a part, with its free boundary segments.
/// `upper[i]` carries the vector `v[i]`, `lower[j]` carries `−w[j]`.
pub struct PartNet {
    pub pieces: Vec<Piece>,
    pub internal: Vec<Identification>,
    pub upper: Vec<EdgeRef>,
    pub lower: Vec<EdgeRef>,
}

fn inf(out: Coord, into: Coord) -> Corner {
    Corner::Infinite { out, into, pole: None }
}

fn chain(start: Coord, steps: &[Coord]) -> Vec<Coord> {
    let mut pts = Vec::with_capacity(steps.len() + 1);
    pts.push(start);
    for s in steps {
        let next = pts.last().unwrap() + s;
        pts.push(next);
    }
    pts
}

fn upper_domain(name: &str, dir: &Coord, v: &[Coord]) -> Piece {
    let mut corners = Vec::with_capacity(v.len() + 2);
    corners.push(inf(dir.clone(), dir.clone()));
    corners.extend(chain(Coord::zero(), v).into_iter().map(Corner::Finite));
    Piece::new(name, corners)
}

fn lower_domain(name: &str, dir: &Coord, w: &[Coord]) -> Piece {
    let mut corners = Vec::with_capacity(w.len() + 2);
    corners.push(inf(-dir, -dir));
    let mut pts = chain(Coord::zero(), w);
    pts.reverse();
    corners.extend(pts.into_iter().map(Corner::Finite));
    Piece::new(name, corners)
}

fn id(a: (usize, usize), b: (usize, usize), t: u32) -> Identification {
    Identification { a: a.into(), b: b.into(), t }
}

/// Argument of `z` relative to `dir`, in ]−π, π].
fn rel_arg(z: &Coord, dir: &Coord) -> f64 {
    (z * &dir.conj()).arg()
}

fn monotone(xs: &[Coord], dir: &Coord, decreasing: bool) -> bool {
    xs.windows(2).all(|p| {
        let (a, b) = (rel_arg(&p[0], dir), rel_arg(&p[1], dir));
        if decreasing {
            b <= a + 1e-12
        } else {
            b + 1e-12 >= a
        }
    })
}

/// Builds and validates a polar part of order `order` (the pole has order −`order`).
pub fn make_polar_part(order: u32, tau: u32, v: Vec<Coord>, w: Vec<Coord>, k: u32) -> Result<PolarPart, Error> {
    let dir = v.first().or(w.first()).cloned().unwrap_or_else(Coord::one);
    make_polar_part_along(order, tau, v, w, k, dir)
}

/// As [`make_polar_part`], with an explicit direction for the half-planes.
pub fn make_polar_part_along(
    order: u32,
    tau: u32,
    v: Vec<Coord>,
    w: Vec<Coord>,
    k: u32,
    dir: Coord,
) -> Result<PolarPart, Error> {
    if k == 0 || order == 0 {
        return Err(Error::Precondition("order and k must be positive".into()));
    }
    if dir.is_zero() || v.iter().chain(w.iter()).any(Coord::is_zero) {
        return Err(Error::Precondition("boundary vectors must be nonzero".into()));
    }
    let kind = if order.is_multiple_of(k) {
        let ell = order / k;
        match (k, ell) {
            (1, 1) => PolarKind::AbelianSimple,
            (1, _) => PolarKind::AbelianHigher,
            _ => PolarKind::KDivisible { ell },
        }
    } else if order > k {
        PolarKind::KNonDivisible { ell: order / k, rbar: order % k }
    } else {
        return Err(Error::Precondition(format!("order −{} is not a pole of a {}-differential", order, k)));
    };
    let ell = order / k;
    match kind {
        PolarKind::AbelianSimple => {
            if v.is_empty() || !w.is_empty() {
                return Err(Error::Precondition("a simple pole part takes a nonempty upper line only".into()));
            }
        }
        PolarKind::KDivisible { ell: 1 } => {
            if v.is_empty() || !w.is_empty() {
                return Err(Error::Precondition("an order −k part takes a nonempty upper line only".into()));
            }
        }
        PolarKind::AbelianHigher | PolarKind::KDivisible { .. } => {
            if tau < 1 || tau + 1 > ell {
                return Err(Error::Precondition(format!("type {} outside 1..={}", tau, ell - 1)));
            }
        }
        PolarKind::KNonDivisible { .. } => {
            if !v.is_empty() && !w.is_empty() {
                return Err(Error::Precondition("a non-divisible part takes an upper or a lower line, not both".into()));
            }
        }
    }
    if !monotone(&v, &dir, true) || !monotone(&w, &dir, false) {
        return Err(Error::Precondition("upper arguments must decrease and lower arguments increase".into()));
    }
    let part = PolarPart { order, tau, v, w, dir, k, kind };
    for p in part.net().pieces {
        p.check()?;
    }
    Ok(part)
}

impl PolarPart {
    /// Σv − Σw.
    pub fn period(&self) -> Coord {
        let sv = self.v.iter().fold(Coord::zero(), |a, x| &a + x);
        let sw = self.w.iter().fold(Coord::zero(), |a, x| &a + x);
        &sv - &sw
    }

    /// Residue contribution: the period, its k-th power, or 0 for non-divisible orders.
    pub fn residue(&self) -> Coord {
        match self.kind {
            PolarKind::KNonDivisible { .. } => Coord::zero(),
            _ => self.period().pow(self.k),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.period().is_zero()
    }

    pub fn net(&self) -> PartNet {
        match self.kind {
            PolarKind::AbelianSimple | PolarKind::KDivisible { ell: 1 } => self.strip_net(),
            PolarKind::AbelianHigher => self.half_planes_net(self.order),
            PolarKind::KDivisible { ell } => self.half_planes_net(ell),
            PolarKind::KNonDivisible { ell, rbar } => self.nondivisible_net(ell, rbar),
        }
    }

    fn strip_net(&self) -> PartNet {
        let pts = chain(Coord::zero(), &self.v);
        let n = self.v.len();
        let span = &pts[n] - &pts[0];
        let up = &Coord::int(0, 1) * &span;
        let mut corners: Vec<Corner> = pts.into_iter().map(Corner::Finite).collect();
        corners.push(inf(up.clone(), -up));
        PartNet {
            pieces: alloc::vec![Piece::new("cylinder", corners)],
            internal: alloc::vec![id((0, n), (0, n + 1), 0)],
            upper: (0..n).map(|i| (0, i).into()).collect(),
            lower: Vec::new(),
        }
    }

    fn half_planes_net(&self, b: u32) -> PartNet {
        let (lv, lw) = (self.v.len(), self.w.len());
        let mut pieces = alloc::vec![upper_domain("D+", &self.dir, &self.v), lower_domain("D-", &self.dir, &self.w)];
        let mut internal = Vec::new();
        let mut cur = (1usize, lw + 1);
        for _ in 0..self.tau - 1 {
            let u = pieces.len();
            pieces.push(upper_domain("left-open upper", &self.dir, &[]));
            pieces.push(lower_domain("left-open lower", &self.dir, &[]));
            internal.push(id(cur, (u, 0), 0));
            internal.push(id((u, 1), (u + 1, 0), 0));
            cur = (u + 1, 1);
        }
        internal.push(id(cur, (0, 0), 0));
        let mut cur = (0usize, lv + 1);
        for _ in 0..b - 1 - self.tau {
            let l = pieces.len();
            pieces.push(lower_domain("right-open lower", &self.dir, &[]));
            pieces.push(upper_domain("right-open upper", &self.dir, &[]));
            internal.push(id(cur, (l, 0), 0));
            internal.push(id((l, 1), (l + 1, 0), 0));
            cur = (l + 1, 1);
        }
        internal.push(id(cur, (1, 0), 0));
        PartNet {
            pieces,
            internal,
            upper: (1..=lv).map(|i| (0, i).into()).collect(),
            lower: (0..lw).map(|j| (1, lw - j).into()).collect(),
        }
    }

    fn nondivisible_net(&self, ell: u32, rbar: u32) -> PartNet {
        let turn = Coord::rot(self.k, -(rbar as i64));
        let upper_side = self.w.is_empty();
        let (special, n) = if upper_side {
            let mut corners = alloc::vec![inf(-&(&turn * &self.dir), self.dir.clone())];
            corners.extend(chain(Coord::zero(), &self.v).into_iter().map(Corner::Finite));
            (Piece::new("angular sector", corners), self.v.len())
        } else {
            let mut corners = alloc::vec![inf(&turn * &self.dir, -&self.dir)];
            let mut pts = chain(Coord::zero(), &self.w);
            pts.reverse();
            corners.extend(pts.into_iter().map(Corner::Finite));
            (Piece::new("angular sector", corners), self.w.len())
        };
        let mut pieces = alloc::vec![special];
        let mut internal = Vec::new();
        let mut cur = (0usize, n + 1);
        let mut t = rbar;
        for _ in 0..ell - 1 {
            let first = pieces.len();
            if upper_side {
                pieces.push(upper_domain("left-open upper", &self.dir, &[]));
                pieces.push(lower_domain("left-open lower", &self.dir, &[]));
            } else {
                pieces.push(lower_domain("right-open lower", &self.dir, &[]));
                pieces.push(upper_domain("right-open upper", &self.dir, &[]));
            }
            internal.push(id(cur, (first, 0), t));
            internal.push(id((first, 1), (first + 1, 0), 0));
            cur = (first + 1, 1);
            t = 0;
        }
        internal.push(id(cur, (0, 0), t));
        let (upper, lower) = if upper_side {
            ((1..=n).map(|i| (0, i).into()).collect(), Vec::new())
        } else {
            (Vec::new(), (0..n).map(|j| (0, n - j).into()).collect())
        };
        PartNet { pieces, internal, upper, lower }
    }
}

/// Free boundary segments of a part added to a [`NetBuilder`].
#[derive(Clone, Debug)]
pub struct Attached {
    pub upper: Vec<EdgeRef>,
    pub lower: Vec<EdgeRef>,
}

/// Incremental assembly of pieces and gluings.
#[derive(Clone, Debug)]
pub struct NetBuilder {
    pub k: u32,
    pub pieces: Vec<Piece>,
    pub identifications: Vec<Identification>,
}

impl NetBuilder {
    pub fn new(k: u32) -> Self {
        NetBuilder { k, pieces: Vec::new(), identifications: Vec::new() }
    }

    pub fn add_piece(&mut self, p: Piece) -> usize {
        self.pieces.push(p);
        self.pieces.len() - 1
    }

    /// Adds a part, labelling its ends with `pole`.
    pub fn add_part(&mut self, part: &PolarPart, pole: Option<usize>) -> Attached {
        let net = part.net();
        let base = self.pieces.len();
        for mut p in net.pieces {
            for c in p.corners.iter_mut() {
                if let Corner::Infinite { pole: slot, .. } = c {
                    *slot = pole;
                }
            }
            self.pieces.push(p);
        }
        let shift = |e: EdgeRef| EdgeRef { piece: e.piece + base, edge: e.edge };
        for i in net.internal {
            self.identifications.push(Identification { a: shift(i.a), b: shift(i.b), t: i.t });
        }
        Attached { upper: net.upper.into_iter().map(shift).collect(), lower: net.lower.into_iter().map(shift).collect() }
    }

    pub fn join(&mut self, a: EdgeRef, b: EdgeRef, t: u32) {
        self.identifications.push(Identification { a, b, t });
    }

    pub fn finish(self) -> Result<FlatSurface, Error> {
        glue(self.k, self.pieces, self.identifications)
    }
}
