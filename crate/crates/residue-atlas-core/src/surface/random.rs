use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::coord::Coord;
use super::net::{EdgeKind, EdgeRef, Identification, Piece};
use super::polar::{make_polar_part, NetBuilder};

/// Unvalidated gluing data for property tests.
#[derive(Clone, Debug)]
pub struct RandomGluing {
    pub k: u32,
    pub pieces: Vec<Piece>,
    pub identifications: Vec<Identification>,
}

const KS: [u32; 5] = [1, 2, 3, 4, 6];

fn convex_hull(mut pts: Vec<(i64, i64)>) -> Vec<(i64, i64)> {
    pts.sort_unstable();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let cross = |o: (i64, i64), a: (i64, i64), b: (i64, i64)| (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0);
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for pass in 0..2 {
        let start = hull.len();
        let iter: Vec<(i64, i64)> = if pass == 0 { pts.clone() } else { pts.iter().rev().copied().collect() };
        for p in iter {
            while hull.len() >= start + 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    hull
}

fn random_polygon(rng: &mut ChaCha8Rng) -> Vec<Coord> {
    loop {
        let n = rng.gen_range(3..9);
        let pts: Vec<(i64, i64)> = (0..n).map(|_| (rng.gen_range(-6..=6), rng.gen_range(-6..=6))).collect();
        let hull = convex_hull(pts);
        if hull.len() >= 3 {
            return hull.into_iter().map(|(x, y)| Coord::int(x, y)).collect();
        }
    }
}

fn edge_vec(nb: &NetBuilder, e: EdgeRef) -> Coord {
    nb.pieces[e.piece].edge_vector(e.edge).expect("edge of a built piece")
}

fn is_segment(nb: &NetBuilder, e: EdgeRef) -> bool {
    nb.pieces[e.piece].edge_kind(e.edge) == Ok(EdgeKind::Segment)
}

/// Random gluing: pairs of rotated copies `A = ζ^u P` and `−ζ^t A` of a convex
/// polygon glued edge to edge and chained together, then random partner swaps
/// between congruent segments, optional half-infinite cylinders and trivial
/// polar parts cut into identifications, and rarely a corrupted rotation index.
pub fn random_gluing(seed: u64) -> RandomGluing {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = *KS.choose(&mut rng).unwrap();
    let mut nb = NetBuilder::new(k);
    let base = random_polygon(&mut rng);
    let n = base.len();
    let pairs = rng.gen_range(1..=3);
    for m in 0..pairs {
        let u = rng.gen_range(0..k);
        let p: Vec<Coord> = base.iter().map(|z| &Coord::rot(k, u as i64) * z).collect();
        let t = rng.gen_range(0..k);
        let turn = -&Coord::rot(k, t as i64);
        let q: Vec<Coord> = p.iter().map(|z| &turn * z).collect();
        let a = nb.add_piece(Piece::polygon("p", p));
        let b = nb.add_piece(Piece::polygon("q", q));
        for j in 0..n {
            nb.join(EdgeRef { piece: a, edge: j }, EdgeRef { piece: b, edge: j }, t);
        }
        if m > 0 {
            let e = rng.gen_range(0..n);
            swap(&mut nb, m * n + e, e);
        }
    }
    for _ in 0..rng.gen_range(0..6) {
        let ids = nb.identifications.len();
        let (i, j) = (rng.gen_range(0..ids), rng.gen_range(0..ids));
        if i != j {
            swap(&mut nb, i, j);
        }
    }
    for _ in 0..rng.gen_range(0..3) {
        let i = rng.gen_range(0..nb.identifications.len());
        let id = nb.identifications[i];
        if !is_segment(&nb, id.a) || !is_segment(&nb, id.b) {
            continue;
        }
        let va = edge_vec(&nb, id.a);
        if rng.gen_bool(0.5) {
            let vb = edge_vec(&nb, id.b);
            let (Ok(sa), Ok(sb)) =
                (make_polar_part(k, 0, vec![-&va], Vec::new(), k), make_polar_part(k, 0, vec![-&vb], Vec::new(), k))
            else {
                continue;
            };
            let ea = nb.add_part(&sa, None).upper[0];
            let eb = nb.add_part(&sb, None).upper[0];
            nb.identifications[i] = Identification { a: id.a, b: ea, t: 0 };
            nb.join(id.b, eb, 0);
        } else {
            let ell = rng.gen_range(2..4);
            let x = -&va;
            let Ok(part) = make_polar_part(k * ell, 1, vec![x.clone()], vec![x], k) else { continue };
            let at = nb.add_part(&part, None);
            nb.identifications[i] = Identification { a: id.a, b: at.upper[0], t: 0 };
            nb.join(id.b, at.lower[0], (k - id.t) % k);
        }
    }
    if k > 1 && rng.gen_bool(0.05) {
        let i = rng.gen_range(0..nb.identifications.len());
        nb.identifications[i].t = (nb.identifications[i].t + 1) % k;
    }
    RandomGluing { k, pieces: nb.pieces, identifications: nb.identifications }
}

/// Exchanges the partners of two identifications whose first edges agree up to rotation.
fn swap(nb: &mut NetBuilder, i: usize, j: usize) {
    let k = nb.k;
    let (a1, a2) = (nb.identifications[i].a, nb.identifications[j].a);
    if !is_segment(nb, a1) || !is_segment(nb, a2) {
        return;
    }
    let (v1, v2) = (edge_vec(nb, a1), edge_vec(nb, a2));
    if let Some(u) = (0..k).find(|&u| v2 == &Coord::rot(k, u as i64) * &v1) {
        let (b1, t1) = (nb.identifications[i].b, nb.identifications[i].t);
        let (b2, t2) = (nb.identifications[j].b, nb.identifications[j].t);
        nb.identifications[i] = Identification { a: a1, b: b2, t: (t2 + u) % k };
        nb.identifications[j] = Identification { a: a2, b: b1, t: (t1 + k - u) % k };
    }
}
