use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use super::config::Configuration;
use crate::Error;

const START_POINTS: usize = 256;
const MAX_POINTS: usize = 1 << 16;
const AGREE: f64 = 1e-10;
const MIN_RADIUS: f64 = 1e-8;

/// Residues and their derivatives: `d_points[i][j]` is ∂R_i/∂x_j (zero for the
/// point at infinity) and `d_scale[i]` is ∂R_i/∂c.
#[derive(Clone, Debug)]
pub struct ResidueJacobian {
    pub residues: Vec<Complex64>,
    pub d_points: Vec<Vec<Complex64>>,
    pub d_scale: Vec<Complex64>,
}

/// Residues (k = 1) or k-residues of `c`, in canonical pole order.
pub fn residues_of_configuration(c: &Configuration) -> Result<Vec<Complex64>, Error> {
    Ok(residue_jacobian(c)?.residues)
}

pub fn residue_jacobian(c: &Configuration) -> Result<ResidueJacobian, Error> {
    if c.scale.norm() == 0.0 || !c.scale.is_finite() {
        return Err(Error::Numeric("scale must be finite and nonzero".into()));
    }
    if c.points.iter().filter(|p| p.is_none()).count() > 1 {
        return Err(Error::Precondition("at most one point at infinity".into()));
    }
    let slots = c.slots();
    let len = slots.iter().flatten().count();
    let n = c.points.len();
    let mut out = ResidueJacobian {
        residues: vec![Complex64::new(0.0, 0.0); len],
        d_points: vec![vec![Complex64::new(0.0, 0.0); n]; len],
        d_scale: vec![Complex64::new(0.0, 0.0); len],
    };
    let mut at_infinity = None;
    for (j, slot) in slots.iter().enumerate() {
        let Some(slot) = *slot else { continue };
        match c.points[j] {
            None => at_infinity = Some(slot),
            Some(x) => {
                let (r, dp) = if c.k == 1 { series_residue(c, j, x) } else { contour_residue(c, Some(j))? };
                out.d_scale[slot] = r / c.scale;
                out.residues[slot] = r;
                out.d_points[slot] = dp;
            }
        }
    }
    if let Some(slot) = at_infinity {
        if c.k == 1 {
            for other in 0..len {
                if other == slot {
                    continue;
                }
                out.residues[slot] = out.residues[slot] - out.residues[other];
                out.d_scale[slot] = out.d_scale[slot] - out.d_scale[other];
                for j in 0..n {
                    out.d_points[slot][j] = out.d_points[slot][j] - out.d_points[other][j];
                }
            }
        } else {
            let (r, dp) = contour_residue(c, None)?;
            out.d_scale[slot] = r / c.scale;
            out.residues[slot] = r;
            out.d_points[slot] = dp;
        }
    }
    Ok(out)
}

/// Taylor coefficients 0..=len of Π(d_i + h)^{m_i}/Π d_i^{m_i}, through the
/// logarithm Σ m_i log(1 + h/d_i).
fn log_exp_series(terms: &[(Complex64, i64)], len: usize) -> Vec<Complex64> {
    let mut l = vec![Complex64::new(0.0, 0.0); len + 1];
    for &(d, m) in terms {
        let inv = d.inv();
        let mut p = inv;
        for (n, ln) in l.iter_mut().enumerate().skip(1) {
            let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
            *ln += p * (sign * m as f64 / n as f64);
            p *= inv;
        }
    }
    let mut e = vec![Complex64::new(0.0, 0.0); len + 1];
    e[0] = Complex64::new(1.0, 0.0);
    for n in 1..=len {
        let mut acc = Complex64::new(0.0, 0.0);
        for q in 1..=n {
            acc += l[q] * e[n - q] * q as f64;
        }
        e[n] = acc / n as f64;
    }
    e
}

/// Abelian residue at the finite pole `j`: the coefficient of h^{b−1} in the
/// expansion of the other factors at x_j.
fn series_residue(c: &Configuration, j: usize, xj: Complex64) -> (Complex64, Vec<Complex64>) {
    let b = (-c.orders[j]) as usize;
    let others: Vec<(usize, Complex64, i64)> =
        c.finite().filter(|&(i, _)| i != j).map(|(i, x)| (i, xj - x, c.orders[i])).collect();
    let terms: Vec<(Complex64, i64)> = others.iter().map(|&(_, d, m)| (d, m)).collect();
    let e = log_exp_series(&terms, b);
    let lead = others.iter().fold(c.scale, |acc, &(_, d, m)| acc * d.powi(m as i32));
    let g: Vec<Complex64> = e.iter().map(|x| x * lead).collect();
    let r = g[b - 1];
    let mut dp = vec![Complex64::new(0.0, 0.0); c.points.len()];
    dp[j] = g[b] * b as f64;
    for &(i, d, m) in &others {
        // ∂g/∂x_i = g·(−m/(x_j − x_i + h)); coefficient of h^{b−1}
        let inv = d.inv();
        let mut acc = Complex64::new(0.0, 0.0);
        let mut p = inv;
        for q in 0..b {
            let sign = if q % 2 == 0 { 1.0 } else { -1.0 };
            acc += g[b - 1 - q] * p * sign;
            p *= inv;
        }
        dp[i] = acc * (-(m as f64));
    }
    (r, dp)
}

fn nearest_root(target: Complex64, prev: Complex64, k: u32) -> Complex64 {
    let base = (target.ln() / k as f64).exp();
    let mut best = base;
    let mut dist = f64::INFINITY;
    for t in 0..k {
        let cand = base * Complex64::from_polar(1.0, 2.0 * PI * t as f64 / k as f64);
        let d = (cand - prev).norm();
        if d < dist {
            dist = d;
            best = cand;
        }
    }
    best
}

struct Holonomy {
    value: Complex64,
    d_points: Vec<Complex64>,
}

fn holonomy(c: &Configuration, center: Complex64, radius: f64, points: usize, outward: bool) -> Holonomy {
    let k = c.k as f64;
    let n = c.points.len();
    let finite: Vec<(usize, Complex64)> = c.finite().collect();
    let mut value = Complex64::new(0.0, 0.0);
    let mut d_points = vec![Complex64::new(0.0, 0.0); n];
    let mut prev: Option<Complex64> = None;
    let step = 2.0 * PI / points as f64;
    for t in 0..points {
        let e = Complex64::from_polar(1.0, step * t as f64);
        let z = center + e * radius;
        let f = c.coefficient(z);
        let w = match prev {
            None => (f.ln() / k).exp(),
            Some(p) => nearest_root(f, p, c.k),
        };
        prev = Some(w);
        let dz = Complex64::new(0.0, 1.0) * e * radius * step;
        value += w * dz;
        for &(i, x) in &finite {
            d_points[i] += w * dz * (-(c.orders[i] as f64) / (k * (z - x)));
        }
    }
    let norm = if outward { Complex64::new(0.0, -2.0 * PI) } else { Complex64::new(0.0, 2.0 * PI) };
    Holonomy { value: value / norm, d_points: d_points.into_iter().map(|d| d / norm).collect() }
}

/// k-residue by integrating a continuous branch of ξ^{1/k} around the pole
/// `j` (or around ∞ when `None`), doubling the sample count until two
/// resolutions agree.
fn contour_residue(c: &Configuration, j: Option<usize>) -> Result<(Complex64, Vec<Complex64>), Error> {
    let (center, radius) = match j {
        Some(j) => {
            let xj = c.points[j].unwrap();
            let gap = c.finite().filter(|&(i, _)| i != j).map(|(_, x)| (x - xj).norm()).fold(f64::INFINITY, f64::min);
            let r = if gap.is_finite() { 0.4 * gap } else { 1.0 };
            if r < MIN_RADIUS {
                return Err(Error::Numeric("marked points too close for a residue contour".into()));
            }
            (xj, r)
        }
        None => {
            let far = c.finite().map(|(_, x)| x.norm()).fold(0.0, f64::max);
            (Complex64::new(0.0, 0.0), 1.5 * far + 1.0)
        }
    };
    let mut points = START_POINTS;
    let mut h = holonomy(c, center, radius, points, j.is_none());
    loop {
        points *= 2;
        let finer = holonomy(c, center, radius, points, j.is_none());
        let agree = (finer.value - h.value).norm() <= AGREE * finer.value.norm().max(1.0);
        h = finer;
        if agree {
            break;
        }
        if points >= MAX_POINTS {
            return Err(Error::Numeric("contour integral did not converge".into()));
        }
    }
    let k = c.k as i32;
    let r = h.value.powi(k);
    let factor = h.value.powi(k - 1) * c.k as f64;
    Ok((r, h.d_points.iter().map(|d| d * factor).collect()))
}
