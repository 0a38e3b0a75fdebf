use alloc::vec::Vec;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::strata::Stratum;
use crate::Error;

/// Genus-zero k-differential c·Π(z − x_i)^{m_i}(dz)^k; the point at infinity
/// is marked with `None` and its order is implied by the others.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Configuration {
    pub k: u32,
    pub orders: Vec<i64>,
    pub points: Vec<Option<Complex64>>,
    pub scale: Complex64,
}

/// Indices placed at ∞, 0 and 1, and the remaining free points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gauge {
    pub infinity: usize,
    pub zero: Option<usize>,
    pub one: Option<usize>,
    pub free: Vec<usize>,
}

impl Gauge {
    /// A zero goes to ∞ when there is one, otherwise the last pole.
    pub fn standard(orders: &[i64], k: u32) -> Self {
        let n = orders.len();
        let infinity = (0..n).find(|&i| orders[i] > -(k as i64)).unwrap_or(n - 1);
        let rest: Vec<usize> = (0..n).filter(|&i| i != infinity).collect();
        Gauge {
            infinity,
            zero: rest.first().copied(),
            one: rest.get(1).copied(),
            free: rest.iter().skip(2).copied().collect(),
        }
    }
}

impl Configuration {
    /// Configuration for `s` with the standard gauge; `free` lists the positions
    /// of the non-gauge points.
    pub fn new(s: &Stratum, free: &[Complex64], scale: Complex64) -> Result<Self, Error> {
        if s.genus != 0 {
            return Err(Error::Precondition("configurations describe genus zero only".into()));
        }
        crate::strata::require_valid(s)?;
        let orders = s.canonical_orders();
        if orders.is_empty() {
            return Err(Error::InvalidStratum("no marked points".into()));
        }
        let g = Gauge::standard(&orders, s.k);
        if free.len() != g.free.len() {
            return Err(Error::LengthMismatch { expected: g.free.len(), got: free.len() });
        }
        let mut points = alloc::vec![Some(Complex64::new(0.0, 0.0)); orders.len()];
        points[g.infinity] = None;
        if let Some(i) = g.one {
            points[i] = Some(Complex64::new(1.0, 0.0));
        }
        for (&i, &z) in g.free.iter().zip(free) {
            points[i] = Some(z);
        }
        Ok(Configuration { k: s.k, orders, points, scale })
    }

    pub fn stratum(&self) -> Stratum {
        Stratum::new(self.k, 0, self.orders.clone())
    }

    /// Residue slot of each point, following the canonical pole order.
    pub fn slots(&self) -> Vec<Option<usize>> {
        let k = self.k as i64;
        let mut next = 0;
        self.orders
            .iter()
            .map(|&m| {
                if m <= -k && (-m) % k == 0 {
                    next += 1;
                    Some(next - 1)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn finite(&self) -> impl Iterator<Item = (usize, Complex64)> + '_ {
        self.points.iter().enumerate().filter_map(|(i, p)| p.map(|z| (i, z)))
    }

    /// Coefficient c·Π(z − x_i)^{m_i} at a point away from the marked ones.
    pub fn coefficient(&self, z: Complex64) -> Complex64 {
        self.finite().fold(self.scale, |acc, (i, x)| acc * (z - x).powi(self.orders[i] as i32))
    }

    /// Smallest distance between two finite marked points.
    pub fn min_separation(&self) -> f64 {
        let pts: Vec<Complex64> = self.finite().map(|(_, z)| z).collect();
        let mut best = f64::INFINITY;
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                best = best.min((pts[i] - pts[j]).norm());
            }
        }
        best
    }

    /// The same differential in the coordinate sending points `a`, `b`, `c`
    /// to ∞, 0 and 1.
    pub fn regauge(&self, a: usize, b: usize, c: usize) -> Result<Self, Error> {
        let n = self.points.len();
        if a >= n || b >= n || c >= n || a == b || b == c || a == c {
            return Err(Error::Precondition("regauge needs three distinct points".into()));
        }
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        let (za, zb, zc) = (self.points[a], self.points[b], self.points[c]);
        let (al, be, ga, de) = match (za, zb, zc) {
            (None, Some(zb), Some(zc)) => (one, -zb, zero, zc - zb),
            (Some(za), None, Some(zc)) => (zero, zc - za, one, -za),
            (Some(za), Some(zb), None) => (one, -zb, one, -za),
            (Some(za), Some(zb), Some(zc)) => (zc - za, -zb * (zc - za), zc - zb, -za * (zc - zb)),
            _ => return Err(Error::Precondition("two points at infinity".into())),
        };
        let map = |z: Option<Complex64>| -> Option<Complex64> {
            match z {
                None => (ga.norm() > 0.0).then(|| al / ga),
                Some(z) => {
                    let den = ga * z + de;
                    (den.norm() > 0.0).then(|| (al * z + be) / den)
                }
            }
        };
        let points: Vec<Option<Complex64>> =
            (0..n).map(|i| if i == a { None } else { map(self.points[i]) }).collect();
        if points.iter().enumerate().any(|(i, p)| i != a && p.is_none()) {
            return Err(Error::Numeric("Möbius map sent a second point to infinity".into()));
        }
        let det = al * de - be * ga;
        let mut z0 = Complex64::new(0.37, 0.61);
        let mut w0 = map(Some(z0));
        for step in 0..64 {
            let far = self.finite().all(|(_, x)| (z0 - x).norm() > 1e-3);
            if far && w0.is_some() {
                break;
            }
            z0 += Complex64::new(0.113 * (step + 1) as f64, -0.071);
            w0 = map(Some(z0));
        }
        let w0 = w0.ok_or_else(|| Error::Numeric("no regular point for regauging".into()))?;
        let dz_dw = (ga * z0 + de).powi(2) / det;
        let mut out = Configuration { k: self.k, orders: self.orders.clone(), points, scale: one };
        let base = out.coefficient(w0);
        out.scale = self.coefficient(z0) * dz_dw.powi(self.k as i32) / base;
        Ok(out)
    }
}
