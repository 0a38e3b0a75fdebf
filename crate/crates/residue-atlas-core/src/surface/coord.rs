use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::field::{QComplex, QReal};

const REL_TOL: f64 = 1e-12;

/// Point or vector of a net: exact in K = Q(i, √3) when possible, else a float pair.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Coord {
    Exact(QComplex),
    Approx([f64; 2]),
}

/// Real quantity derived from coordinates, exact when its inputs were.
#[derive(Clone, Debug)]
pub enum Scalar {
    Exact(QReal),
    Approx(f64, f64),
}

impl Scalar {
    /// Sign, with floats within `1e-12` of their magnitude scale counted as zero.
    pub fn signum(&self) -> i32 {
        match self {
            Scalar::Exact(q) => q.signum(),
            Scalar::Approx(x, scale) => {
                if x.abs() <= REL_TOL * scale.max(1.0) {
                    0
                } else if *x > 0.0 {
                    1
                } else {
                    -1
                }
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(q) => q.to_f64(),
            Scalar::Approx(x, _) => *x,
        }
    }

    fn scale(&self) -> f64 {
        match self {
            Scalar::Exact(q) => q.to_f64().abs(),
            Scalar::Approx(x, s) => x.abs().max(*s),
        }
    }

    pub fn add(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a + b),
            _ => Scalar::Approx(self.to_f64() + o.to_f64(), self.scale().max(o.scale())),
        }
    }

    pub fn sub(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a - b),
            _ => Scalar::Approx(self.to_f64() - o.to_f64(), self.scale().max(o.scale())),
        }
    }

    pub fn mul(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a * b),
            _ => Scalar::Approx(self.to_f64() * o.to_f64(), self.scale() * o.scale()),
        }
    }

    /// Quotient; `None` when the divisor vanishes.
    pub fn div(&self, o: &Scalar) -> Option<Scalar> {
        if o.signum() == 0 {
            return None;
        }
        Some(match (self, o) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a * &b.inv()?),
            _ => {
                let q = self.to_f64() / o.to_f64();
                Scalar::Approx(q, q.abs().max(self.scale() / o.scale().max(f64::MIN_POSITIVE)))
            }
        })
    }
}

impl Coord {
    pub fn zero() -> Self {
        Coord::Exact(QComplex::zero())
    }

    pub fn one() -> Self {
        Coord::Exact(QComplex::one())
    }

    pub fn int(re: i64, im: i64) -> Self {
        Coord::Exact(QComplex::int(re, im))
    }

    pub fn approx(z: Complex64) -> Self {
        Coord::Approx([z.re, z.im])
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Coord::Exact(_))
    }

    pub fn exact(&self) -> Option<&QComplex> {
        match self {
            Coord::Exact(q) => Some(q),
            Coord::Approx(_) => None,
        }
    }

    pub fn to_c64(&self) -> Complex64 {
        match self {
            Coord::Exact(q) => q.to_c64(),
            Coord::Approx([re, im]) => Complex64::new(*re, *im),
        }
    }

    fn magnitude(&self) -> f64 {
        self.to_c64().norm()
    }

    /// `e^{2πi t/k}`, exact when k divides 12.
    pub fn rot(k: u32, t: i64) -> Self {
        match QComplex::root_of_unity(k, t) {
            Some(z) => Coord::Exact(z),
            None => {
                let a = 2.0 * core::f64::consts::PI * (t.rem_euclid(k as i64)) as f64 / k as f64;
                Coord::approx(Complex64::from_polar(1.0, a))
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coord::Exact(q) => q.is_zero(),
            Coord::Approx(_) => self.magnitude() <= REL_TOL,
        }
    }

    pub fn conj(&self) -> Self {
        match self {
            Coord::Exact(q) => Coord::Exact(q.conj()),
            Coord::Approx([re, im]) => Coord::Approx([*re, -*im]),
        }
    }

    /// Im(conj(self)·o).
    pub fn cross(&self, o: &Coord) -> Scalar {
        match (self, o) {
            (Coord::Exact(a), Coord::Exact(b)) => Scalar::Exact(a.cross(b)),
            _ => {
                let (a, b) = (self.to_c64(), o.to_c64());
                Scalar::Approx(a.re * b.im - a.im * b.re, a.norm() * b.norm())
            }
        }
    }

    /// Re(conj(self)·o).
    pub fn dot(&self, o: &Coord) -> Scalar {
        match (self, o) {
            (Coord::Exact(a), Coord::Exact(b)) => Scalar::Exact(a.dot(b)),
            _ => {
                let (a, b) = (self.to_c64(), o.to_c64());
                Scalar::Approx(a.re * b.re + a.im * b.im, a.norm() * b.norm())
            }
        }
    }

    pub fn norm_sqr(&self) -> Scalar {
        self.dot(self)
    }

    /// Both nonzero and positively proportional.
    pub fn same_ray(&self, o: &Coord) -> bool {
        !self.is_zero() && !o.is_zero() && self.cross(o).signum() == 0 && self.dot(o).signum() > 0
    }

    pub fn pow(&self, n: u32) -> Self {
        match self {
            Coord::Exact(q) => Coord::Exact(q.pow(n)),
            Coord::Approx(_) => Coord::approx(self.to_c64().powu(n)),
        }
    }

    pub fn div(&self, o: &Coord) -> Option<Self> {
        if o.is_zero() {
            return None;
        }
        match (self, o) {
            (Coord::Exact(a), Coord::Exact(b)) => a.div(b).map(Coord::Exact),
            _ => Some(Coord::approx(self.to_c64() / o.to_c64())),
        }
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self * &Coord::int(n, 0)
    }

    /// Argument in ]−π, π].
    pub fn arg(&self) -> f64 {
        let z = self.to_c64();
        let a = libm::atan2(z.im, z.re);
        if a <= -core::f64::consts::PI {
            core::f64::consts::PI
        } else {
            a
        }
    }
}

impl From<QComplex> for Coord {
    fn from(q: QComplex) -> Self {
        Coord::Exact(q)
    }
}

impl PartialEq for Coord {
    fn eq(&self, o: &Self) -> bool {
        match (self, o) {
            (Coord::Exact(a), Coord::Exact(b)) => a == b,
            _ => {
                let (a, b) = (self.to_c64(), o.to_c64());
                (a - b).norm() <= REL_TOL * a.norm().max(b.norm()).max(1.0)
            }
        }
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coord::Exact(q) => write!(f, "{}", q),
            Coord::Approx([re, im]) => write!(f, "{:.17e}{:+.17e}i", re, im),
        }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $op:tt) => {
        impl<'a> $tr<&'a Coord> for &'a Coord {
            type Output = Coord;
            fn $m(self, o: &'a Coord) -> Coord {
                match (self, o) {
                    (Coord::Exact(a), Coord::Exact(b)) => Coord::Exact(a $op b),
                    _ => Coord::approx(self.to_c64() $op o.to_c64()),
                }
            }
        }
        impl $tr for Coord {
            type Output = Coord;
            fn $m(self, o: Coord) -> Coord {
                &self $op &o
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);

impl Neg for &Coord {
    type Output = Coord;
    fn neg(self) -> Coord {
        match self {
            Coord::Exact(a) => Coord::Exact(-a),
            Coord::Approx([re, im]) => Coord::Approx([-re, -im]),
        }
    }
}

impl Neg for Coord {
    type Output = Coord;
    fn neg(self) -> Coord {
        -&self
    }
}
