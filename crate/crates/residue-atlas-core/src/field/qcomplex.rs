use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::qreal::QReal;
use super::rationalize::rationalize_within;

/// Element of K = Q(i, √3), which holds every 12th root of unity.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QComplex {
    pub re: QReal,
    pub im: QReal,
}

impl QComplex {
    pub fn new(re: QReal, im: QReal) -> Self {
        QComplex { re, im }
    }

    pub fn int(re: i64, im: i64) -> Self {
        QComplex { re: QReal::int(re), im: QReal::int(im) }
    }

    pub fn rational(re: BigRational, im: BigRational) -> Self {
        QComplex { re: QReal::rational(re), im: QReal::rational(im) }
    }

    pub fn from_real(re: QReal) -> Self {
        QComplex { re, im: QReal::zero() }
    }

    pub fn zero() -> Self {
        Self::int(0, 0)
    }

    pub fn one() -> Self {
        Self::int(1, 0)
    }

    pub fn i() -> Self {
        Self::int(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// True when both parts lie in Q(i).
    pub fn is_gaussian_rational(&self) -> bool {
        self.re.is_rational() && self.im.is_rational()
    }

    pub fn conj(&self) -> Self {
        QComplex { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn norm_sqr(&self) -> QReal {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        let n = self.norm_sqr().inv()?;
        Some(QComplex { re: &self.re * &n, im: -(&self.im * &n) })
    }

    pub fn div(&self, other: &Self) -> Option<Self> {
        Some(self * &other.inv()?)
    }

    pub fn scale(&self, q: &QReal) -> Self {
        QComplex { re: &self.re * q, im: &self.im * q }
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = QComplex::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }

    pub fn powi(&self, n: i64) -> Option<Self> {
        if n >= 0 {
            Some(self.pow(n as u32))
        } else {
            self.inv().map(|x| x.pow((-n) as u32))
        }
    }

    /// Im(conj(self)·other), the signed area spanned by the two vectors.
    pub fn cross(&self, other: &Self) -> QReal {
        &self.re * &other.im - &self.im * &other.re
    }

    /// Re(conj(self)·other).
    pub fn dot(&self, other: &Self) -> QReal {
        &self.re * &other.re + &self.im * &other.im
    }

    /// Both vectors nonzero and pointing in the same direction.
    pub fn same_ray(&self, other: &Self) -> bool {
        !self.is_zero() && !other.is_zero() && self.cross(other).is_zero() && self.dot(other).signum() > 0
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    /// Primitive root `e^{2πi t/k}` when it lies in K, i.e. when k divides 12.
    pub fn root_of_unity(k: u32, t: i64) -> Option<Self> {
        if k == 0 || 12 % k != 0 {
            return None;
        }
        let step = (12 / k) as i64;
        let e = (t * step).rem_euclid(12) as u32;
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let z12 = QComplex {
            re: QReal::new(BigRational::zero(), half.clone()),
            im: QReal::rational(half),
        };
        Some(z12.pow(e))
    }

    /// Exact d-th roots of `self` that happen to lie in K.
    pub fn exact_roots(&self, d: u32) -> alloc::vec::Vec<Self> {
        let mut out = alloc::vec::Vec::new();
        if d == 0 {
            return out;
        }
        if self.is_zero() {
            out.push(QComplex::zero());
            return out;
        }
        let z = self.to_c64();
        let base = z.powf(1.0 / d as f64);
        for j in 0..d {
            let cand = base * Complex64::from_polar(1.0, 2.0 * core::f64::consts::PI * j as f64 / d as f64);
            for q in field_candidates(cand) {
                if q.pow(d) == *self && !out.contains(&q) {
                    out.push(q);
                    break;
                }
            }
        }
        out
    }
}

/// Elements of K of the form `ζ₁₂^j · (√3)^e · q`, q ∈ Q(i) of small height,
/// numerically close to `z`.
pub fn field_candidates(z: Complex64) -> alloc::vec::Vec<QComplex> {
    let mut out = alloc::vec::Vec::new();
    let s3 = QComplex::from_real(QReal::sqrt3());
    for e in 0..2 {
        for j in 0..12i64 {
            let unit = QComplex::root_of_unity(12, j).unwrap();
            let mut scale = unit.to_c64();
            if e == 1 {
                scale *= libm::sqrt(3.0);
            }
            let w = z / scale;
            let tol = 1e-9 * w.norm();
            if let (Some(re), Some(im)) = (rationalize_within(w.re, 1_000_000, tol), rationalize_within(w.im, 1_000_000, tol)) {
                let mut q = QComplex::rational(re, im) * unit;
                if e == 1 {
                    q = q * s3.clone();
                }
                if !out.contains(&q) {
                    out.push(q);
                }
            }
        }
    }
    out
}

impl PartialOrd for QComplex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order on (re, im); used only to canonicalize multisets.
impl Ord for QComplex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.re.cmp(&other.re).then_with(|| self.im.cmp(&other.im))
    }
}

impl fmt::Display for QComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.re, self.im)
    }
}

impl<'a> Add<&'a QComplex> for &'a QComplex {
    type Output = QComplex;
    fn add(self, o: &'a QComplex) -> QComplex {
        QComplex { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl<'a> Sub<&'a QComplex> for &'a QComplex {
    type Output = QComplex;
    fn sub(self, o: &'a QComplex) -> QComplex {
        QComplex { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl<'a> Mul<&'a QComplex> for &'a QComplex {
    type Output = QComplex;
    fn mul(self, o: &'a QComplex) -> QComplex {
        QComplex {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl Add for QComplex {
    type Output = QComplex;
    fn add(self, o: QComplex) -> QComplex {
        &self + &o
    }
}

impl Sub for QComplex {
    type Output = QComplex;
    fn sub(self, o: QComplex) -> QComplex {
        &self - &o
    }
}

impl Mul for QComplex {
    type Output = QComplex;
    fn mul(self, o: QComplex) -> QComplex {
        &self * &o
    }
}

impl Neg for QComplex {
    type Output = QComplex;
    fn neg(self) -> QComplex {
        QComplex { re: -self.re, im: -self.im }
    }
}

impl Neg for &QComplex {
    type Output = QComplex;
    fn neg(self) -> QComplex {
        -self.clone()
    }
}

impl Zero for QComplex {
    fn zero() -> Self {
        QComplex::zero()
    }
    fn is_zero(&self) -> bool {
        QComplex::is_zero(self)
    }
}

impl One for QComplex {
    fn one() -> Self {
        QComplex::one()
    }
}
