use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Element `a + b·√3` of the real subfield Q(√3).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QReal {
    pub a: BigRational,
    pub b: BigRational,
}

impl QReal {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        QReal { a, b }
    }

    pub fn rational(a: BigRational) -> Self {
        QReal { a, b: BigRational::zero() }
    }

    pub fn int(n: i64) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Self::rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn sqrt3() -> Self {
        QReal { a: BigRational::zero(), b: BigRational::one() }
    }

    pub fn zero() -> Self {
        Self::int(0)
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn signum(&self) -> i32 {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        let lhs = &self.a * &self.a;
        let rhs = &self.b * &self.b * BigRational::from_integer(BigInt::from(3));
        match lhs.cmp(&rhs) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// `a² − 3b²`, the norm down to Q.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.b * &self.b * BigRational::from_integer(BigInt::from(3))
    }

    pub fn conj(&self) -> Self {
        QReal { a: self.a.clone(), b: -self.b.clone() }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        let c = self.conj();
        Some(QReal { a: c.a / &n, b: c.b / n })
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        a + b * libm::sqrt(3.0)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        QReal { a: &self.a * q, b: &self.b * q }
    }
}

pub(crate) fn sign_of(q: &BigRational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

impl PartialOrd for QReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QReal {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }
}

impl fmt::Display for QReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}√3", self.b)
        } else {
            write!(f, "{}+{}√3", self.a, self.b)
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl<'a> $tr<&'a QReal> for &'a QReal {
            type Output = QReal;
            fn $m(self, rhs: &'a QReal) -> QReal {
                let f: fn(&QReal, &QReal) -> QReal = $body;
                f(self, rhs)
            }
        }
        impl $tr<QReal> for QReal {
            type Output = QReal;
            fn $m(self, rhs: QReal) -> QReal {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a QReal> for QReal {
            type Output = QReal;
            fn $m(self, rhs: &'a QReal) -> QReal {
                (&self).$m(rhs)
            }
        }
    };
}

forward_binop!(Add, add, |x, y| QReal { a: &x.a + &y.a, b: &x.b + &y.b });
forward_binop!(Sub, sub, |x, y| QReal { a: &x.a - &y.a, b: &x.b - &y.b });
forward_binop!(Mul, mul, |x, y| {
    let three = BigRational::from_integer(BigInt::from(3));
    QReal {
        a: &x.a * &y.a + &x.b * &y.b * three,
        b: &x.a * &y.b + &x.b * &y.a,
    }
});
forward_binop!(Div, div, |x, y| x * &y.inv().expect("division by zero in Q(√3)"));

impl Neg for QReal {
    type Output = QReal;
    fn neg(self) -> QReal {
        QReal { a: -self.a, b: -self.b }
    }
}

impl Neg for &QReal {
    type Output = QReal;
    fn neg(self) -> QReal {
        -self.clone()
    }
}

impl Zero for QReal {
    fn zero() -> Self {
        QReal::zero()
    }
    fn is_zero(&self) -> bool {
        QReal::is_zero(self)
    }
}
