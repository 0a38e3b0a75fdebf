use num_bigint::BigInt;
use num_rational::BigRational;

/// Best rational approximation of `x` with denominator at most `max_den`,
/// the first convergent within a relative error of 1e-9.
pub fn rationalize(x: f64, max_den: i64) -> Option<BigRational> {
    rationalize_within(x, max_den, 1e-9 * x.abs())
}

/// First continued-fraction convergent of `x` within absolute error `tol`.
pub fn rationalize_within(x: f64, max_den: i64, tol: f64) -> Option<BigRational> {
    if !x.is_finite() {
        return None;
    }
    if x.abs() <= tol {
        return Some(BigRational::from_integer(BigInt::from(0)));
    }
    let (mut p0, mut q0, mut p1, mut q1) = (0i128, 1i128, 1i128, 0i128);
    let mut v = x;
    for _ in 0..64 {
        let a = libm::floor(v);
        if a.abs() > 1e18 {
            return None;
        }
        let ai = a as i128;
        let p2 = ai * p1 + p0;
        let q2 = ai * q1 + q0;
        if q2 > max_den as i128 {
            return None;
        }
        if (p2 as f64 / q2 as f64 - x).abs() <= tol {
            return Some(BigRational::new(BigInt::from(p2), BigInt::from(q2)));
        }
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        let frac = v - a;
        if frac == 0.0 {
            return None;
        }
        v = 1.0 / frac;
    }
    None
}
