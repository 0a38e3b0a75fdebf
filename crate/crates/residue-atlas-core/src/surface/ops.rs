use alloc::format;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::strata::Stratum;
use crate::Error;

fn zero_at(s: &Stratum, idx: usize) -> Result<i64, Error> {
    let a0 = *s
        .orders
        .get(idx)
        .ok_or_else(|| Error::Precondition(format!("no order at index {}", idx)))?;
    if s.is_pole(a0) {
        return Err(Error::Precondition(format!("order {} at index {} is a pole", a0, idx)));
    }
    Ok(a0)
}

/// Replaces the zero at `idx` of `s.orders` by zeros of orders `parts`.
/// The flag is false when the local splitting is obstructed: k ≥ 2, two parts,
/// k | a0 and k ∤ gcd(parts).
pub fn break_zero(s: &Stratum, idx: usize, parts: &[i64]) -> Result<(Stratum, bool), Error> {
    let a0 = zero_at(s, idx)?;
    if parts.is_empty() {
        return Err(Error::Precondition("no parts".into()));
    }
    let total: i64 = parts.iter().sum();
    if total != a0 {
        return Err(Error::Precondition(format!("parts sum to {} instead of {}", total, a0)));
    }
    let k = s.k as i64;
    if let Some(&a) = parts.iter().find(|&&a| a <= -k) {
        return Err(Error::Precondition(format!("part {} is not a zero order", a)));
    }
    let g = parts.iter().fold(0i64, |g, &a| g.gcd(&a));
    let obstructed = k >= 2 && parts.len() == 2 && a0 % k == 0 && g % k != 0;
    let mut orders: Vec<i64> = s.orders.clone();
    orders.remove(idx);
    orders.splice(idx..idx, parts.iter().copied());
    Ok((Stratum::new(s.k, s.genus, orders), !obstructed))
}

/// Sews a handle at the zero `idx`: genus + 1 and the order grows by 2k.
pub fn sew_handle(s: &Stratum, idx: usize) -> Result<Stratum, Error> {
    zero_at(s, idx)?;
    let mut out = s.clone();
    out.genus += 1;
    out.orders[idx] += 2 * s.k as i64;
    Ok(out)
}
