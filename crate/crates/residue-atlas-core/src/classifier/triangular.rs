use crate::field::QComplex;
use crate::Error;

/// Whether square roots of the three numbers can be chosen to sum to zero,
/// via R₁²+R₂²+R₃²−2(R₁R₂+R₂R₃+R₃R₁) = 0.
pub fn is_triangular(r1: &QComplex, r2: &QComplex, r3: &QComplex) -> Result<bool, Error> {
    if r1.is_zero() || r2.is_zero() || r3.is_zero() {
        return Err(Error::InvalidTuple("triangularity needs nonzero entries".into()));
    }
    let sq = &(&(r1 * r1) + &(r2 * r2)) + &(r3 * r3);
    let mixed = &(&(r1 * r2) + &(r2 * r3)) + &(r3 * r1);
    let two = QComplex::int(2, 0);
    Ok((&sq - &(&two * &mixed)).is_zero())
}
