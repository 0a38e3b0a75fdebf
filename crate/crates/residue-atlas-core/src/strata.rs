//! Strata of k-differentials and their residue spaces.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::field::QComplex;
use crate::Error;

/// Orders of zeros and poles of a k-differential on a genus-g surface.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Stratum {
    pub k: u32,
    pub genus: u32,
    pub orders: Vec<i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PoleKind {
    /// Order −kℓ with ℓ ≥ 2.
    Divisible { ell: u32 },
    /// Order not divisible by k.
    NonDivisible,
    /// Order exactly −k.
    MinusK,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Pole {
    pub order: i64,
    pub kind: PoleKind,
}

impl Pole {
    pub fn carries_residue(&self) -> bool {
        !matches!(self.kind, PoleKind::NonDivisible)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    ZeroK,
    Degree { sum: i64, expected: i64 },
    NoOrders,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ZeroK => write!(f, "k must be positive"),
            Violation::Degree { sum, expected } => {
                write!(f, "orders sum to {} but k(2g-2) = {}", sum, expected)
            }
            Violation::NoOrders => write!(f, "genus 0 needs at least one order"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EmptyReason {
    /// (1,−1) in genus 1.
    GenusOneSimplePair,
    /// μ = ∅ with k ≥ 2: only k-th powers of abelian differentials.
    EmptySignature,
    /// Quadratic (4) or (3,1) in genus 2.
    QuadraticGenusTwo,
    /// Genus 0 with gcd(μ, k) > 1: every differential is a power.
    ForcedPower { d: u32 },
    /// Abelian with a single pole, which is simple.
    LoneSimplePole,
}

impl Stratum {
    pub fn new(k: u32, genus: u32, orders: Vec<i64>) -> Self {
        Stratum { k, genus, orders }
    }

    pub fn abelian(genus: u32, orders: Vec<i64>) -> Self {
        Self::new(1, genus, orders)
    }

    fn ki(&self) -> i64 {
        self.k as i64
    }

    pub fn is_pole(&self, m: i64) -> bool {
        m <= -self.ki()
    }

    /// Zeros (orders > −k) sorted in decreasing order.
    pub fn zeros(&self) -> Vec<i64> {
        let mut z: Vec<i64> = self.orders.iter().copied().filter(|&m| !self.is_pole(m)).collect();
        z.sort_unstable_by(|a, b| b.cmp(a));
        z
    }

    pub fn classify_pole(&self, m: i64) -> PoleKind {
        let k = self.ki();
        if m == -k {
            PoleKind::MinusK
        } else if (-m) % k == 0 {
            PoleKind::Divisible { ell: ((-m) / k) as u32 }
        } else {
            PoleKind::NonDivisible
        }
    }

    /// Poles in canonical order: divisible by decreasing ℓ, then
    /// non-divisible by decreasing |order|, then order −k.
    pub fn poles(&self) -> Vec<Pole> {
        let mut div = Vec::new();
        let mut non = Vec::new();
        let mut simple = Vec::new();
        for &m in self.orders.iter().filter(|&&m| self.is_pole(m)) {
            let kind = self.classify_pole(m);
            let p = Pole { order: m, kind };
            match kind {
                PoleKind::Divisible { .. } => div.push(p),
                PoleKind::NonDivisible => non.push(p),
                PoleKind::MinusK => simple.push(p),
            }
        }
        div.sort_by_key(|p| p.order);
        non.sort_by_key(|p| p.order);
        div.extend(non);
        div.extend(simple);
        div
    }

    /// Poles that carry a residue entry, in canonical order.
    pub fn residue_poles(&self) -> Vec<Pole> {
        self.poles().into_iter().filter(|p| p.carries_residue()).collect()
    }

    pub fn residue_len(&self) -> usize {
        self.residue_poles().len()
    }

    pub fn n_zeros(&self) -> usize {
        self.zeros().len()
    }

    pub fn count_divisible(&self) -> usize {
        self.poles().iter().filter(|p| matches!(p.kind, PoleKind::Divisible { .. })).count()
    }

    pub fn count_nondivisible(&self) -> usize {
        self.poles().iter().filter(|p| matches!(p.kind, PoleKind::NonDivisible)).count()
    }

    pub fn count_minus_k(&self) -> usize {
        self.poles().iter().filter(|p| matches!(p.kind, PoleKind::MinusK)).count()
    }

    pub fn is_holomorphic(&self) -> bool {
        self.orders.iter().all(|&m| !self.is_pole(m))
    }

    /// Canonical form: zeros decreasing, then poles in canonical order.
    pub fn canonical_orders(&self) -> Vec<i64> {
        let mut v = self.zeros();
        v.extend(self.poles().iter().map(|p| p.order));
        v
    }

    pub fn degree_target(&self) -> i64 {
        self.ki() * (2 * self.genus as i64 - 2)
    }
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={} g={} (", self.k, self.genus)?;
        for (i, m) in self.canonical_orders().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", m)?;
        }
        write!(f, ")")
    }
}

pub fn validate_stratum(s: &Stratum) -> Vec<Violation> {
    let mut out = Vec::new();
    if s.k == 0 {
        out.push(Violation::ZeroK);
        return out;
    }
    let sum: i64 = s.orders.iter().sum();
    if sum != s.degree_target() {
        out.push(Violation::Degree { sum, expected: s.degree_target() });
    }
    if s.genus == 0 && s.orders.is_empty() {
        out.push(Violation::NoOrders);
    }
    out
}

pub(crate) fn require_valid(s: &Stratum) -> Result<(), Error> {
    let v = validate_stratum(s);
    if v.is_empty() {
        Ok(())
    } else {
        let mut msg = String::new();
        for (i, x) in v.iter().enumerate() {
            if i > 0 {
                msg.push_str("; ");
            }
            msg.push_str(&alloc::format!("{}", x));
        }
        Err(Error::InvalidStratum(msg))
    }
}

/// gcd of all orders together with k.
pub fn forced_power_divisor(s: &Stratum) -> u32 {
    let mut g = s.k as i64;
    for &m in &s.orders {
        g = g.gcd(&m);
    }
    g.max(1) as u32
}

pub fn is_empty_stratum(s: &Stratum) -> Result<Option<EmptyReason>, Error> {
    require_valid(s)?;
    let mut sorted = s.orders.clone();
    sorted.sort_unstable();
    if s.is_holomorphic() {
        if s.k >= 2 && s.genus == 1 && sorted == [-1, 1] {
            return Ok(Some(EmptyReason::GenusOneSimplePair));
        }
        if s.k >= 2 && s.orders.is_empty() {
            return Ok(Some(EmptyReason::EmptySignature));
        }
        if s.k == 2 && (sorted == [4] || sorted == [1, 3]) {
            return Ok(Some(EmptyReason::QuadraticGenusTwo));
        }
    }
    if s.k == 1 {
        let poles: Vec<i64> = s.orders.iter().copied().filter(|&m| m < 0).collect();
        if poles == [-1] {
            return Ok(Some(EmptyReason::LoneSimplePole));
        }
    }
    if s.genus == 0 {
        let d = forced_power_divisor(s);
        if d > 1 {
            return Ok(Some(EmptyReason::ForcedPower { d }));
        }
    }
    Ok(None)
}

/// Error unless the tuple has one entry per residue-carrying pole; otherwise
/// whether it lies in the residue space.
pub fn residue_tuple_valid(s: &Stratum, r: &[QComplex]) -> Result<bool, Error> {
    require_valid(s)?;
    let poles = s.residue_poles();
    if poles.len() != r.len() {
        return Err(Error::LengthMismatch { expected: poles.len(), got: r.len() });
    }
    for (p, x) in poles.iter().zip(r) {
        if p.kind == PoleKind::MinusK && x.is_zero() {
            return Ok(false);
        }
    }
    if s.k == 1 {
        let mut sum = QComplex::zero();
        for x in r {
            sum = &sum + x;
        }
        if !sum.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
