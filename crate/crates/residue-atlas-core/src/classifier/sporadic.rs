use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::pattern::proportional_unordered;
use crate::field::{QComplex, QReal};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Even,
    Odd,
}

/// One stratum of k-differentials (k ≥ 3, genus 0, only poles of order −k)
/// whose residue map misses finitely many lines.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SporadicEntry {
    pub item: u32,
    /// Fixed k, or `None` for every k ≥ 3 (restricted by `k_parity`).
    pub k: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k_parity: Option<Parity>,
    pub zeros: Vec<i64>,
    pub poles: usize,
    /// Tuples whose nonzero multiples (in any order) are not realizable.
    pub excluded: Vec<Vec<QComplex>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SporadicTable {
    pub version: u32,
    pub entries: Vec<SporadicEntry>,
}

impl SporadicEntry {
    pub fn matches_stratum(&self, k: u32, zeros: &[i64], poles: usize) -> bool {
        if k < 3 || poles != self.poles {
            return false;
        }
        match self.k {
            Some(kk) if kk != k => return false,
            _ => {}
        }
        match self.k_parity {
            Some(Parity::Even) if !k.is_multiple_of(2) => return false,
            Some(Parity::Odd) if k % 2 != 1 => return false,
            _ => {}
        }
        let mut a = self.zeros.clone();
        let mut b = zeros.to_vec();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    }

    pub fn excludes(&self, r: &[QComplex]) -> bool {
        self.excluded.iter().any(|p| proportional_unordered(r, p))
    }
}

impl SporadicTable {
    /// First entry that matches the stratum.
    pub fn lookup(&self, k: u32, zeros: &[i64], poles: usize) -> Option<&SporadicEntry> {
        self.entries.iter().find(|e| e.matches_stratum(k, zeros, poles))
    }
}

fn c(re: i64, im: i64) -> QComplex {
    QComplex::int(re, im)
}

fn ones(n: usize) -> Vec<QComplex> {
    vec![c(1, 0); n]
}

fn with(mut v: Vec<QComplex>, tail: &[QComplex]) -> Vec<QComplex> {
    v.extend_from_slice(tail);
    v
}

fn entry(item: u32, k: u32, zeros: &[i64], poles: usize, excluded: Vec<Vec<QComplex>>) -> SporadicEntry {
    SporadicEntry { item, k: Some(k), k_parity: None, zeros: zeros.to_vec(), poles, excluded }
}

pub fn builtin_table() -> SporadicTable {
    let three_i_sqrt3 = QComplex::new(QReal::zero(), QReal::sqrt3().scale(&num_rational::BigRational::from_integer(3.into())));
    let entries = vec![
        SporadicEntry {
            item: 1,
            k: None,
            k_parity: Some(Parity::Even),
            zeros: vec![-1, 1],
            poles: 2,
            excluded: vec![vec![c(1, 0), c(1, 0)]],
        },
        SporadicEntry {
            item: 1,
            k: None,
            k_parity: Some(Parity::Odd),
            zeros: vec![-1, 1],
            poles: 2,
            excluded: vec![vec![c(1, 0), c(-1, 0)]],
        },
        entry(2, 6, &[-1, 7], 3, vec![ones(3)]),
        entry(3, 4, &[-1, 9], 4, vec![ones(4)]),
        entry(3, 6, &[-1, 13], 4, vec![ones(4)]),
        entry(4, 4, &[5, -1], 3, vec![vec![c(1, 0), c(1, 0), c(-4, 0)]]),
        entry(5, 3, &[-1, 4], 3, vec![ones(3), vec![c(1, 0), c(-1, 0), three_i_sqrt3]]),
        entry(6, 3, &[1, 2], 3, vec![ones(3)]),
        entry(7, 4, &[3, 5], 4, vec![ones(4)]),
        entry(8, 3, &[2, 7], 5, vec![ones(5), with(ones(4), &[c(-1, 0)])]),
        entry(9, 4, &[3, 13], 6, vec![ones(6)]),
        entry(9, 3, &[5, 7], 6, vec![ones(6)]),
        entry(10, 3, &[2, 4], 4, vec![vec![c(1, 0), c(1, 0), c(-1, 0), c(-1, 0)]]),
        entry(11, 3, &[2, 10], 6, vec![with(ones(3), &[c(-1, 0), c(-1, 0), c(-1, 0)]), ones(6)]),
    ];
    SporadicTable { version: 1, entries }
}
