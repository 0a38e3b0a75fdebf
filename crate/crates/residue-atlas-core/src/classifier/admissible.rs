use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::strata::{PoleKind, Stratum};
use crate::Error;

/// Which part of the decomposition a pole belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Part {
    S0,
    S11,
    S12,
    S13,
}

/// Combinatorial certificate that three zeros can carry a k-differential
/// with vanishing k-residues at every pole. Poles are indexed in canonical
/// order; `m2[t]`, `m3[t]` are the angle contributions of pole t to the two
/// non-special zeros.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibleDecomposition {
    pub special: usize,
    pub others: [usize; 2],
    pub zeros: Vec<i64>,
    pub ells: Vec<u32>,
    pub parts: Vec<Part>,
    pub m2: Vec<u32>,
    pub m3: Vec<u32>,
}

/// `a = k·l + ā` with −k < ā ≤ 0.
pub fn split_order(a: i64, k: i64) -> (i64, i64) {
    let l = -((-a).div_euclid(k));
    (l, a - k * l)
}

impl AdmissibleDecomposition {
    /// Recheck every constraint of the definition.
    pub fn is_valid(&self, k: u32) -> bool {
        let k = k as i64;
        let p = self.ells.len();
        if self.parts.len() != p || self.m2.len() != p || self.m3.len() != p || self.zeros.len() != 3 {
            return false;
        }
        let s0: Vec<usize> = (0..p).filter(|&t| self.parts[t] == Part::S0).collect();
        if s0.is_empty() || s0.len() > 2 {
            return false;
        }
        if s0.len() == 1 && self.parts.contains(&Part::S11) {
            return false;
        }
        let divisible: Vec<usize> = (0..3).filter(|&i| self.zeros[i] % k == 0).collect();
        if !divisible.is_empty() && !divisible.contains(&self.special) {
            return false;
        }
        for t in 0..p {
            let l = self.ells[t];
            let ok = match self.parts[t] {
                Part::S11 => self.m2[t] == 0 && self.m3[t] == 0,
                Part::S12 => self.m3[t] == 0 && (1..l).contains(&self.m2[t]),
                Part::S13 => self.m2[t] == 0 && (1..l).contains(&self.m3[t]),
                Part::S0 => true,
            };
            if !ok {
                return false;
            }
        }
        if s0.len() == 1 {
            let t = s0[0];
            if self.m2[t] + self.m3[t] > self.ells[t] - 1 {
                return false;
            }
        } else {
            let (t, u) = (s0[0], s0[1]);
            if self.m3[t] != 0 || self.m2[u] != 0 || self.m2[t] > self.ells[t] - 1 || self.m3[u] > self.ells[u] - 1 {
                return false;
            }
        }
        let l2 = split_order(self.zeros[self.others[0]], k).0;
        let l3 = split_order(self.zeros[self.others[1]], k).0;
        self.m2.iter().map(|&x| x as i64).sum::<i64>() == l2 && self.m3.iter().map(|&x| x as i64).sum::<i64>() == l3
    }
}

/// Fill `count` poles of a part with values in 1..ℓ−1 summing to `target`.
fn fill(ells: &[u32], idx: &[usize], target: i64) -> Option<Vec<(usize, u32)>> {
    let lo = idx.len() as i64;
    let hi: i64 = idx.iter().map(|&t| ells[t] as i64 - 1).sum();
    if target < lo || target > hi {
        return None;
    }
    let mut rem = target - lo;
    let mut out = Vec::new();
    for &t in idx {
        let extra = rem.min(ells[t] as i64 - 2);
        out.push((t, 1 + extra as u32));
        rem -= extra;
    }
    Some(out)
}

/// Exhaustive search for an admissible decomposition of a genus-0 stratum
/// with three zeros and p ≥ 2 poles, all of order divisible by k.
pub fn admissible_decomposition(s: &Stratum) -> Result<Option<AdmissibleDecomposition>, Error> {
    let zeros = s.zeros();
    let poles = s.poles();
    if s.genus != 0 || zeros.len() != 3 {
        return Err(Error::Precondition(format!("{} must have genus 0 and exactly three zeros", s)));
    }
    if poles.len() < 2 {
        return Err(Error::Precondition("needs at least two poles; one pole is settled by the zero count".into()));
    }
    let mut ells = Vec::with_capacity(poles.len());
    for p in &poles {
        match p.kind {
            PoleKind::Divisible { ell } => ells.push(ell),
            _ => return Err(Error::Precondition("every pole must have order -kℓ with ℓ >= 2".into())),
        }
    }
    let k = s.k as i64;
    let divisible: Vec<usize> = (0..3).filter(|&i| zeros[i] % k == 0).collect();
    let specials: Vec<usize> = if divisible.is_empty() { vec![0, 1, 2] } else { divisible };
    let p = poles.len();
    let total = 4usize.pow(p as u32);
    for special in specials {
        let others: Vec<usize> = (0..3).filter(|&i| i != special).collect();
        let l2 = split_order(zeros[others[0]], k).0;
        let l3 = split_order(zeros[others[1]], k).0;
        for code in 0..total {
            let mut parts = Vec::with_capacity(p);
            let mut c = code;
            for _ in 0..p {
                parts.push(match c % 4 {
                    0 => Part::S0,
                    1 => Part::S11,
                    2 => Part::S12,
                    _ => Part::S13,
                });
                c /= 4;
            }
            let s0: Vec<usize> = (0..p).filter(|&t| parts[t] == Part::S0).collect();
            if s0.is_empty() || s0.len() > 2 || (s0.len() == 1 && parts.contains(&Part::S11)) {
                continue;
            }
            let s12: Vec<usize> = (0..p).filter(|&t| parts[t] == Part::S12).collect();
            let s13: Vec<usize> = (0..p).filter(|&t| parts[t] == Part::S13).collect();
            let ranges: Vec<(u32, u32)> = if s0.len() == 1 {
                let l0 = ells[s0[0]];
                (0..l0).flat_map(|a| (0..l0 - a).map(move |b| (a, b))).collect()
            } else {
                let (la, lb) = (ells[s0[0]], ells[s0[1]]);
                (0..la).flat_map(|a| (0..lb).map(move |b| (a, b))).collect()
            };
            for (m02, m03) in ranges {
                let f2 = fill(&ells, &s12, l2 - m02 as i64);
                let f3 = fill(&ells, &s13, l3 - m03 as i64);
                if let (Some(f2), Some(f3)) = (f2, f3) {
                    let mut m2 = vec![0u32; p];
                    let mut m3 = vec![0u32; p];
                    for (t, v) in f2 {
                        m2[t] = v;
                    }
                    for (t, v) in f3 {
                        m3[t] = v;
                    }
                    if s0.len() == 1 {
                        m2[s0[0]] = m02;
                        m3[s0[0]] = m03;
                    } else {
                        m2[s0[0]] = m02;
                        m3[s0[1]] = m03;
                    }
                    let d = AdmissibleDecomposition {
                        special,
                        others: [others[0], others[1]],
                        zeros: zeros.clone(),
                        ells: ells.clone(),
                        parts,
                        m2,
                        m3,
                    };
                    debug_assert!(d.is_valid(s.k));
                    return Ok(Some(d));
                }
            }
        }
    }
    Ok(None)
}
