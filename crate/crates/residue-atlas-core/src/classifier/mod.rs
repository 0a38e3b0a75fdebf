//! Rule table deciding realizability of a residue tuple in a stratum.

mod admissible;
pub mod pattern;
mod quadratic;
mod sporadic;
mod transport;
mod triangular;

use alloc::format;
use alloc::vec::Vec;

pub use admissible::{admissible_decomposition, split_order, AdmissibleDecomposition, Part};
pub use quadratic::{symmetric_connection_graph, SymmetricOutcome};
pub use sporadic::{builtin_table, Parity, SporadicEntry, SporadicTable};
pub use triangular::is_triangular;

use crate::decision::{Certificate, Decision};
use crate::field::QComplex;
use crate::graph::{decide_minimal_abelian, decide_multizero_abelian};
use crate::strata::{is_empty_stratum, residue_tuple_valid, EmptyReason, Stratum};
use crate::Error;
use pattern::{is_zero_tuple, multiplicities, same_ray};

pub mod tags {
    pub const HIGHER_GENUS: &str = "genus2+.surjective";
    pub const GENUS1: &str = "genus1.surjective";
    pub const GENUS1_ZERO: &str = "genus1.quadratic.zero-excluded";
    pub const GENUS1_ONES: &str = "genus1.quadratic.ones-excluded";
    pub const ABELIAN_INEQ: &str = "genus0.abelian.zero-order-bound";
    pub const ABELIAN: &str = "genus0.abelian.surjective";
    pub const NONDIV: &str = "genus0.k-nondivisible.surjective";
    pub const NONDIV_ZERO: &str = "genus0.k-nondivisible.zero-excluded";
    pub const MIXED: &str = "genus0.k-mixed.surjective";
    pub const MIXED_EXC1: &str = "genus0.k-mixed.exception#1";
    pub const MIXED_EXC2: &str = "genus0.k-mixed.exception#2";
    pub const DIV: &str = "genus0.k-divisible.nonzero";
    pub const DIV_ONES: &str = "genus0.k-divisible.ones-excluded";
    pub const DIV_ZERO_ONE_POLE: &str = "genus0.k-divisible.zero.single-pole";
    pub const DIV_ZERO_TWO_ZEROS: &str = "genus0.k-divisible.zero.two-zeros";
    pub const DIV_ZERO_ADMISSIBLE: &str = "genus0.k-divisible.zero.admissible";
    pub const DIV_ZERO_NO_ADMISSIBLE: &str = "genus0.k-divisible.zero.no-admissible";
    pub const DIV_ZERO_OPEN: &str = "genus0.k-divisible.zero.open";
    pub const QUAD_FAMILY1: &str = "genus0.quadratic.pair-family";
    pub const QUAD_FAMILY2: &str = "genus0.quadratic.triangular-family";
    pub const QUAD_ODD: &str = "genus0.quadratic.four-odd-zeros";
    pub const QUAD_EVEN: &str = "genus0.quadratic.three-zeros";
    pub const QUAD_RAYS: &str = "genus0.quadratic.several-rays";
    pub const QUAD_SYM: &str = "genus0.quadratic.symmetric-graph";
    pub const QUAD_NO_SYM: &str = "genus0.quadratic.no-symmetric-graph";
    pub const QUAD_SYM_OPEN: &str = "genus0.quadratic.symmetric-graph.undetermined";
    pub const QUAD_OPEN: &str = "genus0.quadratic.same-ray.open";
    pub const SPORADIC: &str = "genus0.k-pure.sporadic";
    pub const PURE: &str = "genus0.k-pure.surjective";
    pub const TRANSPORT: &str = "genus0.power";
    pub const TRANSPORT_NONE: &str = "genus0.power.no-root";
    pub const TRANSPORT_OPEN: &str = "genus0.power.roots-outside-field";
    pub const HOLOMORPHIC: &str = "holomorphic.nonempty";
}

/// Decide with the built-in sporadic table.
pub fn classify(s: &Stratum, r: &[QComplex]) -> Result<Decision, Error> {
    classify_with(s, r, &builtin_table())
}

pub fn classify_with(s: &Stratum, r: &[QComplex], table: &SporadicTable) -> Result<Decision, Error> {
    match is_empty_stratum(s)? {
        None => {}
        Some(EmptyReason::ForcedPower { d }) => return transport::classify_power(s, r, d, table),
        Some(reason) => return Err(Error::EmptyStratum(format!("{}: {:?}", s, reason))),
    }
    if !residue_tuple_valid(s, r)? {
        return Err(Error::InvalidTuple(format!("tuple is not in the residue space of {}", s)));
    }
    if s.is_holomorphic() {
        return Ok(Decision::realizable(tags::HOLOMORPHIC));
    }
    if s.genus >= 2 {
        return Ok(Decision::realizable(tags::HIGHER_GENUS));
    }
    if s.genus == 1 {
        return Ok(genus_one(s, r));
    }
    if s.k == 1 {
        return genus_zero_abelian(s, r);
    }
    genus_zero_k(s, r, table)
}

fn zeros_sorted(s: &Stratum) -> Vec<i64> {
    let mut z = s.zeros();
    z.sort_unstable();
    z
}

fn all_poles(s: &Stratum, order: i64) -> bool {
    s.poles().iter().all(|p| p.order == order)
}

fn genus_one(s: &Stratum, r: &[QComplex]) -> Decision {
    if s.k == 2 {
        let z = zeros_sorted(s);
        let np = s.poles().len() as i64;
        if np >= 1 && all_poles(s, -4) {
            let a = np;
            if (z == [4 * a] || z == [2 * a - 1, 2 * a + 1]) && is_zero_tuple(r) {
                return Decision::not_realizable(tags::GENUS1_ZERO);
            }
        }
        if np >= 1 && all_poles(s, -2) && np % 2 == 0 {
            let sp = np;
            if (z == [2 * sp] || z == [sp - 1, sp + 1]) && multiplicities(r).len() == 1 {
                return Decision::not_realizable(tags::GENUS1_ONES);
            }
        }
    }
    Decision::realizable(tags::GENUS1)
}

fn genus_zero_abelian(s: &Stratum, r: &[QComplex]) -> Result<Decision, Error> {
    let poles = s.poles();
    let simple = s.count_minus_k();
    let p = poles.len() - simple;
    if p == 0 {
        return if s.n_zeros() == 1 { decide_minimal_abelian(s, r) } else { decide_multizero_abelian(s, r) };
    }
    if simple == 0 {
        let bound: i64 = poles.iter().map(|q| -q.order).sum::<i64>() - (p as i64 + 1);
        if s.zeros().iter().any(|&a| a > bound) && is_zero_tuple(r) {
            return Ok(Decision::not_realizable(tags::ABELIAN_INEQ));
        }
    }
    Ok(Decision::realizable(tags::ABELIAN))
}

fn genus_zero_k(s: &Stratum, r: &[QComplex], table: &SporadicTable) -> Result<Decision, Error> {
    let k = s.k as i64;
    let n = s.n_zeros();
    let nondiv = s.count_nondivisible();
    let sk = s.count_minus_k();
    let p = s.count_divisible();
    let z = zeros_sorted(s);

    if nondiv >= 1 {
        if nondiv == 1 && sk == 0 && n == 1 && p >= 1 && is_zero_tuple(r) {
            return Ok(Decision::not_realizable(tags::NONDIV_ZERO));
        }
        return Ok(Decision::realizable(tags::NONDIV));
    }

    if sk >= 1 && p >= 1 {
        if k == 2 {
            let div: Vec<&QComplex> = r[..p].iter().collect();
            let simple = &r[p..];
            let simple_equal = multiplicities(simple).len() == 1;
            let div_zero = div.iter().all(|x| x.is_zero());
            let orders: Vec<i64> = s.poles().iter().map(|q| q.order).collect();
            let m = (sk / 2) as i64;
            if p == 1 && orders[0] == -4 && sk.is_multiple_of(2) && z == [2 * m - 1, 2 * m + 1] && div_zero && simple_equal {
                return Ok(Decision::not_realizable(tags::MIXED_EXC1));
            }
            let a = p as i64;
            if sk == 2 && orders[..p].iter().all(|&o| o == -4) && z == [2 * a - 1, 2 * a + 1] && div_zero && simple_equal {
                return Ok(Decision::not_realizable(tags::MIXED_EXC2));
            }
        }
        return Ok(Decision::realizable(tags::MIXED));
    }

    if p >= 1 {
        if !is_zero_tuple(r) {
            let pp = p as i64;
            if k == 2 && p.is_multiple_of(2) && all_poles(s, -4) && z == [2 * pp - 3, 2 * pp - 1] && multiplicities(r).len() == 1 {
                return Ok(Decision::not_realizable(tags::DIV_ONES));
            }
            return Ok(Decision::realizable(tags::DIV));
        }
        if p == 1 {
            return Ok(if n >= 3 {
                Decision::realizable(tags::DIV_ZERO_ONE_POLE)
            } else {
                Decision::not_realizable(tags::DIV_ZERO_ONE_POLE)
            });
        }
        return Ok(match n {
            0..=2 => Decision::not_realizable(tags::DIV_ZERO_TWO_ZEROS),
            3 => match admissible_decomposition(s)? {
                Some(dec) => Decision::realizable(tags::DIV_ZERO_ADMISSIBLE).with(Certificate::Decomposition(dec)),
                None => Decision::not_realizable(tags::DIV_ZERO_NO_ADMISSIBLE)
                    .with(Certificate::Exhausted { searched: "all admissible decompositions".into() }),
            },
            _ => Decision::undecided(tags::DIV_ZERO_OPEN, "zero tuple with at least two poles and four zeros"),
        });
    }

    if k == 2 {
        quadratic_pure(r, &z)
    } else {
        let zeros = s.zeros();
        Ok(match table.lookup(s.k, &zeros, sk) {
            Some(e) if e.excludes(r) => Decision::not_realizable(&format!("{}#{}", tags::SPORADIC, e.item)),
            _ => Decision::realizable(tags::PURE),
        })
    }
}

/// k = 2, every pole of order −2.
fn quadratic_pure(r: &[QComplex], z: &[i64]) -> Result<Decision, Error> {
    let sp = r.len() as i64;
    let n = z.len();
    if n == 2 && sp % 2 == 0 && sp >= 4 {
        let m = (sp - 2) / 2;
        if z == [2 * m - 1, 2 * m + 1] && pair_family(r, m as usize) {
            return Ok(Decision::not_realizable(tags::QUAD_FAMILY1));
        }
    }
    if n == 2 && sp % 2 == 1 && sp >= 3 {
        let m = (sp - 1) / 2;
        if z == [2 * m - 1, 2 * m - 1] && triangular_family(r, m as usize)? {
            return Ok(Decision::not_realizable(tags::QUAD_FAMILY2));
        }
    }
    if n >= 4 && z.iter().filter(|a| *a % 2 != 0).count() >= 4 {
        return Ok(Decision::realizable(tags::QUAD_ODD));
    }
    if n == 3 && (0..3).any(|i| {
        let rest: i64 = z.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, a)| a).sum();
        z[i] % 2 == 0 && rest < z[i]
    }) {
        return Ok(Decision::realizable(tags::QUAD_EVEN));
    }
    if !same_ray(r) {
        return Ok(Decision::realizable(tags::QUAD_RAYS));
    }
    if n == 2 && z[0] == -1 {
        return Ok(match symmetric_connection_graph(r) {
            SymmetricOutcome::Found { signs, parent } => {
                Decision::realizable(tags::QUAD_SYM).with(Certificate::SignedTree { signs, parent })
            }
            SymmetricOutcome::None => Decision::not_realizable(tags::QUAD_NO_SYM)
                .with(Certificate::Exhausted { searched: "all signed trees on the square roots".into() }),
            SymmetricOutcome::Unknown => Decision::undecided(tags::QUAD_SYM_OPEN, "square roots could not be compared exactly"),
        });
    }
    Ok(Decision::undecided(tags::QUAD_OPEN, "quadratic residues on one ray with two positive zeros or three zeros"))
}

/// Multiset {u^{2m}, v²}.
fn pair_family(r: &[QComplex], m: usize) -> bool {
    let mult = multiplicities(r);
    match mult.len() {
        1 => true,
        2 => {
            let mut c = [mult[0].1, mult[1].1];
            c.sort_unstable();
            c == [2, 2 * m]
        }
        _ => false,
    }
}

/// Multiset {R1^{2m−1}, R2, R3} with (R1, R2, R3) triangular.
fn triangular_family(r: &[QComplex], m: usize) -> Result<bool, Error> {
    let need = 2 * m - 1;
    for (v, c) in multiplicities(r) {
        if c < need {
            continue;
        }
        let mut rest = Vec::new();
        let mut skipped = 0;
        for x in r {
            if *x == v && skipped < need {
                skipped += 1;
            } else {
                rest.push(x.clone());
            }
        }
        if is_triangular(&v, &rest[0], &rest[1])? {
            return Ok(true);
        }
    }
    Ok(false)
}
