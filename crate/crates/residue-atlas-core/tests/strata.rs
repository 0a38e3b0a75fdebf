use proptest::prelude::*;
use residue_atlas_core::strata::{forced_power_divisor, is_empty_stratum, residue_tuple_valid, validate_stratum, EmptyReason};
use residue_atlas_core::{Error, QComplex, QReal, Stratum};

fn q(re: i64, im: i64) -> QComplex {
    QComplex::int(re, im)
}

#[test]
fn validity_examples() {
    assert!(validate_stratum(&Stratum::abelian(0, vec![5, -1, -1, -1, -1, -1, -1, -1])).is_empty());
    assert!(validate_stratum(&Stratum::abelian(1, vec![1, -1])).is_empty());
    assert!(is_empty_stratum(&Stratum::abelian(1, vec![1, -1])).unwrap().is_some());
    assert!(!validate_stratum(&Stratum::new(2, 0, vec![3, -1])).is_empty());
}

#[test]
fn emptiness_examples() {
    assert_eq!(is_empty_stratum(&Stratum::new(2, 2, vec![4])).unwrap(), Some(EmptyReason::QuadraticGenusTwo));
    assert_eq!(is_empty_stratum(&Stratum::new(2, 2, vec![3, 1])).unwrap(), Some(EmptyReason::QuadraticGenusTwo));
    assert_eq!(is_empty_stratum(&Stratum::new(2, 0, vec![2, -2, -2, -2])).unwrap(), Some(EmptyReason::ForcedPower { d: 2 }));
    assert_eq!(is_empty_stratum(&Stratum::abelian(0, vec![2, -1, -1, -1, -1])).unwrap(), None);
    assert_eq!(is_empty_stratum(&Stratum::new(3, 1, vec![])).unwrap(), Some(EmptyReason::EmptySignature));
    assert_eq!(is_empty_stratum(&Stratum::new(2, 2, vec![2, 2])).unwrap(), None);
    assert!(matches!(is_empty_stratum(&Stratum::new(2, 0, vec![3, -1])), Err(Error::InvalidStratum(_))));
}

#[test]
fn power_divisor_examples() {
    assert_eq!(forced_power_divisor(&Stratum::new(6, 0, vec![12, -6, -6, -12])), 6);
    assert_eq!(forced_power_divisor(&Stratum::new(3, 0, vec![1, 2, -3, -3])), 1);
    assert_eq!(forced_power_divisor(&Stratum::new(4, 0, vec![6, -2, -4, -8])), 2);
}

#[test]
fn residue_space_examples() {
    let s = Stratum::abelian(0, vec![2, -1, -1, -1, -1]);
    assert!(residue_tuple_valid(&s, &[q(1, 0), q(0, 1), q(-1, 0), q(0, -1)]).unwrap());
    assert!(!residue_tuple_valid(&s, &[q(1, 0), q(1, 0), q(-1, 0), q(0, 0)]).unwrap());
    assert!(matches!(residue_tuple_valid(&s, &[q(1, 0)]), Err(Error::LengthMismatch { expected: 4, got: 1 })));
    assert!(residue_tuple_valid(&Stratum::new(2, 0, vec![0, -4]), &[q(0, 0)]).unwrap());
}

#[test]
fn canonical_pole_order() {
    let s = Stratum::new(3, 0, vec![-3, 10, -4, -9, -6, -3, -5, 6]);
    let orders: Vec<i64> = s.poles().iter().map(|p| p.order).collect();
    assert_eq!(orders, vec![-9, -6, -5, -4, -3, -3]);
    assert_eq!(s.canonical_orders(), vec![10, 6, -9, -6, -5, -4, -3, -3]);
    assert_eq!(s.residue_len(), 4);
}

fn stratum_strategy() -> impl Strategy<Value = Stratum> {
    (1u32..=6, 0u32..=3, prop::collection::vec(-12i64..=12, 0..8)).prop_map(|(k, g, orders)| Stratum::new(k, g, orders))
}

fn valid_stratum_strategy() -> impl Strategy<Value = Stratum> {
    (1u32..=5, 0u32..=2, prop::collection::vec(-10i64..=6, 1..7)).prop_filter_map("adjustable", |(k, g, mut orders)| {
        let ki = k as i64;
        let target = ki * (2 * g as i64 - 2);
        let gap = target - orders.iter().sum::<i64>();
        if gap > -ki || gap % ki == 0 {
            orders.push(gap);
        } else {
            orders.push(gap - ki);
            orders.push(ki);
        }
        let s = Stratum::new(k, g, orders);
        validate_stratum(&s).is_empty().then_some(s)
    })
}

fn residue_for(s: &Stratum, raw: &[(i64, i64)]) -> Vec<QComplex> {
    let poles = s.residue_poles();
    let mut r: Vec<QComplex> = poles
        .iter()
        .zip(raw.iter().cycle())
        .map(|(_, &(a, b))| if a == 0 && b == 0 { q(1, 0) } else { q(a, b) })
        .collect();
    if s.k == 1 && !r.is_empty() {
        let rest = r[..r.len() - 1].iter().fold(QComplex::zero(), |a, x| &a + x);
        let last = r.len() - 1;
        r[last] = -&rest;
    }
    r
}

proptest! {
    #[test]
    fn degree_condition(s in stratum_strategy()) {
        let sum: i64 = s.orders.iter().sum();
        let ok = sum == s.k as i64 * (2 * s.genus as i64 - 2) && !(s.genus == 0 && s.orders.is_empty());
        prop_assert_eq!(validate_stratum(&s).is_empty(), ok);
    }

    #[test]
    fn divisor_divides_everything(s in stratum_strategy()) {
        let d = forced_power_divisor(&s) as i64;
        prop_assert!(d >= 1);
        prop_assert_eq!(s.k as i64 % d, 0);
        for m in &s.orders {
            prop_assert_eq!(m % d, 0);
        }
    }

    #[test]
    fn residue_space_is_a_cone(
        s in valid_stratum_strategy(),
        raw in prop::collection::vec((-4i64..=4, -4i64..=4), 1..8),
        lam in (-5i64..=5, -5i64..=5, 1i64..=7),
    ) {
        let r = residue_for(&s, &raw);
        let lambda = QComplex::new(QReal::frac(lam.0, lam.2), QReal::frac(lam.1, lam.2));
        prop_assume!(!lambda.is_zero());
        let scaled: Vec<QComplex> = r.iter().map(|x| x * &lambda).collect();
        prop_assert_eq!(residue_tuple_valid(&s, &r).unwrap(), residue_tuple_valid(&s, &scaled).unwrap());
    }

    #[test]
    fn canonical_orders_is_a_permutation(s in stratum_strategy()) {
        let mut a = s.canonical_orders();
        let mut b = s.orders.clone();
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
    }
}
