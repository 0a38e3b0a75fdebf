use residue_atlas_core::classifier::{admissible_decomposition, classify};
use residue_atlas_core::{QComplex, Stratum, Verdict};

fn c(v: &[i64]) -> Vec<QComplex> {
    v.iter().map(|&x| QComplex::int(x, 0)).collect()
}

fn verdict(k: u32, g: u32, orders: &[i64], r: &[i64]) -> Verdict {
    classify(&Stratum::new(k, g, orders.to_vec()), &c(r)).unwrap().verdict
}

#[test]
fn genus_one_quadratic_exceptions() {
    assert_eq!(verdict(2, 1, &[8, -4, -4], &[0, 0]), Verdict::NotRealizable);
    assert_eq!(verdict(2, 1, &[8, -4, -4], &[0, 1]), Verdict::Realizable);
    assert_eq!(verdict(2, 1, &[4, -2, -2], &[1, 1]), Verdict::NotRealizable);
    assert_eq!(verdict(2, 1, &[4, -2, -2], &[3, 3]), Verdict::NotRealizable);
    assert_eq!(verdict(2, 1, &[4, -2, -2], &[1, 2]), Verdict::Realizable);
    assert_eq!(verdict(2, 1, &[1, 3, -2, -2], &[1, 1]), Verdict::NotRealizable);
    assert_eq!(verdict(2, 1, &[3, 5, -4, -4], &[0, 0]), Verdict::NotRealizable);
}

#[test]
fn higher_genus_is_surjective() {
    assert_eq!(verdict(1, 2, &[4, -1, -1], &[1, -1]), Verdict::Realizable);
    assert_eq!(verdict(3, 2, &[9, -3], &[5]), Verdict::Realizable);
}

#[test]
fn sporadic_items() {
    assert_eq!(verdict(4, 0, &[5, -1, -4, -4, -4], &[1, 1, -4]), Verdict::NotRealizable);
    assert_eq!(verdict(4, 0, &[5, -1, -4, -4, -4], &[1, -4, 1]), Verdict::NotRealizable);
    assert_eq!(verdict(4, 0, &[5, -1, -4, -4, -4], &[1, 1, 4]), Verdict::Realizable);
    assert_eq!(verdict(3, 0, &[1, 2, -3, -3, -3], &[1, 1, 1]), Verdict::NotRealizable);
    assert_eq!(verdict(3, 0, &[1, 2, -3, -3, -3], &[1, 1, 2]), Verdict::Realizable);
    assert_eq!(verdict(3, 0, &[-1, 1, -3, -3], &[1, -1]), Verdict::NotRealizable);
    assert_eq!(verdict(4, 0, &[-1, 1, -4, -4], &[2, 2]), Verdict::NotRealizable);
    assert_eq!(verdict(4, 0, &[-1, 1, -4, -4], &[2, -2]), Verdict::Realizable);
}

#[test]
fn abelian_genus_zero() {
    assert_eq!(verdict(1, 0, &[4, -2, -2, -2], &[0, 0, 0]), Verdict::NotRealizable);
    assert_eq!(verdict(1, 0, &[4, -2, -2, -2], &[1, 0, -1]), Verdict::Realizable);
    assert_eq!(verdict(1, 0, &[1, 1, -2, -2], &[0, 0]), Verdict::Realizable);
    assert_eq!(verdict(1, 0, &[2, -1, -1, -1, -1], &[1, 1, -1, -1]), Verdict::NotRealizable);
    assert_eq!(verdict(1, 0, &[5, -1, -1, -1, -1, -1, -1, -1], &[3, 1, 1, 1, -2, -2, -2]), Verdict::Realizable);
    assert_eq!(verdict(1, 0, &[2, 2, -1, -1, -1, -1, -1, -1], &[2, 1, 1, -1, -1, -2]), Verdict::Realizable);
    assert_eq!(verdict(1, 0, &[1, 3, -1, -1, -1, -1, -1, -1], &[2, 1, 1, -1, -1, -2]), Verdict::Realizable);
    assert_eq!(verdict(1, 0, &[4, -1, -1, -1, -1, -1, -1], &[2, 1, 1, -1, -1, -2]), Verdict::NotRealizable);
}

#[test]
fn k_differentials_genus_zero() {
    // one non-divisible pole, one zero, no −k poles
    assert_eq!(verdict(3, 0, &[5, -6, -5], &[0]), Verdict::NotRealizable);
    assert_eq!(verdict(3, 0, &[5, -6, -5], &[1]), Verdict::Realizable);
    assert_eq!(verdict(3, 0, &[1, -7], &[]), Verdict::Realizable);
    // zero tuple, divisible poles only
    assert_eq!(verdict(3, 0, &[1, 2, -9], &[0]), Verdict::NotRealizable);
    assert_eq!(verdict(3, 0, &[1, 1, 1, -9], &[0]), Verdict::Realizable);
    assert_eq!(verdict(3, 0, &[1, 2, -6, -3], &[0, 1]), Verdict::Realizable);
    assert_eq!(verdict(3, 0, &[4, 2, -6, -6], &[0, 0]), Verdict::NotRealizable);
    // quadratic exceptions with mixed poles
    assert_eq!(verdict(2, 0, &[1, 3, -4, -2, -2], &[0, 5, 5]), Verdict::NotRealizable);
    assert_eq!(verdict(2, 0, &[1, 3, -4, -2, -2], &[1, 5, 5]), Verdict::Realizable);
    assert_eq!(verdict(2, 0, &[3, 5, -4, -2, -2, -2, -2], &[0, 2, 2, 2, 2]), Verdict::NotRealizable);
    assert_eq!(verdict(2, 0, &[5, 7, -4, -4, -4, -2, -2], &[0, 0, 0, 1, 1]), Verdict::NotRealizable);
    assert_eq!(verdict(2, 0, &[1, 3, -4, -4], &[1, 1]), Verdict::NotRealizable);
    assert_eq!(verdict(2, 0, &[1, 3, -4, -4], &[1, 2]), Verdict::Realizable);
}

#[test]
fn quadratic_pure() {
    // pair family (1,1,R,R)
    assert_eq!(verdict(2, 0, &[1, 3, -2, -2, -2, -2], &[1, 1, -3, -3]), Verdict::NotRealizable);
    // triangular family: (1,1,4) is triangular
    assert_eq!(verdict(2, 0, &[1, 1, -2, -2, -2], &[1, 1, 4]), Verdict::NotRealizable);
    assert_eq!(verdict(2, 0, &[1, 1, -2, -2, -2], &[1, -1, 4]), Verdict::Realizable);
    // symmetric graph: one zero of order −1
    assert_eq!(verdict(2, 0, &[-1, 1, -2, -2], &[1, 4]), Verdict::Realizable);
    assert_eq!(verdict(2, 0, &[-1, 1, -2, -2], &[1, 1]), Verdict::NotRealizable);
    // same ray, two positive zeros: open
    assert_eq!(verdict(2, 0, &[1, 5, -2, -2, -2, -2, -2], &[1, 1, 1, 1, 1]), Verdict::Undecided);
}

#[test]
fn forced_powers_transport() {
    // squares of abelian differentials in (1,−1,−1,−1)
    assert_eq!(verdict(2, 0, &[2, -2, -2, -2], &[1, 1, 4]), Verdict::Realizable);
    assert_eq!(verdict(2, 0, &[2, -2, -2, -2], &[1, 1, 1]), Verdict::NotRealizable);
}

#[test]
fn admissible_decomposition_examples() {
    let s = Stratum::new(3, 0, vec![2, 2, 2, -6, -6]);
    let d = admissible_decomposition(&s).unwrap();
    if let Some(d) = d {
        assert!(d.is_valid(3));
    }
    assert!(admissible_decomposition(&Stratum::new(3, 0, vec![1, 1, 1, -9])).is_err());
}
