use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use residue_atlas_core::oracle::*;
use residue_atlas_core::{Decision, QComplex, Stratum, Verdict};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn q(re: i64, im: i64) -> QComplex {
    QComplex::int(re, im)
}

fn close(a: &[Complex64], b: &[Complex64], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).norm() <= tol)
}

#[test]
fn invalid_stratum_is_rejected() {
    let s = Stratum::abelian(0, vec![2, -1, -1, -1, -1, -2]);
    assert!(Configuration::new(&s, &[c(0.5, 0.5); 3], c(1.0, 0.0)).is_err());
}

#[test]
fn partial_fractions() {
    let s = Stratum::abelian(0, vec![0, -1, -1]);
    let cfg = Configuration::new(&s, &[], c(-1.0, 0.0)).unwrap();
    let r = residues_of_configuration(&cfg).unwrap();
    assert!(close(&r, &[c(1.0, 0.0), c(-1.0, 0.0)], 1e-14), "{:?}", r);
}

#[test]
fn higher_order_abelian_pole() {
    // (z − 2)^2 / z^3 dz has residue 1 at 0
    let s = Stratum::abelian(0, vec![2, -1, -3]);
    let mut cfg = Configuration::new(&s, &[], c(1.0, 0.0)).unwrap();
    let pole3 = cfg.orders.iter().position(|&m| m == -3).unwrap();
    let zero = cfg.orders.iter().position(|&m| m == 2).unwrap();
    let simple = cfg.orders.iter().position(|&m| m == -1).unwrap();
    cfg.points[pole3] = Some(c(0.0, 0.0));
    cfg.points[zero] = Some(c(2.0, 0.0));
    cfg.points[simple] = None;
    let r = residues_of_configuration(&cfg).unwrap();
    assert!(close(&r, &[c(1.0, 0.0), c(-1.0, 0.0)], 1e-12), "{:?}", r);
}

#[test]
fn kth_power_of_a_simple_pole() {
    for k in 2..=6u32 {
        let s = Stratum::new(k, 0, vec![-(k as i64), -(k as i64)]);
        let r0 = c(0.7, -1.3);
        let cfg = Configuration::new(&s, &[], r0.powi(k as i32)).unwrap();
        let r = residues_of_configuration(&cfg).unwrap();
        assert!((r[0] - r0.powi(k as i32)).norm() < 1e-9, "k={} {:?}", k, r);
        assert!((r[1] - (-r0).powi(k as i32)).norm() < 1e-9, "k={} {:?}", k, r);
    }
}

#[test]
fn contour_matches_abelian_power() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..20 {
        let s = Stratum::abelian(0, vec![3, -1, -1, -1, -2]);
        let free: Vec<Complex64> = (0..2).map(|_| c(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0))).collect();
        let scale = c(rng.gen_range(0.5..2.0), rng.gen_range(-1.0..1.0));
        let Ok(ab) = Configuration::new(&s, &free, scale) else { continue };
        if ab.min_separation() < 0.1 {
            continue;
        }
        let res = residues_of_configuration(&ab).unwrap();
        for k in [2u32, 3] {
            let mut pw = ab.clone();
            pw.k = k;
            pw.orders = ab.orders.iter().map(|m| m * k as i64).collect();
            pw.scale = scale.powi(k as i32);
            let got = residues_of_configuration(&pw).unwrap();
            let want: Vec<Complex64> = res.iter().map(|r| r.powi(k as i32)).collect();
            let scale_of = want.iter().map(|w| w.norm()).fold(1.0, f64::max);
            assert!(close(&got, &want, 1e-8 * scale_of), "{:?} vs {:?}", got, want);
        }
    }
}

#[test]
fn scaling_equivariance() {
    let s = Stratum::new(2, 0, vec![3, 1, -4, -2, -2]);
    let cfg = Configuration::new(&s, &[c(0.3, 0.8), c(-0.7, 0.2)], c(1.1, 0.4)).unwrap();
    let base = residues_of_configuration(&cfg).unwrap();
    let lambda = c(-0.6, 1.7);
    let mut scaled = cfg.clone();
    scaled.scale *= lambda;
    let got = residues_of_configuration(&scaled).unwrap();
    let want: Vec<Complex64> = base.iter().map(|r| r * lambda).collect();
    assert!(close(&got, &want, 1e-9), "{:?} {:?}", got, want);
}

#[test]
fn gauge_invariance() {
    let s = Stratum::abelian(0, vec![4, -1, -1, -1, -1, -2]);
    let cfg = Configuration::new(&s, &[c(0.4, 0.9), c(-0.5, -0.6), c(1.8, 0.3)], c(0.9, -0.2)).unwrap();
    let base = residues_of_configuration(&cfg).unwrap();
    for (a, b, d) in [(1, 2, 3), (5, 0, 2), (3, 4, 0), (2, 5, 1)] {
        let moved = cfg.regauge(a, b, d).unwrap();
        assert!(moved.points[a].is_none());
        assert!(moved.points[b].unwrap().norm() < 1e-12);
        assert!((moved.points[d].unwrap() - c(1.0, 0.0)).norm() < 1e-12);
        let got = residues_of_configuration(&moved).unwrap();
        assert!(close(&got, &base, 1e-9), "{:?} {:?}", got, base);
    }
    let s = Stratum::new(3, 0, vec![4, 2, -6, -3, -3]);
    let cfg = Configuration::new(&s, &[c(0.4, 0.9), c(-0.5, -0.6)], c(0.9, -0.2)).unwrap();
    let base = residues_of_configuration(&cfg).unwrap();
    let moved = cfg.regauge(2, 3, 1).unwrap();
    let got = residues_of_configuration(&moved).unwrap();
    assert!(close(&got, &base, 1e-8), "{:?} {:?}", got, base);
}

fn finite_difference_check(cfg: &Configuration) -> f64 {
    let jac = residue_jacobian(cfg).unwrap();
    let h = 1e-6;
    let mut worst: f64 = 0.0;
    let cols: Vec<usize> = cfg.finite().map(|(i, _)| i).collect();
    for &p in &cols {
        for dir in [c(1.0, 0.0), c(0.0, 1.0)] {
            let (mut plus, mut minus) = (cfg.clone(), cfg.clone());
            plus.points[p] = Some(cfg.points[p].unwrap() + dir * h);
            minus.points[p] = Some(cfg.points[p].unwrap() - dir * h);
            let (rp, rm) = (residues_of_configuration(&plus).unwrap(), residues_of_configuration(&minus).unwrap());
            for i in 0..rp.len() {
                let fd = (rp[i] - rm[i]) / (2.0 * h);
                let an = jac.d_points[i][p] * dir;
                let scale = an.norm().max(fd.norm()).max(jac.residues[i].norm()).max(1e-3);
                worst = worst.max((fd - an).norm() / scale);
            }
        }
    }
    worst
}

#[test]
fn jacobian_matches_finite_differences() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let strata = [
        Stratum::abelian(0, vec![3, -1, -1, -1, -2]),
        Stratum::abelian(0, vec![1, 1, -1, -1, -2]),
        Stratum::new(2, 0, vec![3, 1, -4, -2, -2]),
        Stratum::new(3, 0, vec![4, 2, -6, -3, -3]),
    ];
    let mut checked = 0;
    while checked < 20 {
        let s = &strata[checked % strata.len()];
        let free_len = s.orders.len() - 3;
        let free: Vec<Complex64> = (0..free_len).map(|_| c(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0))).collect();
        let cfg = Configuration::new(s, &free, c(rng.gen_range(0.5..2.0), rng.gen_range(-1.0..1.0))).unwrap();
        if cfg.min_separation() < 0.2 {
            continue;
        }
        let err = finite_difference_check(&cfg);
        assert!(err < 1e-5, "{} {:?}: {}", s, cfg, err);
        checked += 1;
    }
}

#[test]
fn fit_square_residues() {
    let s = Stratum::abelian(0, vec![2, -1, -1, -1, -1]);
    let r = vec![q(1, 0), q(0, 1), q(-1, 0), q(0, -1)];
    let report = fit(&s, &r, &FitOptions::default()).unwrap();
    assert!(report.found, "{:?}", report.log);
    assert!(report.residual < 1e-9);
    let cfg = report.config.unwrap();
    let got = residues_of_configuration(&cfg).unwrap();
    let want: Vec<Complex64> = r.iter().map(QComplex::to_c64).collect();
    assert!(close(&got, &want, 1e-9));
}

#[test]
fn fit_star_residues() {
    let s = Stratum::abelian(0, vec![5, -1, -1, -1, -1, -1, -1, -1]);
    let r: Vec<QComplex> = [3, 1, 1, 1, -2, -2, -2].iter().map(|&x| q(x, 0)).collect();
    let report = fit(&s, &r, &FitOptions::default()).unwrap();
    assert!(report.found, "{:?}", report.log);
}

#[test]
fn no_fit_for_forbidden_tuple() {
    let s = Stratum::abelian(0, vec![2, -1, -1, -1, -1]);
    let r = vec![q(1, 0), q(1, 0), q(-1, 0), q(-1, 0)];
    let opts = FitOptions { n_starts: 200, ..FitOptions::default() };
    let report = fit(&s, &r, &opts).unwrap();
    assert!(!report.found);
    assert!(report.starts >= 200);
}

#[test]
fn cross_checks() {
    let s = Stratum::abelian(0, vec![2, -1, -1, -1, -1]);
    let bad = vec![q(1, 0), q(1, 0), q(-1, 0), q(-1, 0)];
    let good = vec![q(1, 0), q(0, 1), q(-1, 0), q(0, -1)];
    let opts = FitOptions { n_starts: 48, ..FitOptions::default() };
    let no = Decision::not_realizable("test");
    let yes = Decision::realizable("test");
    assert_eq!(cross_check(&s, &bad, &no, &opts).unwrap().agreement, Agreement::Pass);
    assert_eq!(cross_check(&s, &good, &yes, &opts).unwrap().agreement, Agreement::Pass);
    assert_eq!(cross_check(&s, &good, &no, &opts).unwrap().agreement, Agreement::Conflict);
    assert_eq!(cross_check(&s, &bad, &yes, &opts).unwrap().agreement, Agreement::Conflict);
    let undecided = Decision { verdict: Verdict::Undecided, tag: "open".into(), certificate: None };
    assert_eq!(cross_check(&s, &bad, &undecided, &opts).unwrap().agreement, Agreement::Pass);
}

#[test]
fn fit_quadratic() {
    let s = Stratum::new(2, 0, vec![1, 1, -2, -2, -2]);
    let r = vec![q(1, 0), q(4, 0), q(-2, 3)];
    let report = fit(&s, &r, &FitOptions::default()).unwrap();
    assert!(report.found, "{:?}", report.log);
    let got = residues_of_configuration(&report.config.unwrap()).unwrap();
    let want: Vec<Complex64> = r.iter().map(QComplex::to_c64).collect();
    assert!(close(&got, &want, 1e-8), "{:?}", got);
}

#[test]
fn forced_square_has_no_generic_fit() {
    let s = Stratum::new(2, 0, vec![2, -2, -2, -2]);
    let r = vec![q(1, 0), q(4, 0), q(-2, 3)];
    let report = fit(&s, &r, &FitOptions::default()).unwrap();
    assert!(!report.found);
}
