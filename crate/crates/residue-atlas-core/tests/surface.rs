use residue_atlas_core::graph::ConnectionGraph;
use residue_atlas_core::surface::*;
use residue_atlas_core::{Error, QComplex, QReal, Stratum};

fn q(re: i64, im: i64) -> QComplex {
    QComplex::int(re, im)
}

fn reals(xs: &[i64]) -> Vec<QComplex> {
    xs.iter().map(|&x| q(x, 0)).collect()
}

fn assert_verified(surface: &FlatSurface, s: &Stratum, r: &[QComplex]) {
    let report = verify_surface(surface, s, r);
    assert!(report.pass, "{:#?}", report);
    let inv = surface.invariants().unwrap();
    assert_eq!(inv.order_sum(), s.degree_target());
}

fn strip_surface(edges: &[Coord], polygon: Vec<Coord>, pairs: &[(usize, usize)]) -> FlatSurface {
    let mut nb = NetBuilder::new(1);
    let p = nb.add_piece(Piece::polygon("polygon", polygon));
    for &(a, b) in pairs {
        nb.join(EdgeRef { piece: p, edge: a }, EdgeRef { piece: p, edge: b }, 0);
    }
    let mut label = 0;
    for (j, e) in edges.iter().enumerate() {
        if pairs.iter().any(|&(a, b)| a == j || b == j) {
            continue;
        }
        let at = nb.add_part(&make_polar_part(1, 0, vec![-e], vec![], 1).unwrap(), Some(label));
        label += 1;
        nb.join(EdgeRef { piece: p, edge: j }, at.upper[0], 0);
    }
    nb.finish().unwrap()
}

#[test]
fn square_with_cylinders() {
    let s = Stratum::abelian(0, vec![2, -1, -1, -1, -1]);
    let r = vec![q(1, 0), q(0, 1), q(-1, 0), q(0, -1)];
    let surface = build_one_zero_genus0(&s, &r).unwrap();
    assert_verified(&surface, &s, &r);
    let cones = surface.cone_angles().unwrap();
    assert_eq!(cones.len(), 1);
    assert_eq!(cones[0].order, 2);
    assert!((cones[0].angle - 6.0 * std::f64::consts::PI).abs() < 1e-9);
    assert_eq!(surface.genus().unwrap(), 0);
}

#[test]
fn torus_with_four_simple_poles() {
    let pts = [(0, 0), (0, 2), (-1, 2), (-2, 1), (-3, 1), (-3, -1), (-2, -1), (-1, 0)];
    let pts: Vec<Coord> = pts.iter().map(|&(x, y)| Coord::int(x, y)).collect();
    let edges: Vec<Coord> = (0..8).map(|j| &pts[(j + 1) % 8] - &pts[j]).collect();
    let surface = strip_surface(&edges, pts, &[(0, 4), (2, 6)]);
    let s = Stratum::abelian(1, vec![4, -1, -1, -1, -1]);
    let r = reals(&[1, 1, -1, -1]);
    assert_verified(&surface, &s, &r);
    assert_eq!(surface.genus().unwrap(), 1);
}

#[test]
fn parallelogram_torus() {
    let pts = vec![Coord::int(0, 0), Coord::int(3, 0), Coord::int(4, 2), Coord::int(1, 2)];
    let surface = glue(
        1,
        vec![Piece::polygon("torus", pts)],
        vec![
            Identification { a: (0, 0).into(), b: (0, 2).into(), t: 0 },
            Identification { a: (0, 1).into(), b: (0, 3).into(), t: 0 },
        ],
    )
    .unwrap();
    assert_eq!(surface.genus().unwrap(), 1);
    assert_eq!(surface.invariants().unwrap().orders(), vec![0]);
}

#[test]
fn star_graph_figure() {
    let s = Stratum::abelian(0, vec![5, -1, -1, -1, -1, -1, -1, -1]);
    let r = reals(&[3, 1, 1, 1, -2, -2, -2]);
    let surface = build_one_zero_genus0(&s, &r).unwrap();
    assert_verified(&surface, &s, &r);
    assert_eq!(surface.cone_angles().unwrap().len(), 1);
}

#[test]
fn connection_graph_builder() {
    let w = QReal::int(2);
    let g = ConnectionGraph { pos: vec![w.clone()], neg: vec![w], edges: vec![(0, 0)] };
    let surface = build_from_connection_graph(&g, &QComplex::one()).unwrap();
    let inv = surface.invariants().unwrap();
    assert_eq!(inv.genus, 0);
    assert_eq!(inv.orders(), vec![0]);
    assert_eq!(inv.pole_orders(), vec![-1, -1]);

    let g = ConnectionGraph {
        pos: vec![QReal::int(1), QReal::int(1)],
        neg: vec![QReal::int(1), QReal::int(1)],
        edges: vec![(0, 0), (1, 0), (1, 1)],
    };
    assert!(matches!(build_from_connection_graph(&g, &QComplex::one()), Err(Error::InvalidGraph(_))));
}

#[test]
fn residual_polygon_figure_net() {
    let surface = polygon_example_net().unwrap();
    let inv = surface.invariants().unwrap();
    assert_eq!(inv.genus, 0);
    assert_eq!(inv.orders(), vec![6]);
    assert_eq!(inv.pole_orders(), vec![-3, -2, -2, -1]);
    assert_eq!(inv.order_sum(), -2);
    let s = Stratum::abelian(0, vec![6, -2, -2, -3, -1]);
    let r = vec![q(-1, -1), q(0, 0), q(0, 1), q(1, 0)];
    let report = verify_surface(&surface, &s, &r);
    assert!(report.pass, "{:#?}", report);
}

#[test]
fn cubic_with_zero_residue() {
    let s = Stratum::new(3, 0, vec![8, -4, -4, -6]);
    let r = vec![q(0, 0)];
    let surface = build_one_zero_genus0(&s, &r).unwrap();
    assert_verified(&surface, &s, &r);
    let ends = surface.pole_ends().unwrap();
    assert!(ends.iter().filter(|e| e.order == -4).all(|e| e.rotation != 0));
}

#[test]
fn higher_order_abelian_poles() {
    for (orders, r) in [
        (vec![3, -2, -1, -1, -1], vec![q(1, 0), q(1, 0), q(-1, 0), q(-1, 0)]),
        (vec![3, -3, -2], vec![q(2, 1), q(-2, -1)]),
        (vec![4, -2, -2, -2], vec![q(0, 0), q(1, 1), q(-1, -1)]),
        (vec![1, -3], vec![q(0, 0)]),
        (vec![4, -6], vec![q(0, 0)]),
        (vec![3, -2, -2, -1], vec![q(0, 0), q(3, 0), q(-3, 0)]),
    ] {
        let s = Stratum::abelian(0, orders);
        match build_one_zero_genus0(&s, &r) {
            Ok(surface) => assert_verified(&surface, &s, &r),
            Err(e) => panic!("{}: {}", s, e),
        }
    }
}

#[test]
fn zero_tuple_with_several_poles_needs_two_zeros() {
    let s = Stratum::abelian(0, vec![2, -2, -2]);
    assert!(matches!(build_one_zero_genus0(&s, &[q(0, 0), q(0, 0)]), Err(Error::Precondition(_))));
}

#[test]
fn quadratic_nondivisible_witnesses() {
    for (k, orders, r) in [
        (2, vec![2, -3, -3], vec![]),
        (2, vec![3, -5, -2], vec![q(1, 0)]),
        (2, vec![4, -3, -3, -2], vec![q(-4, 3)]),
        (2, vec![5, -3, -4, -2], vec![q(2, 0), q(0, 1)]),
        (3, vec![4, -5, -5], vec![]),
        (3, vec![5, -4, -3, -4], vec![q(2, 0)]),
        (3, vec![7, -4, -6, -3], vec![q(0, 0), q(1, 0)]),
        (4, vec![6, -5, -9], vec![]),
        (6, vec![11, -7, -6, -10], vec![q(5, 0)]),
    ] {
        let s = Stratum::new(k, 0, orders);
        assert_eq!(s.orders.iter().sum::<i64>(), s.degree_target(), "{}", s);
        match build_one_zero_genus0(&s, &r) {
            Ok(surface) => assert_verified(&surface, &s, &r),
            Err(e) => panic!("{}: {}", s, e),
        }
    }
}

#[test]
fn lone_nondivisible_pole_is_unsupported() {
    let s = Stratum::new(2, 0, vec![-1, -3]);
    assert!(matches!(build_one_zero_genus0(&s, &[]), Err(Error::Unsupported(_))));
}

#[test]
fn polar_part_residues() {
    let v1 = Coord::int(2, 1);
    let v2 = Coord::int(1, -1);
    let part = make_polar_part(3, 1, vec![v1.clone(), v2.clone()], vec![], 1).unwrap();
    assert_eq!(part.residue(), &v1 + &v2);
    let part = make_polar_part(1, 0, vec![Coord::int(1, 0), Coord::int(0, -1)], vec![], 1).unwrap();
    assert_eq!(part.residue(), Coord::int(1, -1));
    let part = make_polar_part(2, 1, vec![Coord::one()], vec![Coord::one()], 1).unwrap();
    assert!(part.is_trivial());
    assert!(part.residue().is_zero());
    let part = make_polar_part(6, 1, vec![Coord::int(1, 1)], vec![], 3).unwrap();
    assert_eq!(part.residue(), Coord::int(1, 1).pow(3));
}

#[test]
fn polar_part_errors() {
    assert!(make_polar_part(3, 3, vec![Coord::one()], vec![], 1).is_err());
    assert!(make_polar_part(3, 0, vec![Coord::one()], vec![], 1).is_err());
    assert!(make_polar_part(7, 0, vec![Coord::one()], vec![Coord::one()], 3).is_err());
    assert!(make_polar_part(3, 1, vec![Coord::int(1, -1), Coord::int(1, 1)], vec![], 1).is_err());
    assert!(make_polar_part(1, 0, vec![], vec![Coord::one()], 1).is_err());
}

#[test]
fn nondivisible_part_of_a_cubic() {
    let part = make_polar_part(7, 0, vec![Coord::one()], vec![], 3).unwrap();
    assert!(matches!(part.kind, PolarKind::KNonDivisible { ell: 2, rbar: 1 }));
    let mut nb = NetBuilder::new(3);
    let at = nb.add_part(&part, Some(0));
    assert_eq!(at.upper.len(), 1);
}

#[test]
fn mismatched_edges_are_rejected() {
    let square = vec![Coord::int(0, 0), Coord::int(1, 0), Coord::int(1, 1), Coord::int(0, 1)];
    let rect = vec![Coord::int(0, 0), Coord::int(2, 0), Coord::int(2, 1), Coord::int(0, 1)];
    let err = glue(
        1,
        vec![Piece::polygon("a", square.clone()), Piece::polygon("b", rect)],
        (0..4).map(|j| Identification { a: (0, j).into(), b: (1, j).into(), t: 0 }).collect(),
    );
    assert!(matches!(err, Err(Error::InvalidSurface(_))));
    let err = glue(
        2,
        vec![Piece::polygon("a", square.clone())],
        vec![
            Identification { a: (0, 0).into(), b: (0, 2).into(), t: 5 },
            Identification { a: (0, 1).into(), b: (0, 3).into(), t: 0 },
        ],
    );
    assert!(err.is_err());
    let err = glue(1, vec![Piece::polygon("a", square)], vec![Identification { a: (0, 0).into(), b: (0, 2).into(), t: 0 }]);
    assert!(err.is_err());
}

#[test]
fn perturbed_identification_is_reported() {
    let s = Stratum::abelian(0, vec![2, -1, -1, -1, -1]);
    let r = vec![q(1, 0), q(0, 1), q(-1, 0), q(0, -1)];
    let surface = build_one_zero_genus0(&s, &r).unwrap();
    let report = verify_surface(&surface, &s, &[q(1, 0), q(0, 1), q(-1, 0), q(0, 1)]);
    assert!(!report.pass);
    assert!(report.mismatches.iter().any(|m| m.contains("residue")));
    let mut broken = surface.clone();
    let n = broken.identifications.len();
    let (i, j) = (n - 4, n - 2);
    let (bi, bj) = (broken.identifications[i].b, broken.identifications[j].b);
    broken.identifications[i].b = bj;
    broken.identifications[j].b = bi;
    let report = verify_surface(&broken, &s, &r);
    assert!(!report.pass);
    assert!(!report.mismatches.is_empty());
}

#[test]
fn c1c2_fourth_power_instances() {
    let c1 = [Coord::int(-1, 0), Coord::int(0, -3), Coord::int(3, 1), Coord::int(0, 2)];
    assert_c1c2(4, 3, 5, &c1, Some(&[0]));
    let c2 = [Coord::int(-4, 1), Coord::int(-4, -1), Coord::int(0, -2), Coord::int(4, 2)];
    assert_c1c2(4, 3, 5, &c2, None);
}

#[test]
fn c1c2_two_poles() {
    let roots = [Coord::one(), -&Coord::rot(3, 1)];
    assert_c1c2(3, 2, -2, &roots, None);
}

#[test]
fn c1c2_hypothesis_failure() {
    let roots = [Coord::int(1, 0), Coord::int(1, 0), Coord::int(0, 1), Coord::int(0, 1), Coord::int(1, 1)];
    let err = construct_c1_c2(3, 4, 5, &roots, Some(&[0, 1, 2])).unwrap_err();
    assert!(matches!(err, Error::Precondition(_)), "{:?}", err);
}

#[test]
fn zero_breaking() {
    let s = Stratum::abelian(0, vec![4, -1, -1, -1, -1, -1, -1]);
    let (t, ok) = break_zero(&s, 0, &[1, 3]).unwrap();
    assert!(ok);
    assert_eq!(t.orders, vec![1, 3, -1, -1, -1, -1, -1, -1]);
    let s = Stratum::new(2, 1, vec![4, -4]);
    assert!(!break_zero(&s, 0, &[1, 3]).unwrap().1);
    assert!(break_zero(&s, 0, &[2, 2]).unwrap().1);
    assert!(break_zero(&s, 0, &[1, 1, 2]).unwrap().1);
    assert!(break_zero(&s, 0, &[1, 2]).is_err());
    assert!(break_zero(&s, 1, &[-2, -2]).is_err());
}

#[test]
fn handle_sewing() {
    let s = Stratum::abelian(0, vec![2, -1, -1, -1, -1]);
    assert_eq!(sew_handle(&s, 0).unwrap(), Stratum::abelian(1, vec![4, -1, -1, -1, -1]));
    let s = Stratum::new(2, 1, vec![4, -4]);
    let once = sew_handle(&s, 0).unwrap();
    assert_eq!(once, Stratum::new(2, 2, vec![8, -4]));
    assert_eq!(sew_handle(&once, 0).unwrap(), Stratum::new(2, 3, vec![12, -4]));
}

#[test]
fn random_gluings_satisfy_gauss_bonnet() {
    let mut valid = 0;
    for seed in 0..200 {
        let g = random_gluing(seed);
        if let Ok(surface) = glue(g.k, g.pieces, g.identifications) {
            let inv = surface.invariants().unwrap();
            assert_eq!(inv.order_sum(), g.k as i64 * (2 * inv.genus as i64 - 2), "seed {}", seed);
            valid += 1;
        }
    }
    assert!(valid > 100, "{}", valid);
}

#[test]
fn surface_json_round_trip() {
    let s = Stratum::abelian(0, vec![2, -1, -1, -1, -1]);
    let r = vec![q(1, 0), q(0, 1), q(-1, 0), q(0, -1)];
    let surface = build_one_zero_genus0(&s, &r).unwrap();
    let text = serde_json::to_string(&surface).unwrap();
    let back: FlatSurface = serde_json::from_str(&text).unwrap();
    assert_eq!(back, surface);
    assert_eq!(back.invariants().unwrap(), surface.invariants().unwrap());
    assert_eq!(serde_json::to_string(&back).unwrap(), text);
}

fn assert_c1c2(k: u32, a1: i64, a2: i64, roots: &[Coord], split: Option<&[usize]>) {
    let surface = construct_c1_c2(k, a1, a2, roots, split).unwrap();
    let inv = surface.invariants().unwrap();
    assert_eq!(inv.genus, 0);
    let mut want_orders = vec![a1, a2];
    want_orders.sort_unstable_by(|a, b| b.cmp(a));
    assert_eq!(inv.orders(), want_orders);
    let mut got: Vec<Coord> = inv.poles.iter().map(|p| p.residue.clone()).collect();
    for r in roots {
        let w = r.pow(k);
        let pos = got.iter().position(|g| *g == w).unwrap_or_else(|| panic!("k-residue {} missing", w));
        got.remove(pos);
    }
    assert!(got.is_empty());
}
