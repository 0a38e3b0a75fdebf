use residue_atlas::data::{parse_table, BUNDLED};
use residue_atlas::io::{parse_stratum, Problem};
use residue_atlas_core::classifier::builtin_table;
use residue_atlas_core::{QComplex, QReal, Stratum};
use serde_json::json;

#[test]
fn bundled_table_matches_builtin() {
    assert_eq!(parse_table(BUNDLED).unwrap(), builtin_table());
}

#[test]
fn multiplicity_notation() {
    let s = parse_stratum(&json!({"k": 1, "genus": 0, "orders": [5, "(-1^7)"]})).unwrap();
    assert_eq!(s, Stratum::abelian(0, vec![5, -1, -1, -1, -1, -1, -1, -1]));
    let s = parse_stratum(&json!({"orders": ["2^2", "−1^6"]})).unwrap();
    assert_eq!(s, Stratum::abelian(0, vec![2, 2, -1, -1, -1, -1, -1, -1]));
    assert!(parse_stratum(&json!({"orders": ["x^2"]})).is_err());
    assert!(parse_stratum(&json!({"orders": ["1^y"]})).is_err());
}

#[test]
fn exact_residue_inputs() {
    let p = Problem::from_value(&json!({
        "stratum": {"orders": [2, -1, -1, -1, -1]},
        "residues": [[{"num": 1, "den": 2}, 0], [0, "3/4"], 0.25, [-0.75, -0.75]],
    }))
    .unwrap();
    assert_eq!(p.residues[0], QComplex::new(QReal::frac(1, 2), QReal::zero()));
    assert_eq!(p.residues[1], QComplex::new(QReal::zero(), QReal::frac(3, 4)));
    assert_eq!(p.residues[2], QComplex::new(QReal::frac(1, 4), QReal::zero()));
    assert_eq!(p.residues[3], QComplex::new(QReal::frac(-3, 4), QReal::frac(-3, 4)));
}

#[test]
fn svg_of_a_witness() {
    let s = Stratum::abelian(0, vec![2, -1, -1, -1, -1]);
    let r = vec![QComplex::int(1, 0), QComplex::int(0, 1), QComplex::int(-1, 0), QComplex::int(0, -1)];
    let d = residue_atlas_core::classify(&s, &r).unwrap();
    let surface = residue_atlas::witness(&s, &r, &d).unwrap();
    let svg = residue_atlas::svg::surface_svg(&surface);
    assert_eq!(svg.matches("<g id=\"piece-").count(), surface.pieces.len());
    assert!(svg.trim_end().ends_with("</svg>"));
    assert!(!svg.contains("NaN"));
}
