use std::process::Command;

use serde_json::{json, Value};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_residue-atlas"))
}

fn run(args: &[&str]) -> (i32, Value) {
    run_env(args, None)
}

fn run_env(args: &[&str], data: Option<&std::path::Path>) -> (i32, Value) {
    let mut cmd = bin();
    cmd.args(args);
    match data {
        Some(p) => cmd.env("RESIDUE_ATLAS_DATA", p),
        None => cmd.env_remove("RESIDUE_ATLAS_DATA"),
    };
    let out = cmd.output().expect("binary runs");
    let text = String::from_utf8(out.stdout).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{}: {}", e, text));
    (out.status.code().unwrap(), v)
}

fn problem(k: u32, orders: Value, residues: Value) -> String {
    json!({"stratum": {"k": k, "genus": 0, "orders": orders}, "residues": residues}).to_string()
}

#[test]
fn decide_forbidden_tuple() {
    let input = problem(1, json!([2, -1, -1, -1, -1]), json!([1, 1, -1, -1]));
    let (code, v) = run(&["decide", "--input", &input]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "NotRealizable");
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
    assert!(v["tag"].as_str().unwrap().starts_with("genus0"));
    assert!(v.get("certificate").is_none());
}

#[test]
fn decide_open_case_exits_two() {
    let input = problem(2, json!([1, 5, "(-2^5)"]), json!([1, 1, 1, 1, 1]));
    let (code, v) = run(&["decide", "--input", &input]);
    assert_eq!(code, 2);
    assert_eq!(v["verdict"], "Undecided");
}

#[test]
fn malformed_input_exits_one() {
    let (code, v) = run(&["decide", "--input", "{\"stratum\": 3}"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"], "invalid_input");
    let (code, v) = run(&["decide", "--input", "{not json"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"], "invalid_json");
    let input = problem(1, json!([2, -1, -1]), json!([1, -1]));
    let (code, v) = run(&["decide", "--input", &input]);
    assert_eq!(code, 1);
    assert_eq!(v["error"], "invalid_stratum");
    let (code, v) = run(&["decide", "--input", "/nonexistent/file.json"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"], "io");
}

#[test]
fn certificate_on_request() {
    let input = problem(1, json!([5, "-1^7"]), json!([3, 1, 1, 1, -2, -2, -2]));
    let (code, v) = run(&["decide", "--input", &input, "--emit-certificate"]);
    assert_eq!(code, 0);
    assert_eq!(v["certificate"]["type"], "connection");
    assert_eq!(v["certificate"]["edges"].as_array().unwrap().len(), 6);
}

#[test]
fn enumerate_forbidden_two_two() {
    let (code, v) = run(&["enumerate-forbidden", "2", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["forbidden"], json!([[1, 1, -1, -1]]));
    let (_, single) = run(&["enumerate-forbidden", "3", "3", "--jobs", "1"]);
    let (_, sharded) = run(&["enumerate-forbidden", "3", "3", "--jobs", "3"]);
    assert_eq!(single["forbidden"], sharded["forbidden"]);
}

#[test]
fn witness_round_trip_and_svg() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("net.svg");
    let out = dir.path().join("witness.json");
    let input = problem(1, json!([5, "(-1^7)"]), json!([3, 1, 1, 1, -2, -2, -2]));
    let status = bin()
        .args(["witness", "--input", &input, "--svg", svg.to_str().unwrap(), "--output", out.to_str().unwrap()])
        .status()
        .unwrap();
    assert!(status.success());
    let text = std::fs::read_to_string(&svg).unwrap();
    assert!(text.starts_with("<svg") && text.contains("<polygon"));
    let (code, v) = run(&["verify-surface", "--input", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["pass"], true);
}

#[test]
fn witness_for_other_branches() {
    for input in [
        problem(1, json!([2, -1, -1, -1, -1]), json!([1, [0, 1], -1, [0, -1]])),
        problem(1, json!([4, -2, -2, -2]), json!([1, 0, -1])),
        problem(4, json!([2, 2, -4, -4, -4]), json!([[1, 0], [4, 0], [-3, 4]])),
    ] {
        let (code, v) = run(&["witness", "--input", &input]);
        assert_eq!(code, 0, "{}", v);
        assert_eq!(v["verification"]["pass"], true);
    }
    let input = problem(1, json!([2, -1, -1, -1, -1]), json!([1, 1, -1, -1]));
    let (code, v) = run(&["witness", "--input", &input]);
    assert_eq!(code, 1);
    assert_eq!(v["error"], "precondition");
}

#[test]
fn tampered_surface_fails_verification() {
    let input = problem(1, json!([2, -1, -1, -1, -1]), json!([1, [0, 1], -1, [0, -1]]));
    let (_, mut v) = run(&["witness", "--input", &input]);
    v["residues"] = json!([1, 1, -1, -1]);
    let (code, r) = run(&["verify-surface", "--input", &v.to_string()]);
    assert_eq!(code, 0);
    assert_eq!(r["pass"], false);
}

#[test]
fn oracle_fit_report() {
    let input = problem(1, json!([2, -1, -1, -1, -1]), json!([1, [0, 1], -1, [0, -1]]));
    let (code, v) = run(&["oracle-fit", "--input", &input, "--seed", "3", "--jobs", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["found"], true);
    assert!(v["residual"].as_f64().unwrap() < 1e-9);
    assert!(v["starts"].as_u64().unwrap() >= 1);
    let (_, again) = run(&["oracle-fit", "--input", &input, "--seed", "3", "--jobs", "1"]);
    assert_eq!(v["config"], again["config"]);
}

#[test]
fn floats_have_seventeen_digits() {
    let input = problem(1, json!([2, -1, -1, -1, -1]), json!([1, [0, 1], -1, [0, -1]]));
    let out = bin().args(["oracle-fit", "--input", &input]).output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    let line = text.lines().find(|l| l.contains("\"residual\"")).unwrap();
    let num = line.split(':').nth(1).unwrap().trim().trim_end_matches(',');
    let mantissa = num.split('e').next().unwrap().replace(['-', '.'], "");
    assert_eq!(mantissa.len(), 17, "{}", num);
}

#[test]
fn triangular_and_cylinders() {
    let (code, v) = run(&["triangular", "--input", "[1, 1, 4]"]);
    assert_eq!((code, v["triangular"].clone()), (0, json!(true)));
    let (_, v) = run(&["triangular", "--input", "{\"residues\": [1, 1, 1]}"]);
    assert_eq!(v["triangular"], false);
    let input = json!({"stratum": {"k": 1, "genus": 2, "orders": [2]}, "lambda": [1, 2]}).to_string();
    let (code, v) = run(&["cylinders", "--input", &input]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "Realizable");
}

#[test]
fn data_file_override() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.json");
    let input = problem(4, json!([5, -1, -4, -4, -4]), json!([1, 1, 4]));
    let (_, base) = run(&["decide", "--input", &input]);
    assert_eq!(base["verdict"], "Realizable");
    let mut table: Value = serde_json::from_str(residue_atlas::data::BUNDLED).unwrap();
    let entry = table["entries"].as_array_mut().unwrap().iter_mut().find(|e| e["k"] == 4 && e["zeros"] == json!([5, -1])).unwrap();
    entry["excluded"].as_array_mut().unwrap().push(json!([[1, 0], [1, 0], [4, 0]]));
    std::fs::write(&path, table.to_string()).unwrap();
    let (_, patched) = run_env(&["decide", "--input", &input], Some(&path));
    assert_eq!(patched["verdict"], "NotRealizable");
    std::fs::write(&path, "{").unwrap();
    let (code, broken) = run_env(&["decide", "--input", &input], Some(&path));
    assert_eq!(code, 1);
    assert_eq!(broken["error"], "invalid_data");
}
