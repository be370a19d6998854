//! End-to-end tests of the command-line front end: parsing, output formats,
//! exit codes, and determinism.

use std::path::PathBuf;

use clap::Parser;
use numrad::cli::{run, Cli};

fn invoke(args: &[&str]) -> (i32, String, String) {
    let cli = Cli::try_parse_from(args).expect("argv should parse");
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(&cli, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("numrad-test-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

fn jordan_file() -> PathBuf {
    write_temp(
        "jordan.json",
        r#"{"rows": 2, "cols": 2, "entries": [[0,0],[1,0],[0,0],[0,0]]}"#,
    )
}

fn remark_file() -> PathBuf {
    write_temp(
        "remark.json",
        r#"{"rows": 3, "cols": 3, "entries": [[1,0],[1,0],[2,0],[0,0],[-1,0],[1,0],[0,0],[0,0],[0,0]]}"#,
    )
}

#[test]
fn poly_bounds_json_roots_and_validity() {
    let (code, out, _) = invoke(&["numrad", "poly-bounds", "1 0 -1", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let roots = v["roots"].as_array().unwrap();
    assert_eq!(roots.len(), 2);
    let mut mods: Vec<f64> = roots
        .iter()
        .map(|r| {
            let re = r[0].as_f64().unwrap();
            let im = r[1].as_f64().unwrap();
            (re * re + im * im).sqrt()
        })
        .collect();
    mods.sort_by(|a, b| a.partial_cmp(b).unwrap());
    assert!((mods[0] - 1.0).abs() < 1e-9 && (mods[1] - 1.0).abs() < 1e-9);
    for b in v["bounds"].as_array().unwrap() {
        if b["kind"] == "upper" {
            assert!(b["value"].as_f64().unwrap() >= 1.0 - 1e-9, "{b}");
        }
    }
    assert!(v["w"].as_f64().unwrap() >= 1.0 - 1e-9);
}

#[test]
fn poly_bounds_table_lists_all_bounds() {
    let (code, out, _) = invoke(&[
        "numrad",
        "poly-bounds",
        "1 1 0 0 0 -2",
        "--theta-grid",
        "360",
    ]);
    assert_eq!(code, 0);
    for name in [
        "carmichael_mason",
        "cauchy",
        "fujii_kubo",
        "kittaneh",
        "paul_bag_1",
        "paul_bag_2",
        "aok_poly",
        "alpin",
        "thm41",
        "thm42",
        "numerical_radius_exactish",
        "max_root_modulus",
    ] {
        assert!(out.contains(name), "table is missing {name}:\n{out}");
    }
}

#[test]
fn json_output_reparses_to_identical_values() {
    let args = &["numrad", "poly-bounds", "1 1 0 0 0 -2", "--format", "json", "--theta-grid", "360"];
    let (code, out1, _) = invoke(args);
    let (_, out2, _) = invoke(args);
    assert_eq!(code, 0);
    // determinism: identical request, identical bytes
    assert_eq!(out1, out2);
    // round-trip: values survive serialization bit-for-bit
    let v: serde_json::Value = serde_json::from_str(&out1).unwrap();
    let reprinted = serde_json::to_string_pretty(&v).unwrap();
    let v2: serde_json::Value = serde_json::from_str(&reprinted).unwrap();
    assert_eq!(v, v2);
}

#[test]
fn matrix_bounds_on_remark_matrix() {
    let file = remark_file();
    let (code, out, _) = invoke(&[
        "numrad",
        "matrix-bounds",
        file.to_str().unwrap(),
        "--format",
        "json",
        "--theta-grid",
        "720",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let thm22 = v["bounds"]
        .as_array()
        .unwrap()
        .iter()
        .find(|b| b["name"] == "thm22_upper")
        .unwrap()["value"]
        .as_f64()
        .unwrap();
    assert!(thm22 <= 1.784 + 5e-3, "thm22 = {thm22}");
    let w = v["w"].as_f64().unwrap();
    assert!(w <= thm22 + 1e-6);
}

#[test]
fn range_data_on_jordan_block_is_a_half_radius_circle() {
    let file = jordan_file();
    let (code, out, _) = invoke(&["numrad", "range-data", file.to_str().unwrap()]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next().unwrap(), "theta,lambda_max,re,im");
    let mut rows = 0;
    for line in lines {
        let fields: Vec<f64> = line.split(',').map(|f| f.parse().unwrap()).collect();
        assert_eq!(fields.len(), 4);
        let modulus = (fields[2] * fields[2] + fields[3] * fields[3]).sqrt();
        assert!((modulus - 0.5).abs() < 1e-6, "|z| = {modulus}");
        assert!((fields[1] - 0.5).abs() < 1e-9);
        rows += 1;
    }
    assert_eq!(rows, 3600);
}

#[test]
fn spectral_bound_subcommand() {
    let a = write_temp(
        "pair-a.json",
        r#"{"rows": 2, "cols": 2, "entries": [[1,0],[0,0],[0,0],[1,0]]}"#,
    );
    let b = write_temp(
        "pair-b.json",
        r#"{"rows": 2, "cols": 2, "entries": [[0,0],[1,0],[1,0],[0,0]]}"#,
    );
    let (code, out, _) = invoke(&[
        "numrad",
        "spectral-bound",
        a.to_str().unwrap(),
        b.to_str().unwrap(),
        "--format",
        "csv",
    ]);
    assert_eq!(code, 0);
    // single pair (I, X): bound = w(X I) = w(X) = 1
    let line = out.lines().nth(1).unwrap();
    let value: f64 = line.rsplit(',').next().unwrap().parse().unwrap();
    assert!((value - 1.0).abs() < 1e-8, "{out}");

    let (code, _, err) = invoke(&["numrad", "spectral-bound", a.to_str().unwrap()]);
    assert_eq!(code, 2, "odd file list must be a usage error: {err}");
}

#[test]
fn parse_errors_exit_with_code_2() {
    let (code, _, err) = invoke(&["numrad", "poly-bounds", "1 2"]);
    assert_eq!(code, 2);
    assert!(err.contains("at least 3 coefficients"), "{err}");

    let (code, _, _) = invoke(&["numrad", "poly-bounds", "1 bogus 3"]);
    assert_eq!(code, 2);

    let (code, _, _) = invoke(&["numrad", "poly-bounds", "0 1 1"]);
    assert_eq!(code, 2);

    let (code, _, _) = invoke(&["numrad", "matrix-bounds", "/nonexistent/matrix.json"]);
    assert_eq!(code, 2);

    let bad = write_temp(
        "bad-entries.json",
        r#"{"rows": 2, "cols": 2, "entries": [[1,0]]}"#,
    );
    let (code, _, err) = invoke(&["numrad", "matrix-bounds", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("does not match"), "{err}");
}

#[test]
fn numerical_failures_exit_with_code_3() {
    // a valid request with an impossible engine configuration
    let file = jordan_file();
    let (code, _, err) = invoke(&[
        "numrad",
        "matrix-bounds",
        file.to_str().unwrap(),
        "--theta-grid",
        "4",
    ]);
    assert_eq!(code, 3, "{err}");
    assert!(err.contains("theta_grid"), "{err}");
}

#[test]
fn csv_output_has_stable_header() {
    let (code, out, _) = invoke(&[
        "numrad",
        "poly-bounds",
        "1 0 -1",
        "--format",
        "csv",
        "--theta-grid",
        "360",
    ]);
    assert_eq!(code, 0);
    assert!(out.starts_with("name,kind,value\n"));
    assert!(out.lines().count() > 9);
}
