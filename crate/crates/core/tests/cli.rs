use std::path::PathBuf;
use std::process::Command;

use augbergman::bergman::{augmented_bergman, LayersDocument};
use augbergman::cli::{run_with, EXIT_BUDGET, EXIT_INPUT, EXIT_OK};
use augbergman::complex::SimplicialComplex;
use augbergman::decompose::{check_certificate, DecompositionCertificate};
use augbergman::instances;
use augbergman::shelling::{verify_shelling, ShellingOrder, ShellingReport};
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("augbergman").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn run_json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let (code, out, err) = run(&full);
    assert_eq!(code, EXIT_OK, "{err}");
    serde_json::from_str(&out).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("augbergman-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn facets_round_trip_through_the_complex_format() {
    let v = run_json(&["facets", "example-1-3"]);
    let complex = SimplicialComplex::from_json(&v.to_string()).unwrap();
    let f = instances::worked_example();
    assert_eq!(complex, augmented_bergman(&f).unwrap());
}

#[test]
fn found_shelling_reports_verify_when_read_back() {
    let v = run_json(&[
        "shelling-find",
        "uniform:2,4",
        "--constraint",
        "flags-first",
    ]);
    assert_eq!(v["status"], "found");
    let path = scratch("report.json", &v.to_string());
    let (code, out, _) = run(&[
        "shelling-verify",
        "uniform:2,4",
        "--order",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("valid"), "{out}");

    let report: ShellingReport = serde_json::from_value(v.clone()).unwrap();
    let order = ShellingOrder::new(report.order);
    let delta = augmented_bergman(&instances::uniform(2, 4).unwrap()).unwrap();
    assert!(verify_shelling(&delta, &order).unwrap().valid);
}

#[test]
fn invalid_order_names_the_position() {
    let path = scratch(
        "bad.json",
        r#"[["y:1","y:2"],["y:3","y:4"],["y:1","y:3"],["y:2","y:4"],["y:1","y:4"],["y:2","y:3"]]"#,
    );
    let v = run_json(&[
        "shelling-verify",
        "uniform:2,4",
        "--complex",
        "independence",
        "--order",
        path.to_str().unwrap(),
    ]);
    assert_eq!(v["valid"], false);
    assert_eq!(v["failed_at"], 2);
}

#[test]
fn certificate_and_layers_round_trip() {
    let v = run_json(&["vd-matroid", "uniform:2,3"]);
    let cert: DecompositionCertificate = serde_json::from_value(v["certificate"].clone()).unwrap();
    let delta = augmented_bergman(&instances::uniform(2, 3).unwrap()).unwrap();
    assert!(check_certificate(&delta, &cert).valid);
    assert_eq!(v["shelling_verified"], true);

    let layers = run_json(&["layers", "example-1-3"]);
    let doc: LayersDocument = serde_json::from_value(layers).unwrap();
    let total = doc.layers.flag.len() + doc.layers.hybrid.len() + doc.layers.independent.len();
    let f = instances::worked_example();
    assert_eq!(total, augmented_bergman(&f).unwrap().facet_count());
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        ["facets", "random:4,0.5", "--seed", "7"],
        ["equivalence", "random:4,0.5", "--seed", "7"],
        ["vd", "random:4,0.5", "--seed", "7"],
    ] {
        let first = run(&args);
        let second = run(&args);
        assert_eq!(first, second);
    }
    assert_ne!(
        run(&["facets", "random:5,0.4", "--seed", "1"]).1,
        run(&["facets", "random:5,0.4", "--seed", "2"]).1
    );
}

#[test]
fn instance_files_in_each_form_load() {
    let flats = scratch(
        "flats.json",
        r#"{"ground_set":["a","b","c"],"proper_flats":[[],["a"],["b"],["c"]]}"#,
    );
    let uniform = scratch(
        "uniform.json",
        r#"{"ground_set":["a","b","c"],"matroid":{"type":"uniform","rank":2}}"#,
    );
    let bases = scratch(
        "bases.json",
        r#"{"matroid":{"type":"bases","bases":[["a","b"],["a","c"],["b","c"]]}}"#,
    );
    let expected = run(&["hvector", "uniform:2,3"]).1;
    for path in [&flats, &uniform, &bases] {
        let (code, out, err) = run(&["hvector", path.to_str().unwrap()]);
        assert_eq!(code, EXIT_OK, "{err}");
        assert_eq!(out, expected);
    }
}

#[test]
fn malformed_json_reports_a_position() {
    let path = scratch("broken.json", "{\"ground_set\": [\"a\",\n  \"b\" \"c\"]}");
    let (code, _, err) = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["validate", "uniform:2,4"]).0, EXIT_OK);
    assert_eq!(run(&["--help"]).0, EXIT_OK);
    assert_eq!(run(&["nonsense"]).0, EXIT_INPUT);
    assert_eq!(
        run(&["validate", "/nonexistent/instance.json"]).0,
        EXIT_INPUT
    );
    assert_eq!(run(&["vd-matroid", "example-1-3"]).0, EXIT_INPUT);
    assert_eq!(
        run(&["facets", "example-1-3", "--budget", "0"]).0,
        EXIT_INPUT
    );
    assert_eq!(
        run(&["shelling-find", "example-1-3", "--budget", "1"]).0,
        EXIT_BUDGET
    );
}

#[test]
fn two_wedge_flag_to_basis_names_the_flat() {
    let v = run_json(&["flag-to-basis", "two-wedge"]);
    assert_eq!(v["status"], "contraction_not_shellable");
    assert_eq!(v["flat"], "{}");
}

#[test]
fn formula_flags_the_worked_example() {
    let v = run_json(&["formula", "example-1-3"]);
    assert_eq!(v["agree"], false);
    assert_eq!(v["actual"], serde_json::json!([1, 14, 19, -2]));
}

#[test]
fn binary_matches_library_entry_point() {
    let output = Command::new(env!("CARGO_BIN_EXE_augbergman"))
        .args(["hvector", "example-1-3"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(EXIT_OK));
    assert_eq!(
        String::from_utf8(output.stdout).unwrap(),
        run(&["hvector", "example-1-3"]).1
    );

    let output = Command::new(env!("CARGO_BIN_EXE_augbergman"))
        .args(["shelling-find", "example-1-3", "--budget", "1"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(EXIT_BUDGET));
}
