use std::path::PathBuf;
use std::process::{Command, Output};

use morita_gis::graph::{graph_isomorphism, parse_graph};
use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_morita-gis")).args(args).output().expect("binary runs")
}

fn run_on(cmd: &str, file: &str, extra: &[&str]) -> Output {
    let path = data(file);
    let mut args = vec![cmd, path.to_str().unwrap()];
    args.extend_from_slice(extra);
    run(&args)
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn validate_s2() {
    let out = run_on("validate", "S2.tbl", &["--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["valid"], true);
    assert_eq!(v["size"], 2);
    assert_eq!(v["zero_index"], 0);
}

#[test]
fn validate_b2_generator_file() {
    let v = json(&run_on("validate", "B2.gen", &["--format", "json"]));
    assert_eq!(v["size"], 5);
    assert_eq!(v["combinatorial"], true);
}

#[test]
fn malformed_input_reports_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.tbl");
    std::fs::write(&path, "2 0\n0 0\n0 1 1\n").unwrap();
    let out = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn invalid_semigroup_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("null.tbl");
    std::fs::write(&path, "2 0\n0 0\n0 0\n").unwrap();
    let out = run(&["validate", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["valid"], false);
    assert_eq!(run(&["check-morita", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn missing_file_exits_3() {
    assert_eq!(run(&["validate", "/nonexistent/table.tbl"]).status.code(), Some(3));
}

#[test]
fn check_morita_verdicts() {
    let b2 = run_on("check-morita", "B2.gen", &["--format", "json"]);
    assert_eq!(b2.status.code(), Some(0));
    let v = json(&b2);
    assert_eq!(v["verdict"], "YES");
    assert_eq!((v["gamma"]["vertices"].as_u64(), v["gamma"]["edges"].as_u64()), (Some(1), Some(0)));

    let sl5 = run_on("check-morita", "SL5.tbl", &["--format", "json"]);
    assert_eq!(sl5.status.code(), Some(1));
    let v = json(&sl5);
    assert_eq!(v["reasons"][0]["code"], "P1_LOCAL_FAIL");
    assert_eq!(v["reasons"][0]["witness"], serde_json::json!(["e", "f", "g"]));

    let z = json(&run_on("check-morita", "Z2_0.tbl", &["--format", "json"]));
    assert_eq!(z["reasons"][0]["code"], "NOT_COMBINATORIAL");

    let swap = json(&run_on("check-morita", "swap.gen", &["--format", "json"]));
    assert!(swap["reasons"].as_array().unwrap().iter().any(|r| r["code"] == "NO_ZERO"));
}

#[test]
fn text_and_json_carry_the_same_fields() {
    for (cmd, file) in [("check-morita", "SG4.tbl"), ("analyze", "SL5.tbl"), ("verify-functor", "B2.gen"), ("roundtrip", "G3.graph")] {
        let v = json(&run_on(cmd, file, &["--format", "json"]));
        let text = stdout(&run_on(cmd, file, &[]));
        for key in v.as_object().unwrap().keys() {
            assert!(text.lines().any(|l| l.starts_with(&format!("{key}:"))), "{cmd} {file}: {key}");
        }
    }
}

#[test]
fn output_is_deterministic() {
    let a = run_on("analyze", "SG4.tbl", &["--format", "json", "--dot"]);
    let b = run_on("analyze", "SG4.tbl", &["--format", "json", "--dot"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn roundtrip_fixtures() {
    for (file, size) in [("G1.graph", 2), ("G2.graph", 6), ("G3.graph", 11), ("G4.graph", 15)] {
        let out = run_on("roundtrip", file, &["--format", "json"]);
        assert_eq!(out.status.code(), Some(0), "{file}");
        let v = json(&out);
        assert_eq!(v["isomorphic"], true);
        assert_eq!(v["semigroup_size"], size);
    }
}

#[test]
fn roundtrip_rejects_cycles() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("loop.graph");
    std::fs::write(&path, "vertex v\nedge e v v\n").unwrap();
    let out = run(&["roundtrip", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not acyclic"));
}

#[test]
fn verify_functor_flags() {
    for file in ["SG4.tbl", "B2.gen", "S2.tbl", "G3.graph"] {
        let out = run_on("verify-functor", file, &["--format", "json"]);
        assert_eq!(out.status.code(), Some(0), "{file}");
        let v = json(&out);
        for flag in ["functorial", "faithful", "full", "essentially_surjective"] {
            assert_eq!(v[flag], true, "{file} {flag}");
        }
    }
    assert_eq!(json(&run_on("verify-functor", "B2.gen", &["--format", "json"]))["gis_size"], 2);
    assert_eq!(run_on("verify-functor", "SL5.tbl", &[]).status.code(), Some(1));
}

#[test]
fn analyze_reports() {
    let g2 = json(&run_on("analyze", "G2.graph", &["--format", "json"]));
    assert_eq!(g2["perrot"]["proper"], true);
    assert_eq!(g2["categories"]["path"]["objects"], 2);
    assert_eq!(g2["categories"]["path"]["morphisms"], 3);
    assert_eq!(g2["p_equivalent_to_l"], true);

    let b2 = json(&run_on("analyze", "B2.gen", &["--format", "json"]));
    assert_eq!((b2["perrot"]["proper"].as_bool(), b2["perrot"]["p4"].as_bool()), (Some(false), Some(true)));

    let sl5 = json(&run_on("analyze", "SL5.tbl", &["--format", "json"]));
    assert_eq!(sl5["perrot"]["p1"], false);
    assert_eq!(sl5["perrot"]["witnesses"][0]["property"], "P1");

    let with_zero = json(&run_on("analyze", "S2.tbl", &["--format", "json", "--include-zero-object"]));
    assert_eq!(with_zero["categories"]["karoubi"]["morphisms"], 5);
    let without = json(&run_on("analyze", "S2.tbl", &["--format", "json"]));
    assert_eq!(without["categories"]["karoubi"]["morphisms"], 2);
}

#[test]
fn representative_policy_flag() {
    let min = json(&run_on("check-morita", "SG4.tbl", &["--format", "json", "--rep", "min"]));
    let max = json(&run_on("check-morita", "SG4.tbl", &["--format", "json", "--rep", "max"]));
    assert_eq!(min["gamma"]["edges"], max["gamma"]["edges"]);
    let g = |v: &Value| parse_graph(v["gamma"]["graph_text"].as_str().unwrap()).unwrap();
    assert!(graph_isomorphism(&g(&min), &g(&max)).unwrap().is_some());
}

#[test]
fn emitted_dot_parses_back() {
    let cases = [
        ("check-morita", "SG4.tbl"),
        ("check-morita", "B2.gen"),
        ("roundtrip", "G1.graph"),
        ("roundtrip", "G2.graph"),
        ("roundtrip", "G3.graph"),
        ("roundtrip", "G4.graph"),
        ("verify-functor", "G3.graph"),
        ("analyze", "SL5.tbl"),
        ("analyze", "B2.gen"),
    ];
    for (cmd, file) in cases {
        let out = run_on(cmd, file, &["--format", "dot"]);
        assert_eq!(out.status.code(), Some(0), "{cmd} {file}");
        let g = parse_graph(&stdout(&out)).unwrap_or_else(|e| panic!("{cmd} {file}: {e}"));
        if cmd == "roundtrip" {
            let original = parse_graph(&std::fs::read_to_string(data(file)).unwrap()).unwrap();
            assert!(graph_isomorphism(&g, &original).unwrap().is_some(), "{file}");
        }
    }
}

#[test]
fn dot_unavailable_for_validate() {
    assert_eq!(run_on("validate", "S2.tbl", &["--format", "dot"]).status.code(), Some(3));
}

#[test]
fn bound_must_be_positive() {
    assert_ne!(run_on("roundtrip", "G2.graph", &["--bound", "0"]).status.code(), Some(0));
    assert_eq!(run_on("roundtrip", "G2.graph", &["--bound", "1"]).status.code(), Some(2));
}

#[test]
fn explicit_names_file() {
    let dir = tempfile::tempdir().unwrap();
    let names = dir.path().join("s2.names");
    std::fs::write(&names, "zero\nidem\n").unwrap();
    let v = json(&run_on("validate", "S2.tbl", &["--format", "json", "--names", names.to_str().unwrap()]));
    assert_eq!(v["zero"], "zero");
}
