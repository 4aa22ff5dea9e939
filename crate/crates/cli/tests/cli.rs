use serde_json::Value;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn primedfa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_primedfa"))
        .args(args)
        .env_remove("PRIMEDFA_STATE_BUDGET")
        .output()
        .expect("binary runs")
}

fn with_data(args: &[&str], file: &str) -> Output {
    let path = data(file);
    let mut all: Vec<&str> = vec![args[0], path.to_str().unwrap()];
    all.extend_from_slice(&args[1..]);
    primedfa(&all)
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn classify_abb_composite() {
    let out = with_data(&["classify"], "abb_composite.json");
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["is_mls_adfa_plus"], true);
    assert_eq!(v["lin"], 2);
    // key order is part of the output format
    let text = String::from_utf8_lossy(&out.stdout);
    let order = [
        "is_minimal",
        "is_safety",
        "is_adfa_plus",
        "is_linear",
        "is_mls_adfa_plus",
        "lin",
        "accepting_sink",
        "rejecting_sink",
    ];
    let positions: Vec<usize> = order
        .iter()
        .map(|k| text.find(&format!("\"{k}\"")).expect("key present"))
        .collect();
    assert!(positions.windows(2).all(|p| p[0] < p[1]), "{text}");
}

#[test]
fn prime_abb_prime_reports_witness() {
    let out = with_data(&["prime"], "abb_prime.json");
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["verdict"], "Prime");
    assert_eq!(v["witness"], "abb");
    assert_eq!(v["method"], "mls");
    assert_eq!(v["evidence"].as_array().unwrap().len(), 3);
}

#[test]
fn prime_methods_agree_on_abb() {
    for method in ["mls", "brute-safety", "brute-general"] {
        let a = json(&with_data(
            &["prime", "--method", method],
            "abb_composite.json",
        ));
        let b = json(&with_data(&["prime", "--method", method], "abb_prime.json"));
        assert_eq!(a["verdict"], "Composite", "{method}");
        assert_eq!(b["verdict"], "Prime", "{method}");
        assert_eq!(b["witness"], "abb", "{method}");
    }
}

#[test]
fn prime_rejects_non_mls_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("even.json");
    std::fs::write(
        &path,
        r#"{"alphabet":["a"],"num_states":2,"initial":0,"accepting":[0],"transitions":[[1],[0]]}"#,
    )
    .unwrap();
    let out = primedfa(&["prime", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert_eq!(json(&out)["kind"], "precondition");
}

#[test]
fn sat_and_unsat() {
    let out = with_data(&["sat"], "phi0.cnf");
    assert_eq!(code(&out), 0);
    assert_eq!(String::from_utf8_lossy(&out.stdout), "SAT\nv 1 2 0\n");

    let out = with_data(&["sat"], "contradiction.cnf");
    assert_eq!(code(&out), 0);
    assert_eq!(String::from_utf8_lossy(&out.stdout), "UNSAT\n");

    let out = with_data(&["sat"], "tautology.cnf");
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("SAT\n"));
}

#[test]
fn pump_example() {
    let out = with_data(
        &["pump", "--word", "abb", "-i", "1", "-j", "2", "-l", "0"],
        "abb_composite.json",
    );
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["word"], "bb");
    assert_eq!(v["accepted"], false);

    let out = with_data(
        &["pump", "--word", "abb", "-i", "2", "-j", "2", "-l", "0"],
        "abb_composite.json",
    );
    assert_eq!(code(&out), 2);
}

#[test]
fn reduce_builds_cnf_automaton() {
    let dir = tempfile::tempdir().unwrap();
    let dfa_path = dir.path().join("phi0.json");
    let out = with_data(&["reduce", "-o", dfa_path.to_str().unwrap()], "phi0.cnf");
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&dfa_path).unwrap()).unwrap();
    assert_eq!(v["num_states"], 16);
    assert_eq!(v["alphabet"], serde_json::json!(["0", "1", "c", "d"]));

    let out = primedfa(&["classify", dfa_path.to_str().unwrap()]);
    let report = json(&out);
    assert_eq!(report["is_mls_adfa_plus"], true);
    assert_eq!(report["lin"], 13);

    let out = with_data(&["reduce"], "tautology.cnf");
    assert_eq!(code(&out), 2);
}

#[test]
fn minimize_round_trip_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let y = dir.path().join("y.json");
    let z = dir.path().join("z.json");
    assert_eq!(
        code(&with_data(
            &["minimize", "-o", y.to_str().unwrap()],
            "abb_prime.json"
        )),
        0
    );
    assert_eq!(
        code(&primedfa(&[
            "minimize",
            y.to_str().unwrap(),
            "-o",
            z.to_str().unwrap()
        ])),
        0
    );
    let first = std::fs::read(&y).unwrap();
    assert_eq!(first, std::fs::read(&z).unwrap());
    assert!(first.ends_with(b"\n"));
}

#[test]
fn gen_is_deterministic() {
    let args = ["gen", "--lin", "4", "--alphabet", "3", "--seed", "42"];
    let a = primedfa(&args);
    let b = primedfa(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["num_states"], 7);

    let other = primedfa(&["gen", "--lin", "4", "--alphabet", "3", "--seed", "43"]);
    assert_eq!(code(&other), 0);

    for kind in ["linear", "non-linear"] {
        let out = primedfa(&["gen", "--lin", "3", "--seed", "1", "--kind", kind]);
        assert_eq!(code(&out), 0, "{kind}");
    }
}

#[test]
fn decompose_writes_parts_and_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("parts");
    let out = with_data(
        &["decompose", "-o", out_dir.to_str().unwrap(), "--verify"],
        "abb_composite.json",
    );
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let manifest: Value =
        serde_json::from_str(&std::fs::read_to_string(out_dir.join("manifest.json")).unwrap())
            .unwrap();
    assert_eq!(manifest, json(&out));
    assert_eq!(manifest["verified"], true);
    assert_eq!(manifest["source_index"], 5);
    let parts = manifest["parts"].as_array().unwrap();
    assert_eq!(parts.len(), 3);
    assert_eq!(
        parts[0]["provenance"],
        serde_json::json!({"kind": "skip_state", "i": 1})
    );
    assert_eq!(
        parts[2]["provenance"],
        serde_json::json!({"kind": "pump_gadget", "word": "abb", "i": 1, "j": 2})
    );
    for (k, part) in parts.iter().enumerate() {
        let file = part["file"].as_str().unwrap();
        assert_eq!(file, format!("part_{k:03}.json"));
        let report = json(&primedfa(&[
            "classify",
            out_dir.join(file).to_str().unwrap(),
        ]));
        assert_eq!(report["is_minimal"], true);
    }
}

#[test]
fn decompose_inline_and_prime_input() {
    let out = with_data(&["decompose"], "abb_composite.json");
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["parts"].as_array().unwrap().len(), 3);
    assert_eq!(v["parts"][2]["dfa"]["num_states"], 4);

    let out = with_data(&["decompose"], "abb_prime.json");
    assert_eq!(code(&out), 2);
    assert_eq!(json(&out)["kind"], "precondition");
}

#[test]
fn state_budget_is_enforced() {
    let out = Command::new(env!("CARGO_BIN_EXE_primedfa"))
        .args(["decompose", data("abb_composite.json").to_str().unwrap()])
        .env("PRIMEDFA_STATE_BUDGET", "2")
        .output()
        .unwrap();
    assert_eq!(code(&out), 3);
    assert_eq!(json(&out)["kind"], "inconclusive");

    let out = Command::new(env!("CARGO_BIN_EXE_primedfa"))
        .args(["decompose", data("abb_composite.json").to_str().unwrap()])
        .env("PRIMEDFA_STATE_BUDGET", "lots")
        .output()
        .unwrap();
    assert_eq!(code(&out), 1);
}

#[test]
fn error_paths_emit_json() {
    let cases: [(&[&str], i32); 5] = [
        (&["bogus"], 1),
        (&["prime"], 1),
        (&["prime", "/nonexistent/x.json"], 2),
        (&["gen", "--lin", "0"], 1),
        (&["gen", "--lin", "2", "--alphabet", "40"], 2),
    ];
    for (args, expected) in cases {
        let out = primedfa(args);
        assert_eq!(code(&out), expected, "{args:?}");
        let v = json(&out);
        assert!(v["error"].is_string(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }

    let out = with_data(&["sat"], "bad_literal.cnf");
    assert_eq!(code(&out), 2);
    let v = json(&out);
    assert_eq!(v["kind"], "malformed_input");
    assert!(v["context"].as_str().unwrap().ends_with("bad_literal.cnf"));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(
        &bad,
        r#"{"alphabet":["a"],"num_states":1,"initial":3,"accepting":[],"transitions":[[0]]}"#,
    )
    .unwrap();
    let out = primedfa(&["classify", bad.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert_eq!(json(&out)["kind"], "malformed_input");
}

#[test]
fn prime_inconclusive_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("big.json");
    let out = primedfa(&[
        "gen",
        "--lin",
        "6",
        "--alphabet",
        "3",
        "--seed",
        "9",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let out = primedfa(&[
        "prime",
        path.to_str().unwrap(),
        "--method",
        "brute-safety",
        "--candidate-budget",
        "10",
    ]);
    assert_eq!(code(&out), 3);
    assert_eq!(json(&out)["kind"], "inconclusive");
}

#[test]
fn help_exits_zero() {
    let out = primedfa(&["--help"]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("decompose"));
}
