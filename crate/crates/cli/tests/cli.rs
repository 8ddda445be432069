use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quasihopf")).args(args).current_dir(dir).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn setup() -> TempDir {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("z3.cayley"), "# cyclic group\n3\n0 1 2\n1 2 0\n2 0 1\n").unwrap();
    dir
}

fn build_kz3(dir: &Path) {
    let out = run(dir, &["hopf", "build-kq", "z3.cayley", "--field", "Q", "--json", "kz3.json"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn build_then_check() {
    let dir = setup();
    build_kz3(dir.path());
    let out = run(dir.path(), &["hopf", "check", "kz3.json", "--json", "report.json", "--derived"]);
    assert_eq!(code(&out), 0);
    let report: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("report.json")).unwrap()).unwrap();
    let checks = report["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["pass"] == true));
    assert!(checks.iter().any(|c| c["id"] == "coassociativity"));
    assert_eq!(report["manifest"]["field"], "Q");
    assert_eq!(report["manifest"]["inputs"][0], "kz3.json");
}

#[test]
fn mutated_antipode_fails_with_witness() {
    let dir = setup();
    build_kz3(dir.path());
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("kz3.json")).unwrap()).unwrap();
    v["antipode"][1][3] = "2/1".into();
    std::fs::write(dir.path().join("broken.json"), v.to_string()).unwrap();
    let out = run(dir.path(), &["hopf", "check", "broken.json", "--json", "report.json"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("FAIL     hopf-axioms            antipode-left "));
    let report: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("report.json")).unwrap()).unwrap();
    let failed = report["checks"].as_array().unwrap().iter().find(|c| c["pass"] == false).unwrap();
    assert_eq!(failed["id"], "antipode-left");
    assert_ne!(failed["witness"]["lhs"], failed["witness"]["rhs"]);

    let rendered = run(dir.path(), &["report", "render", "report.json"]);
    assert_eq!(code(&rendered), 1);
    assert!(stdout(&rendered).contains("witness grades="));
}

#[test]
fn enumerate_order_three() {
    let dir = setup();
    let out = run(dir.path(), &["quasigroup", "enumerate", "--order", "3", "--json", "loops.json"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("# 1 IP loops of order 3\n"));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("loops.json")).unwrap()).unwrap();
    assert_eq!(v["count"], 1);
    let out = run(dir.path(), &["quasigroup", "enumerate", "--order", "8", "--associative", "false"]);
    assert!(stdout(&out).starts_with("# 3 IP loops of order 8\n"));
}

#[test]
fn input_errors_exit_two() {
    let dir = setup();
    std::fs::write(dir.path().join("bad.cayley"), "2\n0 1\n0 1\n").unwrap();
    std::fs::write(dir.path().join("garbage.json"), "{not json").unwrap();
    for args in [
        vec!["hopf", "check", "missing.json"],
        vec!["hopf", "check", "garbage.json"],
        vec!["hopf", "build-kq", "bad.cayley"],
        vec!["quasigroup", "check", "no-such-loop"],
        vec!["quasigroup", "enumerate", "--order", "9"],
        vec!["hopf", "build-kq", "z3.cayley", "--field", "F4"],
        vec!["report", "render", "garbage.json"],
        vec!["frobnicate"],
    ] {
        let out = run(dir.path(), &args);
        assert_eq!(code(&out), 2, "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn field_mismatch_is_an_input_error() {
    let dir = setup();
    build_kz3(dir.path());
    let out = run(dir.path(), &["hopf", "check", "kz3.json", "--field", "F5"]);
    assert_eq!(code(&out), 2);
    let out = run(dir.path(), &["hopf", "build-kq", "z3.cayley", "--field", "F5", "--json", "kz3f5.json"]);
    assert_eq!(code(&out), 0);
    assert_eq!(code(&run(dir.path(), &["hopf", "check", "kz3f5.json", "--parallel", "2"])), 0);
}

#[test]
fn associator_needs_associative_grading() {
    let dir = setup();
    let out = run(dir.path(), &["hopf", "build-kq", "ip_min_nonassoc", "--json", "kl.json"]);
    assert_eq!(code(&out), 0);
    assert_eq!(code(&run(dir.path(), &["hopf", "associator", "kl.json"])), 2);
    build_kz3(dir.path());
    assert_eq!(code(&run(dir.path(), &["hopf", "associator", "kz3.json"])), 0);
    assert_eq!(code(&run(dir.path(), &["hopf", "classify", "kl.json"])), 0);
}

#[test]
fn galois_commands() {
    let dir = setup();
    build_kz3(dir.path());
    assert_eq!(code(&run(dir.path(), &["galois", "check", "kz3.json"])), 0);
    let out = run(dir.path(), &["galois", "reconstruct", "kz3.json", "--out", "rebuilt.json"]);
    assert_eq!(code(&out), 0);
    let a = std::fs::read_to_string(dir.path().join("kz3.json")).unwrap();
    let b = std::fs::read_to_string(dir.path().join("rebuilt.json")).unwrap();
    assert_eq!(a, b);
}

fn write_module(dir: &Path) {
    // kX over Z3 with one basis vector per grade is the regular module
    let mut actions = vec![];
    let mut coaction = vec![];
    for p in 0..3 {
        for q in 0..3 {
            actions.push(format!("[{p},{q},0,0,0,\"1\"]"));
        }
        coaction.push(format!("[{p},0,0,0,\"1\"]"));
    }
    let text =
        format!(r#"{{"structure": "kz3.json", "dims": [1,1,1], "action": [{}], "coaction": [{}]}}"#, actions.join(","), coaction.join(","));
    std::fs::write(dir.join("module.json"), text).unwrap();
}

#[test]
fn module_commands() {
    let dir = setup();
    build_kz3(dir.path());
    write_module(dir.path());
    assert_eq!(code(&run(dir.path(), &["module", "check", "module.json"])), 0);
    assert_eq!(code(&run(dir.path(), &["module", "fundamental", "module.json"])), 0);
    let text = std::fs::read_to_string(dir.path().join("module.json")).unwrap();
    std::fs::write(dir.path().join("scaled.json"), text.replace("[1,0,0,0,\"1\"]", "[1,0,0,0,\"2\"]")).unwrap();
    assert_eq!(code(&run(dir.path(), &["module", "check", "scaled.json"])), 1);
}

#[test]
fn long_commands() {
    let dir = setup();
    build_kz3(dir.path());
    write_module(dir.path());
    let text = std::fs::read_to_string(dir.path().join("module.json")).unwrap();
    let right: Vec<String> = (0..3).map(|q| format!("[{q},0,0,0,\"1\"]")).collect();
    let text = text.replace("\"coaction\"", &format!("\"right_coaction\": [{}], \"unused\"", right.join(",")));
    std::fs::write(dir.path().join("dimodule.json"), text).unwrap();
    assert_eq!(code(&run(dir.path(), &["long", "check", "dimodule.json"])), 0);
    assert_eq!(code(&run(dir.path(), &["long", "long-eq", "dimodule.json"])), 0);
}

#[test]
fn smash_commands() {
    let dir = setup();
    let out = run(dir.path(), &["smash", "search-counterexample", "--max-dim", "3", "--out", "hit.json", "--json", "search.json"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("first incompatible action"));
    let out = run(dir.path(), &["smash", "check", "hit.json"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("DIFFERS  smash-equivalence      smash-is-hopf-quasigroup"));
    let out = run(dir.path(), &["smash", "build", "hit.json", "--json", "smash.json"]);
    assert_eq!(code(&out), 0);
    assert_eq!(code(&run(dir.path(), &["hopf", "check", "smash.json"])), 1);
    assert_eq!(code(&run(dir.path(), &["smash", "search-counterexample", "--max-dim", "9"])), 2);
}
