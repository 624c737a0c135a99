use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn dualcheck(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dualcheck"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_on(verb: &str, file: &str, extra: &[&str]) -> Output {
    let path = data(file);
    let mut args = vec![verb, path.to_str().unwrap()];
    args.extend_from_slice(extra);
    dualcheck(&args)
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

fn verdict<'a>(doc: &'a serde_json::Value, title: &str, axiom: &str) -> &'a serde_json::Value {
    doc["sections"]
        .as_array()
        .unwrap()
        .iter()
        .find(|s| s["title"] == title)
        .and_then(|s| {
            s["verdicts"]
                .as_array()
                .unwrap()
                .iter()
                .find(|v| v["axiom"] == axiom)
        })
        .unwrap_or_else(|| panic!("no {title}/{axiom}"))
}

#[test]
fn check_e0_classifies_without_failing() {
    let o = run_on("check", "e0.json", &["--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json(&o);
    assert_eq!(verdict(&doc, "basic semilattice axioms", "basic_semilattice")["holds"], true);
    assert_eq!(verdict(&doc, "basic lattice axioms", "basic_lattice")["holds"], false);
    assert_eq!(verdict(&doc, "basic lattice axioms", "Lattice")["holds"], false);
}

#[test]
fn spectrum_c2_flags_expected_nonseparative_failure() {
    let o = run_on("spectrum", "c2.json", &[]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("1 tight characters"));
    assert!(text.contains("separative=false"));
    assert!(text.contains("[FAIL] injective"));
}

#[test]
fn malformed_input_exits_2() {
    assert_eq!(run_on("check", "malformed.json", &[]).status.code(), Some(2));
    assert_eq!(run_on("check", "missing.json", &[]).status.code(), Some(2));
    assert_eq!(run_on("envelope", "e0.json", &["--map", data("bad_map.json").to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn unknown_verbs_and_flags_exit_2() {
    assert_eq!(dualcheck(&["frobnicate"]).status.code(), Some(2));
    let path = data("e0.json");
    assert_eq!(dualcheck(&["check", path.to_str().unwrap(), "--bogus"]).status.code(), Some(2));
}

#[test]
fn stone_needs_a_basic_lattice() {
    assert_eq!(run_on("stone", "e0.json", &[]).status.code(), Some(1));
    let o = run_on("stone", "p2.json", &[]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("2 ultrafilters"));
}

#[test]
fn envelope_factors_a_tight_map() {
    let map = data("e0_to_p2.json");
    let o = run_on("envelope", "e0.json", &["--map", map.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json(&o);
    assert_eq!(verdict(&doc, "map properties", "tight")["holds"], true);
    assert_eq!(verdict(&doc, "FG-rho", "fgrho")["holds"], true);
    assert_eq!(doc["ok"], true);
}

#[test]
fn saturate_reports_frame() {
    let o = run_on("saturate", "p2.json", &[]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("result: ok"));
}

#[test]
fn verify_single_criterion() {
    let o = dualcheck(&["verify", "8"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("criterion 08 [PASS]"));
    assert_eq!(dualcheck(&["verify", "99"]).status.code(), Some(2));
}

#[test]
fn gen_is_deterministic_and_loadable() {
    let a = dualcheck(&["gen", "random", "--size", "5", "--seed", "7"]);
    let b = dualcheck(&["gen", "random", "--size", "5", "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let dir = std::env::temp_dir().join(format!("dualcheck-gen-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("w5.json");
    let o = dualcheck(&["gen", "--out", file.to_str().unwrap(), "family", "witness"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(dualcheck(&["check", file.to_str().unwrap()]).status.code(), Some(0));
    let many = dualcheck(&["gen", "exhaustive", "--size", "3", "--reflexive"]);
    assert_eq!(json(&many).as_array().unwrap().len(), 3);
    assert_eq!(dualcheck(&["gen", "family", "torus"]).status.code(), Some(2));
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn search_finds_nothing_for_a_theorem() {
    let o = dualcheck(&["search", "separativity_chain", "--bound", "4", "--budget", "500"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("no counterexample"));
    assert_eq!(dualcheck(&["search", "no_such_suite"]).status.code(), Some(2));
}

#[test]
fn oversized_input_is_rejected() {
    assert_eq!(run_on("check", "p2.json", &["--max-size", "3"]).status.code(), Some(2));
}
