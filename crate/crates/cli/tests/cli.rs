use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const L3: &str = r#"{"n":3,"leq":[[1,1,1],[0,1,1],[0,0,1]],"mult":[[0,0,0],[0,0,1],[0,1,2]]}"#;
const TWO_FRAME: &str = r#"{"n":2,"leq":[[1,1],[0,1]],"mult":[[0,0],[0,1]]}"#;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_mulspec"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn monoid_spectrum_through_a_pipe() {
    let built = run(&["instance", "paper-3-5d"], "");
    assert!(built.status.success());
    assert_eq!(stdout(&built).trim(), L3);
    let o = run(&["spec", "-"], &stdout(&built));
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["points"], serde_json::json!([1]));
    assert_eq!(v["radical_elements"], serde_json::json!([1, 2]));
    assert_eq!(v["topology"]["sober"], Value::Bool(true));
}

#[test]
fn spec_writes_dot_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let (dot, out) = (dir.path().join("s.dot"), dir.path().join("s.json"));
    let o = run(&["spec", "-", "--dot", dot.to_str().unwrap(), "--json", out.to_str().unwrap()], L3);
    assert!(o.status.success());
    assert!(fs::read_to_string(dot).unwrap().starts_with("digraph"));
    let saved: Value = serde_json::from_str(&fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(saved, serde_json::from_str::<Value>(&stdout(&o)).unwrap());
}

#[test]
fn zn_battery_passes_and_is_deterministic() {
    let lattice = stdout(&run(&["instance", "zn", "12"], ""));
    let a = run(&["verify", "-"], &lattice);
    let b = run(&["verify", "-"], &lattice);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let reports = json_lines(&a);
    assert_eq!(reports.len(), 18);
    assert!(reports.iter().all(|r| r["pass"] == Value::Bool(true)));
}

#[test]
fn zero_product_chain_battery() {
    let chain = r#"{"n":3,"leq":[[1,1,1],[0,1,1],[0,0,1]],"mult":[[0,0,0],[0,0,0],[0,0,0]]}"#;
    let o = run(&["verify", "-", "--battery", "sober_2_6,thm_5_7"], chain);
    assert_eq!(o.status.code(), Some(0));
    let r = json_lines(&o);
    assert_eq!(r[0]["theorem"], "sober_2_6");
    assert_eq!(r[0]["pass"], true);
    assert_eq!(r[1]["theorem"], "thm_5_7");
    assert_eq!(r[1]["pass"], true);
    assert!(r[1].get("skipped").is_none());
}

#[test]
fn forced_mode_runs() {
    let o = run(&["verify", "-", "--mode", "forced"], L3);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_lines(&o).len(), 18);
}

#[test]
fn configuration_errors_stop_before_work() {
    let o = run(&["verify", "-", "--battery", "sober_2_6,nonsense"], L3);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    let o = run(&["verify", "-", "--mode", "lenient"], L3);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn validate_exit_codes() {
    assert_eq!(run(&["validate", "-"], L3).status.code(), Some(0));
    // 1·1 = 1 on a chain whose product must sit below the meet.
    let bad = r#"{"n":2,"leq":[[1,1],[0,1]],"mult":[[1,0],[0,1]]}"#;
    let o = run(&["validate", "-"], bad);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("\"valid\": false"));
    assert_eq!(run(&["validate", "-"], "{not json").status.code(), Some(2));
    assert_eq!(run(&["validate", "/no/such/file.json"], "").status.code(), Some(2));
}

#[test]
fn caps_exit_with_three() {
    assert_eq!(run(&["instance", "zn", "200"], "").status.code(), Some(3));
    assert_eq!(run(&["enumerate", "--max-size", "6"], "").status.code(), Some(3));
    assert_eq!(
        run(&["enumerate", "--max-size", "1", "--seed", "1", "--samples", "1", "--sizes", "11"], "")
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn closures_of_one_element() {
    let o = run(&["closures", "-", "--element", "0"], L3);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    for key in ["radical", "sp", "solv", "loc_solv", "Solv"] {
        assert_eq!(v[key], 1, "{key}");
    }
    assert_eq!(run(&["closures", "-", "--element", "3"], L3).status.code(), Some(2));
}

#[test]
fn algebra_instances() {
    let dir = tempfile::tempdir().unwrap();
    let c2 = write(dir.path(), "c2.json", r#"{"kind":"group","n":2,"mul":[[0,1],[1,0]]}"#);
    let o = run(&["instance", "group", &c2], "");
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["n"], 2);
    assert_eq!(run(&["instance", "ring", &c2], "").status.code(), Some(2));
    let semigroup = write(dir.path(), "s.json", r#"{"kind":"semigroup","n":1,"mul":[[0]]}"#);
    let o = run(&["instance", "semigroup", &semigroup], "");
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["n"], 2);
}

#[test]
fn enumerate_visits_every_small_lattice() {
    let o = run(&["enumerate", "--max-size", "4", "--verify"], "");
    assert_eq!(o.status.code(), Some(0));
    let summary = json_lines(&o).pop().unwrap();
    assert_eq!(summary["visited"], 3739);
    assert_eq!(summary["failures"], 0);
}

#[test]
fn seeded_samples_are_reproducible() {
    let args = ["enumerate", "--max-size", "0", "--seed", "5", "--samples", "20", "--sizes", "6,7"];
    let (a, b) = (run(&args, ""), run(&args, ""));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json_lines(&a).len(), 20);
    let o = run(&["enumerate", "--max-size", "2", "--samples", "3"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn radical_morphism_by_reference() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "l3.json", L3);
    let m = write(
        dir.path(),
        "rho.json",
        &format!(r#"{{"source":"l3.json","target":{TWO_FRAME},"f":[0,0,1]}}"#),
    );
    let o = run(&["morphism", &m, "--check"], "");
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["u"], serde_json::json!([1, 2]));
    assert_eq!(v["flags"]["strictly_compatible"], true);
    assert_eq!(v["spec_map"]["points"], serde_json::json!([[0, 1]]));
    assert!(v["certificates"].as_array().unwrap().iter().all(|c| c["pass"] == true));
}

#[test]
fn malformed_morphism_is_an_input_error() {
    let body = format!(r#"{{"source":{L3},"target":{TWO_FRAME},"f":[1,0,1]}}"#);
    assert_eq!(run(&["morphism", "-", "--check"], &body).status.code(), Some(2));
}

#[test]
fn unknown_subcommand_is_an_input_error() {
    assert_eq!(run(&["frobnicate"], "").status.code(), Some(2));
}
