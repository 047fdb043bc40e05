use serde_json::{json, Value};
use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_builtmat"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json_of(o: &Output) -> Value {
    let text = if o.stdout.is_empty() { &o.stderr } else { &o.stdout };
    serde_json::from_slice(text).expect("JSON output")
}

const U33_MAX: &str = r#"{"matroid":{"uniform":{"r":3,"n":3}},"building_set":"max"}"#;
const U23_MIN: &str = r#"{"matroid":{"uniform":{"r":2,"n":3}},"building_set":"min"}"#;
const B4_PAIRS: &str =
    r#"{"matroid":{"boolean":{"n":4}},"building_set":{"explicit":[[0],[1],[2],[3],[0,1],[2,3],[0,1,2,3]]}}"#;
const U34_SMALL: &str =
    r#"{"matroid":{"uniform":{"r":3,"n":4}},"building_set":{"explicit":[[0],[1],[2],[3],[0,1],[0,1,2,3]]},"order":[0,1,2,3]}"#;

#[test]
fn chow_examples() {
    let o = run(&["chow", "--spec", U33_MAX]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_of(&o);
    assert_eq!(v["chow"], json!([1, 4, 1]));
    assert_eq!(v["methods_agree"], json!(true));
    for m in ["fy", "deletion", "filtration", "oracle"] {
        assert_eq!(v["per_method"][m], json!([1, 4, 1]), "{m}");
    }
    assert_eq!(json_of(&run(&["chow", "--spec", U23_MIN]))["chow"], json!([1, 1]));
    let o = run(&["chow", "--method", "fy", "--spec", B4_PAIRS]);
    assert_eq!(json_of(&o)["chow"], json!([1, 3, 3, 1]));
}

#[test]
fn gamma_examples() {
    let v = json_of(&run(&["gamma", "--with-descents", "--spec", U33_MAX]));
    assert_eq!(v["gamma"], json!([1, 2]));
    assert_eq!(v["match"], json!(true));
    let o = run(&["gamma", "--with-descents", "--spec", B4_PAIRS]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_of(&o);
    assert_eq!(v["gamma"], json!([1, 0]));
    assert_eq!(v["descent_formula"], json!([1, 1]));
    assert_eq!(v["match"], json!(false));
    assert_eq!(v["complete"], json!(false));
    let v = json_of(&run(&["gamma", "--spec", r#"{"matroid":{"partition":{"n":4}},"building_set":"min"}"#]));
    assert_eq!(v["gamma"], json!([1, 3]));
    let v = json_of(&run(&["gamma", "--with-complex", "--spec", U33_MAX]));
    assert_eq!(v["gamma_complex"]["f_vector"], json!([1, 2]));
    assert_eq!(v["gamma_complex"]["downward_closed"], json!(true));
}

#[test]
fn check_examples() {
    let o = run(&["check", "--what", "complete", "--spec", U34_SMALL]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_of(&o)["result"], json!(true));
    let o = run(&["check", "--what", "flag", "--spec", U34_SMALL]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(json_of(&o)["witness"]["antichain"], json!([[1], [2], [3]]));
    let atoms = r#"{"matroid":{"uniform":{"r":3,"n":4}},"building_set":{"explicit":[[0],[1],[2],[3]]}}"#;
    let o = run(&["check", "--what", "building-set", "--spec", atoms]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(json_of(&o)["witness"]["kind"], json!("MissingIrreducible"));
    let cut = r#"{"matroid":{"boolean":{"n":3}},"building_set":"max","cut":[[0,1],[0,1,2]]}"#;
    let o = run(&["check", "--what", "modular-cut", "--spec", cut]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_of(&o)["minimal"], json!([[0, 1]]));
    let bad = r#"{"matroid":{"boolean":{"n":3}},"building_set":"max","cut":[[0,1]]}"#;
    let o = run(&["check", "--what", "modular-cut", "--spec", bad]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(json_of(&o)["witness"]["kind"], json!("NotUpwardClosed"));
}

#[test]
fn m0n_table() {
    let o = run(&["m0n", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_of(&o);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0]["poincare"], json!([1]));
    assert_eq!(rows[1]["poincare"], json!([1, 1]));
    assert_eq!(rows[1]["gamma"], json!([1]));
    assert_eq!(rows[2]["poincare"], json!([1, 5, 1]));
    assert_eq!(rows[2]["gamma"], json!([1, 3]));
    assert!(rows.iter().all(|r| r["agree"] == json!(true) && r["kruskal_katona"] == json!(true)));
    assert_eq!(run(&["m0n", "--n", "9"]).status.code(), Some(2));
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(run(&["chow", "--spec", "{not json"]).status.code(), Some(2));
    let o = run(&["chow", "--spec", r#"{"matroid":{"uniform":{"r":3,"n":4}},"order":[3,2]}"#]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(json_of(&o)["location"], json!("order"));
    assert_eq!(run(&["chow", "--method", "magic", "--spec", U33_MAX]).status.code(), Some(2));
    assert_eq!(run(&["chow", "/nonexistent/file.json"]).status.code(), Some(2));
}

#[test]
fn reads_stdin_and_files() {
    let mut child = bin().args(["chow"]).stdin(Stdio::piped()).stdout(Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(U33_MAX.as_bytes()).unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(json_of(&o)["chow"], json!([1, 4, 1]));
    let path = std::env::temp_dir().join(format!("builtmat-cli-{}.json", std::process::id()));
    std::fs::write(&path, U23_MIN).unwrap();
    let o = run(&["chow", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(json_of(&o)["chow"], json!([1, 1]));
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let a = bin().args(["chow", "--corpus"]).env("BUILTMAT_THREADS", "1").output().unwrap();
    let b = bin().args(["chow", "--corpus"]).env("BUILTMAT_THREADS", "4").output().unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["failed"], json!(0));
    assert!(v["total"].as_u64().unwrap() >= 200);
    let g = run(&["gamma", "--corpus", "--with-descents"]);
    assert_eq!(g.status.code(), Some(0));
    let again = run(&["gamma", "--corpus", "--with-descents"]);
    assert_eq!(g.stdout, again.stdout);
}
