use std::io::Write;
use std::process::{Command, Output, Stdio};

use tempfile::NamedTempFile;

fn graph_file(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn named(name: &str, size: Option<usize>) -> NamedTempFile {
    graph_file(&tensorcount::graph::make_named(name, size).unwrap().to_text())
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tensorcount")).args(args).output().unwrap()
}

fn run_on(sub: &[&str], file: &NamedTempFile) -> Output {
    let mut args = sub.to_vec();
    args.push(file.path().to_str().unwrap());
    run(&args)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const TRIANGLE: &str = "n 3\n0 1\n1 2\n0 2\n";

#[test]
fn colorings_prints_a_bare_integer() {
    let o = run_on(&["colorings", "--r", "3"], &graph_file(TRIANGLE));
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "6\n");
}

#[test]
fn hamiltonian_on_petersen() {
    let o = run_on(&["hamiltonian"], &named("petersen", None));
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "0\n"));
    let o = run_on(&["hamiltonian"], &named("complete", Some(7)));
    assert_eq!(stdout(&o), "360\n");
}

#[test]
fn tait_rejects_non_cubic() {
    let o = run_on(&["tait"], &named("complete", Some(5)));
    assert_eq!(o.status.code(), Some(3));
    assert!(o.stdout.is_empty());
    assert!(!o.stderr.is_empty());
    let o = run_on(&["tait"], &named("complete", Some(4)));
    assert_eq!(stdout(&o), "6\n");
}

#[test]
fn spanning_cycles_and_eval() {
    assert_eq!(stdout(&run_on(&["spanning-cycles"], &named("complete", Some(6)))), "70\n");
    let tri = graph_file(TRIANGLE);
    assert_eq!(stdout(&run_on(&["eval", "--x", "1", "--t", "1"], &tri)), "2\n");
    assert_eq!(stdout(&run_on(&["eval", "--x", "1", "--t", "0"], &tri)), "1\n");
    let big = run_on(&["eval", "--x", "100000000000000000000,0", "--t", "0"], &tri);
    assert_eq!(stdout(&big), "1000000000000000000000000000000000000000000000000000000000000\n");
    let bad = run_on(&["eval", "--x", "1,a", "--t", "0"], &tri);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn spectrum_json_is_deterministic() {
    let k5 = named("complete", Some(5));
    let a = run_on(&["spectrum"], &k5);
    let b = run_on(&["spectrum", "--threads", "3"], &k5);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), r#"{"n": 5, "spectrum": {"[]": 1, "[3]": 10, "[4]": 15, "[5]": 12}}"#.to_owned() + "\n");
    assert_eq!(a.stdout, b.stdout);
    let capped = run_on(&["spectrum", "--max-weight", "3"], &k5);
    assert_eq!(stdout(&capped), "{\"n\": 5, \"spectrum\": {\"[]\": 1, \"[3]\": 10}}\n");
    let doubled = graph_file("n 3\n0 1\n0 1\n1 2\n1 2\n");
    assert_eq!(
        stdout(&run_on(&["spectrum"], &doubled)),
        "{\"n\": 3, \"spectrum\": {\"[]\": 1, \"[2]\": 2}}\n"
    );
}

#[test]
fn plan_strategies() {
    let k4 = named("complete", Some(4));
    assert_eq!(stdout(&run_on(&["plan"], &k4)), "order: 0 1 2 3\ncost: 33\n");
    assert_eq!(
        stdout(&run_on(&["plan", "--strategy", "given", "--order", "3 2 1 0", "--r", "3"], &k4)),
        "order: 3 2 1 0\ncost: 136\n"
    );
    let ex = run_on(&["plan", "--strategy", "exhaustive"], &k4);
    assert_eq!(stdout(&ex), "order: 0 1 2 3\ncost: 33\n");
    assert_eq!(run_on(&["plan", "--strategy", "given"], &k4).status.code(), Some(2));
    assert_eq!(run_on(&["plan", "--strategy", "given", "--order", "0 1"], &k4).status.code(), Some(2));
    let c20 = named("cycle", Some(20));
    assert_eq!(run_on(&["plan", "--strategy", "exhaustive"], &c20).status.code(), Some(3));
}

#[test]
fn verify_passes_on_small_graphs() {
    for f in [named("petersen", None), named("complete", Some(5)), graph_file("n 2\n0 0\n0 1\n0 1\n")] {
        let o = run_on(&["verify"], &f);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        assert!(!stdout(&o).contains("MISMATCH"));
    }
}

#[test]
fn reads_stdin_and_reports_input_errors() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_tensorcount"))
        .args(["colorings", "--r", "3", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(TRIANGLE.as_bytes()).unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(stdout(&o), "6\n");

    let o = run_on(&["hamiltonian"], &graph_file("n 3\n0 5\n"));
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    assert_eq!(run(&["hamiltonian", "/nonexistent/graph"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}
