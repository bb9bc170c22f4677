//! Golden-output tests against the built `countable` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(fixture(name)).unwrap()
}

fn countable(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_countable"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> &str {
    std::str::from_utf8(&o.stdout).unwrap()
}

fn stderr(o: &Output) -> &str {
    std::str::from_utf8(&o.stderr).unwrap()
}

#[test]
fn bij_int_nine() {
    let o = countable(&["bij", "int", "9"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "-4\n");
    assert!(o.stderr.is_empty());
}

#[test]
fn bij_even_inverse_of_odd_is_domain_error() {
    let o = countable(&["bij", "even", "7", "--inverse"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(o.stdout.is_empty());
    assert!(stderr(&o).contains("7 is not even"));
}

#[test]
fn enum_prefixes() {
    let o = countable(&["enum", "q+", "--take", "9"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), golden("enum_qplus_9.expected"));
    let o = countable(&["enum", "z", "--take", "7"]);
    assert_eq!(stdout(&o), golden("enum_z_7.expected"));
}

#[test]
fn enum_index_of() {
    let o = countable(&["enum", "q+", "--index-of", "2/3"]);
    assert_eq!(stdout(&o), "7\n");
    let o = countable(&["enum", "evens", "--index-of", "7"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("not in evens"), "{}", stderr(&o));
}

#[test]
fn hotel_script() {
    let script = fixture("hotel_demo.txt");
    let o = countable(&["hotel", "run", script.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o), golden("hotel_demo.expected"));
}

#[test]
fn hotel_missing_file() {
    let o = countable(&["hotel", "run", "/nonexistent/script.txt"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn diagonal_worked_list() {
    let list = fixture("worked_list.txt");
    let o = countable(&["diagonal", list.to_str().unwrap()]);
    assert_eq!(stdout(&o), golden("diagonal_worked.expected"));
    let o = countable(&["diagonal", list.to_str().unwrap(), "--safe"]);
    assert_eq!(stdout(&o), golden("diagonal_worked_safe.expected"));
    let o = countable(&["diagonal", list.to_str().unwrap(), "--depth", "5"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn compare_checks_witness_files() {
    let ok = fixture("crossed_witness.txt");
    let o = countable(&[
        "compare",
        "--left",
        "1,2,3",
        "--right",
        "a,b,c,d",
        "--check",
        ok.to_str().unwrap(),
    ]);
    assert_eq!((o.status.code(), stdout(&o)), (Some(0), "valid\n"));
    let bad = fixture("repeated_witness.txt");
    let o = countable(&[
        "compare",
        "--left",
        "1,2,3",
        "--right",
        "a,b,c",
        "--check",
        bad.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("more than once"));
}

#[test]
fn unknown_verb_is_usage_error() {
    let o = countable(&["count-the-reals"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
}

#[test]
fn output_is_deterministic() {
    let args = [
        "compare",
        "--left",
        "1,2,3",
        "--right",
        "a,b,c,d",
        "--witnesses",
    ];
    let first = countable(&args);
    let second = countable(&args);
    assert_eq!(first.stdout, second.stdout);
    let text = stdout(&first);
    let blocks = text.split("# pairing ").skip(1).count();
    assert_eq!(blocks, 24);
}
