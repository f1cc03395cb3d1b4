mod common;

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use common::*;
use homhopf::format::BraidingExport;
use homhopf::h4::{h4_braiding_matrix, H4Params};

const H4_FILE: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/data/h4.alg");

fn homhopf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homhopf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn csv_rows(text: &str) -> Vec<Vec<Q>> {
    csv::ReaderBuilder::new()
        .has_headers(false)
        .from_reader(text.as_bytes())
        .records()
        .map(|r| r.unwrap().iter().map(|s| s.parse().unwrap()).collect())
        .collect()
}

#[test]
fn check_passes_on_shipped_file() {
    let o = homhopf(&["check", H4_FILE]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.trim_end().ends_with(", 0 failed"), "{out}");
    assert!(!out.contains("FAIL "));
}

#[test]
fn corrupted_constant_fails_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(H4_FILE)
        .unwrap()
        .replace("mul: g g -> 1\n", "mul: g g -> 2 * 1\n");
    let p = write(dir.path(), "bad.alg", &text);
    let o = homhopf(&["check", p.to_str().unwrap(), "--suite", "algebra"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("FAIL hom-associativity[H4]"), "{out}");
    assert!(out.contains("at basis ["), "{out}");

    let o = homhopf(&["--report", "json", "check", p.to_str().unwrap(), "--suite", "algebra"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let failed: Vec<&serde_json::Value> = v["items"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|i| i["status"] == "fail")
        .collect();
    assert!(!failed.is_empty());
    assert!(failed.iter().all(|i| i["witness"]["basis"].is_array()));
}

#[test]
fn parse_error_is_positioned_and_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "bad.alg", "[hopf H]\nbasis: 1 g\nmul: 1 1 -> 1.5 * 1\n");
    let o = homhopf(&["check", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn unbound_parameter_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(
        dir.path(),
        "q.alg",
        "[params]\nc = 2\n\n[algebra A]\nbasis: e\nmul: e e -> q * e\nunit: -> e\n",
    );
    let o = homhopf(&["check", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("line 6") && err.contains('q'), "{err}");
}

#[test]
fn missing_section_for_suite() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(
        dir.path(),
        "a.alg",
        "[algebra A]\nbasis: e\nunit: -> e\nmul: e e -> e\n",
    );
    let o = homhopf(&["check", p.to_str().unwrap(), "--suite", "coalgebra"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(
        stderr(&o).contains("suite requires coalgebra section"),
        "{}",
        stderr(&o)
    );
    let o = homhopf(&["check", p.to_str().unwrap(), "--suite", "algebra"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn demo_matches_printed_skeleton() {
    let o = homhopf(&["demo", "h4", "--c", "1", "--cp", "2", "--cpp", "3", "--printed"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let rows = csv_rows(&stdout(&o));
    assert_eq!(rows.len(), 16);
    let skeleton = printed_d();
    let cells = parameter_cells(&q(2));
    for i in 0..16 {
        assert_eq!(rows[i].len(), 16);
        for j in 0..16 {
            let expected = match skeleton[i][j] {
                Some(v) => q(v),
                None => cells
                    .iter()
                    .find(|((r, c), _)| (*r, *c) == (i + 1, j + 1))
                    .unwrap()
                    .1
                    .clone(),
            };
            assert_eq!(rows[i][j], expected, "cell ({}, {})", i + 1, j + 1);
        }
    }
}

#[test]
fn demo_columns_are_the_transpose() {
    let printed = homhopf(&["demo", "h4", "--c", "-1/2", "--cp", "3", "--cpp", "5", "--printed"]);
    let cols = homhopf(&["demo", "h4", "--c", "-1/2", "--cp", "3", "--cpp", "5"]);
    let (p, c) = (csv_rows(&stdout(&printed)), csv_rows(&stdout(&cols)));
    for i in 0..16 {
        for j in 0..16 {
            assert_eq!(p[i][j], c[j][i]);
        }
    }
    let params = H4Params::new(frac(-1, 2), q(3), q(5)).unwrap();
    let d = h4_braiding_matrix(&params).unwrap();
    for (i, row) in c.iter().enumerate() {
        assert_eq!(row.as_slice(), d.row(i));
    }
}

#[test]
fn demo_rejects_degenerate_parameters() {
    let o = homhopf(&["demo", "h4", "--c", "0", "--cp", "2", "--cpp", "3"]);
    assert_eq!(o.status.code(), Some(2));
    let o = homhopf(&["demo", "h4", "--c", "x", "--cp", "2", "--cpp", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn trivial_braiding_is_one_by_one() {
    let o = homhopf(&["braid", H4_FILE, "-m", "k", "-n", "k"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o).trim(), "1");
}

#[test]
fn json_export_round_trips() {
    let o = homhopf(&["braid", H4_FILE, "-m", "H4A", "-n", "H4B", "--out", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let e = BraidingExport::from_json(&stdout(&o)).unwrap();
    assert_eq!(e.source, ["H4A".to_string(), "H4B".to_string()]);
    assert_eq!(e.basis_in.len(), 16);
    assert_eq!(e.basis_in[1], "1⊗g");
    let params = H4Params::new(q(1), q(2), q(3)).unwrap();
    assert_eq!(e.to_matrix().unwrap(), h4_braiding_matrix(&params).unwrap());

    let o = homhopf(&["braid", H4_FILE, "-m", "H4A", "-n", "H4B", "--out", "json", "--printed"]);
    let p = BraidingExport::from_json(&stdout(&o)).unwrap();
    assert_eq!(p.layout, "printed");
    assert_eq!(p.to_matrix().unwrap(), e.to_matrix().unwrap());
}

#[test]
fn unknown_module_is_an_input_error() {
    let o = homhopf(&["braid", H4_FILE, "-m", "H4A", "-n", "nope"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn reports_are_byte_stable() {
    let args = ["--report", "json", "check", H4_FILE, "--suite", "tcat", "--seed", "7"];
    let a = homhopf(&args);
    let b = homhopf(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["seed"], 7);
}
