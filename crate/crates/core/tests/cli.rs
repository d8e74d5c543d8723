//! End-to-end runs of the `dsdim` binary.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

const HEAT: &str = "ring m=2 n=1;\ncharset: s*y1 + d1^2*y1 + d2^2*y1; shift=1;\n";

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_dsdim"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

#[test]
fn psi_text_output() {
    let o = run(&["psi", "-"], HEAT);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("(2 t1 + 1) t2 + t1^2 + t1 + 1"), "{}", stdout(&o));
}

#[test]
fn psi_with_oracle_check() {
    let o = run(&["psi", "-", "--check"], HEAT);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn gap_is_one() {
    let o = run(&["gap", "-", "--check"], HEAT);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("k = 1"), "{}", stdout(&o));
}

#[test]
fn json_output_is_deterministic() {
    let a = run(&["psi", "-", "--format", "json"], HEAT);
    let b = run(&["psi", "-", "--format", "json"], HEAT);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["psi_text"], "(2 t1 + 1) t2 + t1^2 + t1 + 1");
}

#[test]
fn out_flag_writes_file() {
    let path = scratch("psi_out.json");
    let _ = std::fs::remove_file(&path);
    let o = run(&["psi", "-", "--format", "json", "--out", path.to_str().unwrap()], HEAT);
    assert_eq!(o.status.code(), Some(0));
    let piped = run(&["psi", "-", "--format", "json"], HEAT);
    assert_eq!(std::fs::read(&path).unwrap(), piped.stdout);
}

#[test]
fn reads_problem_from_a_file() {
    let path = scratch("heat.dsd");
    std::fs::write(&path, HEAT).unwrap();
    let o = run(&["phi", path.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(!stdout(&o).trim().is_empty());
}

#[test]
fn non_coherent_charset_exits_3() {
    let o = run(
        &["psi", "-"],
        "ring m=1 n=2;\ncharset: d1*y1 - y2; shift=0;\ncharset: s*y1; shift=0;\n",
    );
    assert_eq!(o.status.code(), Some(3), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(String::from_utf8_lossy(&o.stderr).contains("witness s*y2"));
}

#[test]
fn parse_error_exits_2() {
    let o = run(&["psi", "-"], "ring m=1 n=1;\ncharset: s*y1 +; shift=0;\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
}

#[test]
fn bad_grid_flag_exits_2() {
    let o = run(&["psi", "-", "--grid", "5:1,0:3"], HEAT);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn reduce_reports_remainder() {
    let o = run(&["reduce", "-", "--poly", "s^2*y1 + d1^2*s*y1 + d2^2*s*y1 + y1"], HEAT);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o).trim(), "y1");
}

#[test]
fn oracle_csv_totals_match_trdeg() {
    let o = run(&["oracle", "-", "--format", "csv", "--grid", "2:3,2:3"], HEAT);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("r,s,u_prime,u_dprime,lambda,total,trdeg"));
    let mut rows = 0;
    for line in lines {
        let cells: Vec<&str> = line.split(',').collect();
        assert_eq!(cells.len(), 7);
        assert_eq!(cells[5], cells[6], "row {line}");
        rows += 1;
    }
    assert_eq!(rows, 4);
}

#[test]
fn omega_of_points() {
    let o = run(&["omega", "-"], "ring m=1 n=1;\npoints: (1,0);\n");
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o).trim(), "t2 + 1");
}

#[test]
fn omega_reads_bare_point_set_json() {
    let o = run(&["omega", "-", "--format", "json"], r#"{"m": 1, "points": [[1, 1]]}"#);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["text"], "t2 + t1 + 1");
    assert_eq!(v["binomial"], "C(t1+1,1) + C(t2+1,1) - 1");
    assert_eq!(v["stability"], serde_json::json!([1, 1]));
}

#[test]
fn run_uses_file_mode() {
    let text = format!("{HEAT}mode gap;\n");
    let o = run(&["run", "-"], &text);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("k = 1"));
}
