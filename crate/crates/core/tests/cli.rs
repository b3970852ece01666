use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use quatloc::harness::{read_csv, rows_per_sample, Check};

const BIN: &str = env!("CARGO_BIN_EXE_quatloc");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

const IJ_PRODUCT: &str = r#"{"side": "left", "coeffs": [[0,0,0,1], [0,-1,-1,0], [1,0,0,0]]}"#;

#[test]
fn bounds_table_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "p.json", IJ_PRODUCT);
    let csv = dir.path().join("b.csv");
    let o = run(&["bounds", "--input", input.to_str().unwrap(), "--out", csv.to_str().unwrap()]);
    assert!(o.status.success());
    let text = stdout(&o);
    let cauchy = text.lines().find(|l| l.starts_with("cauchy")).unwrap();
    assert!(cauchy.contains(&(1.0 + 2f64.sqrt()).to_string()), "{cauchy}");

    let rows: Vec<csv::StringRecord> = csv::Reader::from_path(&csv).unwrap().records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 7);
    assert!(rows.iter().all(|r| &r[0] == "2" && r[3].parse::<f64>().unwrap().is_finite()));
}

#[test]
fn bounds_monomial_and_inapplicable_ratio() {
    let dir = tempfile::tempdir().unwrap();
    let mono = write(dir.path(), "m.json", r#"{"side":"right","coeffs":[[0,0,0,0],[0,0,0,0],[0,0,0,0],[1,0,0,0]]}"#);
    let o = run(&["bounds", "--input", mono.to_str().unwrap(), "--methods", "cauchy"]);
    assert!(o.status.success());
    let line = stdout(&o).lines().find(|l| l.starts_with("cauchy")).unwrap().to_string();
    assert_eq!(line.split_whitespace().nth(1), Some("1"));

    let gap = write(dir.path(), "g.json", r#"{"side":"right","coeffs":[[1,0,0,0],[0,0,0,0],[0,1,0,0],[1,0,0,0]]}"#);
    let o = run(&["bounds", "--input", gap.to_str().unwrap(), "--methods", "ratio"]);
    assert!(o.status.success());
    let line = stdout(&o).lines().find(|l| l.starts_with("ratio")).unwrap().to_string();
    assert!(line.contains("false") && line.contains("zero interior coefficient"), "{line}");
}

#[test]
fn bounds_with_explicit_weights() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "p.json", IJ_PRODUCT);
    let o = run(&["bounds", "--input", input.to_str().unwrap(), "--methods", "fujiwara", "--lambda", "0.5,0.5"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains(&(2.0 * 2f64.sqrt()).to_string()));
    let o = run(&["bounds", "--input", input.to_str().unwrap(), "--methods", "fujiwara", "--lambda", "0.5,0.6"]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().any(|l| l.starts_with("fujiwara") && l.contains("false")));
}

#[test]
fn roots_output() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "p.json", IJ_PRODUCT);
    let o = run(&["roots", "--input", input.to_str().unwrap()]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 1);
    assert!(text.starts_with("isolated 0 0 1 0 "), "{text}");

    let sphere = write(dir.path(), "s.json", r#"{"side":"left","coeffs":[[1,0,0,0],[0,0,0,0],[1,0,0,0]]}"#);
    let o = run(&["roots", "--input", sphere.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("spherical 0 1 "), "{}", stdout(&o));
}

#[test]
fn roots_dump_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "p.json", IJ_PRODUCT);
    let o = run(&["roots", "--input", input.to_str().unwrap(), "--dump-matrix"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("0+0i+0j-1k"), "{text}");
    assert!(text.contains("0+1i+1j+0k"), "{text}");
}

#[test]
fn usage_and_parse_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let constant = write(dir.path(), "c.json", r#"{"side":"left","coeffs":[[1,0,0,0]]}"#);
    let o = run(&["roots", "--input", constant.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("degree ≥ 1 required"));

    let junk = write(dir.path(), "j.json", "{not json");
    assert_eq!(run(&["bounds", "--input", junk.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["roots", "--input", "/nonexistent/p.json"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--samples", "0"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--degrees", "0..3"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--methods", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_reports_zero_violations() {
    let o = run(&["verify", "--seed", "42", "--degrees", "2..5", "--samples", "100"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("violations: 0"));
}

#[test]
fn bench_csv_shape() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("bench.csv");
    let o = run(&[
        "bench", "--seed", "3", "--samples", "40", "--degrees", "2..6", "--smoke", "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let rows = read_csv(std::fs::File::open(&out).unwrap()).unwrap();
    assert_eq!(rows.len(), 40 * rows_per_sample(&Check::ALL));
    assert_eq!(rows_per_sample(&Check::ALL), 9);
    let first: Vec<_> = rows.iter().filter(|r| r.sample == 0).collect();
    assert!(first.iter().all(|r| r.max_zero_norm == 0.0));
    for r in &rows {
        assert!(r.max_zero_norm.is_finite());
        if let Some(s) = r.slack {
            assert!(s.is_finite() && s >= -1e-9 * (1.0 + r.radius.unwrap_or(0.0)), "{r:?}");
        }
    }
    let summary = std::fs::read_to_string(dir.path().join("bench.csv.summary.csv")).unwrap();
    assert!(summary.starts_with("method,count,mean_slack,median_slack,min_slack"));
}

#[test]
fn bench_to_stdout_is_deterministic() {
    let args = ["bench", "--seed", "9", "--samples", "30", "--methods", "cauchy,gershgorin"];
    let a = run(&args);
    let b = run(&[&args[..], &["--threads", "2"]].concat());
    assert!(a.status.success() && b.status.success());
    assert!(!a.stdout.is_empty());
    assert_eq!(a.stdout, b.stdout);
}
