use std::path::Path;
use std::process::{Command, Output};

use coneproj::copositivity::{run_benchmark, BenchmarkConfig};
use coneproj::solvers::{Algorithm, SolverConfig};
use coneproj_cli::report::parse_csv;

fn coneproj(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coneproj"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn orthant_cap_sphere_example() {
    let s = stdout(&coneproj(&["project", "orthant-cap-sphere", "--point", "1,-1"]));
    assert!(s.contains("canonical: 1,0\n"), "{s}");
    assert!(s.contains("cardinality: Unique"), "{s}");
}

#[test]
fn tied_negative_input_lists_every_point() {
    let s = stdout(&coneproj(&["project", "orthant-cap-sphere", "--point", "-1,-1"]));
    assert!(s.contains("canonical: 1,0\n"), "{s}");
    assert_eq!(s.matches("point:").count(), 2, "{s}");
}

#[test]
fn ball_example() {
    let s = stdout(&coneproj(&["project", "ball", "--rho", "1", "--point", "1,-1"]));
    assert!(s.contains("canonical: 0.7071067811865475,-0.7071067811865475"), "{s}");
}

#[test]
fn psd_example() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "a.txt", "2\n2 0\n0 -3\n");
    let s = stdout(&coneproj(&["project", "psd", "--matrix-file", &file]));
    assert!(s.contains("canonical: 2,0;0,0"), "{s}");
}

#[test]
fn lorentz_negative_axis_distance() {
    let s = stdout(&coneproj(&[
        "project", "lorentz-cap-sphere", "--alpha", "1", "--rho", "2", "--xi", "-4", "--point", "0,0",
    ]));
    assert!(s.contains("cardinality: Continuum"), "{s}");
    // every point at height beta/alpha is equally far: sqrt(2 + (sqrt2 + 4)^2)
    assert!(s.contains("distance: 5.595865303863627"), "{s}");
}

#[test]
fn exit_codes() {
    assert_eq!(coneproj(&["horn", "--restarts", "1"]).status.code(), Some(0));
    assert_eq!(coneproj(&["project", "ball", "--point", "1,2"]).status.code(), Some(2));
    assert_eq!(coneproj(&["benchmark", "--sizes", "5"]).status.code(), Some(2));
    assert_eq!(coneproj(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        coneproj(&["benchmark", "--algorithms", "newton"]).status.code(),
        Some(2)
    );
    assert_eq!(
        coneproj(&["copositive", "--matrix-file", "/nonexistent/m.txt"]).status.code(),
        Some(1)
    );
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.txt", "2\n1 2\n3 1\n");
    assert_eq!(coneproj(&["copositive", "--matrix-file", &bad]).status.code(), Some(1));
}

#[test]
fn copositive_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    let id = write(dir.path(), "id.txt", "3\n1 0 0\n0 1 0\n0 0 1\n");
    let s = stdout(&coneproj(&["copositive", "--matrix-file", &id]));
    assert!(s.contains("oracle_mu: 0.5\n"), "{s}");
    assert!(s.contains("oracle_verdict: COPOSITIVE"), "{s}");
    assert!(s.contains("fista,0.5,"), "{s}");

    let neg = write(dir.path(), "neg.txt", "2\n1 -2\n-2 1\n");
    let s = stdout(&coneproj(&["copositive", "--matrix-file", &neg]));
    assert!(s.contains("oracle_mu: -0.5\n"), "{s}");
    assert!(s.contains("oracle_verdict: NOT COPOSITIVE"), "{s}");
    let rows: Vec<&str> = s.lines().skip_while(|l| !l.starts_with("algorithm,")).skip(1).collect();
    assert_eq!(rows.len(), 5);
    for row in rows {
        assert!(row.ends_with(",NOT COPOSITIVE"), "{row}");
    }
}

#[test]
fn benchmark_csv_matches_library() {
    let s = stdout(&coneproj(&["benchmark", "--sizes", "2,3,4", "--trials", "8", "--seed", "11"]));
    let parsed = parse_csv(&s).unwrap();
    assert_eq!(parsed.rows.len(), 30);
    let direct = run_benchmark(&BenchmarkConfig {
        sizes: vec![2, 3, 4],
        trials: 8,
        algorithms: Algorithm::ALL.to_vec(),
        solver: SolverConfig { seed: 11, ..Default::default() },
        seed: 11,
        guard_band: 0.0,
    })
    .unwrap();
    assert_eq!(parsed, direct);
}

#[test]
fn zero_trials_prints_header_only() {
    let s = stdout(&coneproj(&["benchmark", "--trials", "0"]));
    assert_eq!(s.trim_end(), "size,group,algorithm,success,avg_iter");
}

#[test]
fn markdown_and_json_formats() {
    let md = stdout(&coneproj(&["benchmark", "--sizes", "2", "--trials", "3", "--format", "md"]));
    assert!(md.contains("| Size | Copositive | FISTA succ"), "{md}");
    assert!(md.contains("| 2x2 | Yes |"), "{md}");
    assert!(md.contains("| 2x2 | No |"), "{md}");

    let json = stdout(&coneproj(&["benchmark", "--sizes", "3", "--trials", "2", "--format", "json"]));
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(value["rows"].as_array().unwrap().len(), 10);
}

#[test]
fn benchmark_writes_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.csv");
    let p = path.to_str().unwrap();
    let s = stdout(&coneproj(&["benchmark", "--sizes", "2", "--trials", "2", "--output", p]));
    assert!(s.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(parse_csv(&text).unwrap().rows.len(), 10);
}

#[test]
fn horn_lists_every_algorithm() {
    let s = stdout(&coneproj(&["horn"]));
    let lines: Vec<&str> = s.lines().collect();
    assert_eq!(lines[0], "algorithm,fval,iter");
    let ids: Vec<&str> = lines[1..].iter().map(|l| l.split(',').next().unwrap()).collect();
    assert_eq!(ids, ["fista", "pgm", "lange", "li_pong", "dr"]);
}
