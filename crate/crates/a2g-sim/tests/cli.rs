//! Black-box tests of the command-line interface and its exit codes.

use a2g_sim::report::CSV_HEADER;
use std::fs;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_a2g-sim"))
}

fn temp_config(name: &str, body: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join("a2g-sim-cli-tests");
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, body).unwrap();
    path
}

#[test]
fn missing_config_exits_1() {
    let out = bin()
        .args(["--config", "/nonexistent/missing.ini"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
}

#[test]
fn unknown_experiment_exits_1_with_usage() {
    let cfg = temp_config("ok.cfg", "");
    let out = bin()
        .args(["--config", cfg.to_str().unwrap(), "--experiment", "f9"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("f4") || err.contains("possible values"), "{err}");
}

#[test]
fn invalid_config_value_exits_1_naming_the_key() {
    let cfg = temp_config("bad.cfg", "[radio]\ntx_power = -1\n");
    let out = bin().args(["--config", cfg.to_str().unwrap()]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("tx_power"));
}

#[test]
fn f5_to_stdout() {
    let cfg = temp_config("f5.cfg", "# defaults\n");
    let out = bin()
        .args(["--config", cfg.to_str().unwrap(), "--experiment", "f5", "--out", "-"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some(CSV_HEADER));
    // 3 weather conditions x 10 distances + header
    assert_eq!(text.lines().count(), 31);
}

#[test]
fn f6_emits_coverage_column() {
    let cfg = temp_config("f6.cfg", "");
    let out = bin()
        .args(["--config", cfg.to_str().unwrap(), "--experiment", "f6"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    for line in text.lines().skip(1) {
        let radius: f64 = line.split(',').nth(11).unwrap().parse().unwrap();
        assert!(radius > 0.0);
    }
}

#[test]
fn writes_to_file() {
    let cfg = temp_config("file.cfg", "");
    let out_path = std::env::temp_dir().join("a2g-sim-cli-tests/out.csv");
    let out = bin()
        .args([
            "--config",
            cfg.to_str().unwrap(),
            "--experiment",
            "f4",
            "--out",
            out_path.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = fs::read_to_string(&out_path).unwrap();
    assert_eq!(text.lines().count(), 1 + 3 * 91);
}

#[test]
fn seed_changes_grid_output() {
    let cfg = temp_config("seeds.cfg", "");
    let run = |seed: &str| {
        let out = bin()
            .args([
                "--config",
                cfg.to_str().unwrap(),
                "--experiment",
                "grid",
                "--seed",
                seed,
            ])
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0));
        out.stdout
    };
    assert_ne!(run("1"), run("2"));
    assert_eq!(run("3"), run("3"));
}
