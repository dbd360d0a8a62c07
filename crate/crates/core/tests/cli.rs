use std::process::{Command, Output};

use serde_json::Value;

fn towerlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_towerlab")).args(args).env_remove("TOWERLAB_THREADS").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn dims_as_json() {
    let o = towerlab(&["dims", "--tower", "brauer", "--n", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v, serde_json::json!({"tower": "brauer", "n": 3, "dim": 15}));
}

#[test]
fn dims_as_csv() {
    let o = towerlab(&["dims", "--tower", "tl", "--n", "4", "--format", "csv"]);
    assert_eq!(stdout(&o), "tower,n,dim\ntl,4,14\n");
}

#[test]
fn rank_zero_is_a_usage_error() {
    let o = towerlab(&["jm", "--tower", "bmw", "--n", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!stderr(&o).is_empty());
}

#[test]
fn bad_arguments_exit_with_two() {
    assert_eq!(towerlab(&["frobnicate", "--tower", "tl", "--n", "2"]).status.code(), Some(2));
    assert_eq!(towerlab(&["dims", "--tower", "nope", "--n", "2"]).status.code(), Some(2));
    assert_eq!(towerlab(&["bridge", "--tower", "brauer", "--n", "2"]).status.code(), Some(2));
    assert_eq!(towerlab(&["gz", "--tower", "bmw", "--n", "4"]).status.code(), Some(2));
    assert_eq!(towerlab(&["dims", "--tower", "tl", "--n", "2", "--set", "qhalf=2"]).status.code(), Some(2));
}

#[test]
fn specialized_run_reports_json() {
    let o = towerlab(&["all", "--tower", "tl", "--n", "3", "--mode", "specialized", "--set", "qhalf=5/3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["meta"]["tower"], "tl");
    assert_eq!(v["meta"]["mode"], "specialized");
    assert_eq!(v["meta"]["params"]["qhalf"], "5/3");
    assert_eq!(v["summary"]["failed"], 0);
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(v["summary"]["passed"].as_u64().unwrap() as usize, checks.len());
    assert!(checks.iter().all(|c| c["pass"] == true));
}

#[test]
fn genericity_violation_names_the_parameters() {
    let o = towerlab(&["dims", "--tower", "bmw", "--n", "2", "--mode", "specialized", "--set", "rho=5/3", "--set", "q=1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("q=1"), "{}", stderr(&o));
}

#[test]
fn csv_report_header() {
    let o = towerlab(&["jm", "--tower", "sym", "--n", "3", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().next(), Some("tower,n,vertex,check,pass,witness,millis"));
    assert!(out.lines().count() > 1);
}

#[test]
fn config_file_with_flag_override() {
    let dir = std::env::temp_dir().join(format!("towerlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("run.conf");
    let out = dir.join("out.json");
    std::fs::write(&cfg, "# hecke at rank 3\ntower=hecke\nn=3\nmode=specialized\nset=q=2\nformat=csv\n").unwrap();

    let o = towerlab(&["spectrum", "--config", cfg.to_str().unwrap(), "--format", "json", "--output", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["meta"]["tower"], "hecke");
    assert_eq!(v["meta"]["n"], 3);
    assert_eq!(v["meta"]["params"]["q"], "2");

    std::fs::write(&cfg, "tower=hecke\nn=lots\n").unwrap();
    assert_eq!(towerlab(&["dims", "--config", cfg.to_str().unwrap()]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn thread_flag_is_accepted() {
    let o = Command::new(env!("CARGO_BIN_EXE_towerlab"))
        .args(["branching", "--tower", "brauer", "--n", "3", "--threads", "4"])
        .env("TOWERLAB_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("brauer n=3 mode=symbolic"));
}
