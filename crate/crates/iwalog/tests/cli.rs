use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use iwalog::json;
use iwalog_core::iwadist::CharPoint;
use iwalog_core::PrimeCtx;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_iwalog")).args(args).output().expect("binary runs")
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("JSON on stdout")
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("iwalog-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn halflog_vanishes_at_level_two_points() {
    let o = run(&["halflog", "--p", "3", "--m", "1", "--sign", "plus", "--level", "3", "--prec", "12"]);
    assert!(o.status.success());
    let ctx = PrimeCtx::new(3, 12).unwrap();
    let s = json::series_in(ctx, &stdout_json(&o)).unwrap();
    assert!(s.eval_at(CharPoint { t: 2, j: 0 }).unwrap().is_zero());
    assert!(!s.eval_at(CharPoint { t: 1, j: 0 }).unwrap().is_zero());
}

#[test]
fn logmatrix_then_det_identity_check() {
    let o = run(&["logmatrix", "--p", "3", "--k", "0", "--level", "3"]);
    assert!(o.status.success());
    let m = stdout_json(&o);
    assert_eq!(m["dim"], 2);
    assert_eq!(m["level"], 3);
    let c = run(&["check", "--suite", "det-identity"]);
    assert_eq!(c.status.code(), Some(0));
    assert_eq!(stdout_json(&c)["pass"], true);
}

#[test]
fn theta_coefficients() {
    let o = run(&["theta", "--disc", "-4", "--power", "4", "--nmax", "50"]);
    assert!(o.status.success());
    let q = json::qexp_in(&stdout_json(&o)).unwrap();
    assert_eq!(q.a(2), &[-4]);
    assert_eq!(q.a(5), &[-14]);
}

#[test]
fn output_is_byte_identical_for_a_fixed_seed() {
    let a = run(&["check", "--suite", "mellin-roundtrip", "--seed", "7"]);
    let b = run(&["check", "--suite", "mellin-roundtrip", "--seed", "7"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn failed_check_exits_one() {
    let o = run(&["check", "--suite", "antisym"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout_json(&o)["pass"], false);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["halflog", "--p", "3"]).status.code(), Some(2));
}

#[test]
fn computation_errors_exit_one() {
    assert_eq!(run(&["check", "--suite", "nonexistent"]).status.code(), Some(1));
    assert_eq!(
        run(&["theta", "--disc", "-4", "--power", "4", "--nmax", "0", "--out", "/nonexistent/dir/x.json"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn split_round_trip_through_files() {
    let common = ["--p", "3", "--k", "0", "--level", "1", "--prec", "10"];
    let pm = tmp("pm.json");
    fs::write(&pm, r#"{"plus": {"coeffs": [1, 2]}, "minus": {"coeffs": ["-3", 0, 1]}}"#).unwrap();
    let ab = tmp("ab.json");
    let mut args = vec!["split", "--forward", "--input", pm.to_str().unwrap(), "--out", ab.to_str().unwrap()];
    args.extend(common);
    assert!(run(&args).status.success());
    let mut args = vec!["split", "--input", ab.to_str().unwrap()];
    args.extend(common);
    let o = run(&args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v = stdout_json(&o);
    let ctx = iwalog_core::logmat::CrystalParams::ap_zero(3, 10, 0, 1).unwrap().ctx;
    let w = iwalog_core::iwadist::omega_tw(ctx, 1, 1).unwrap();
    let plus = json::series_in(ctx, &v["plus"]).unwrap();
    let want = iwalog_core::iwadist::IwaSeries::from_i64s(ctx, &[1, 2]);
    assert!(plus.sub(&want).is_zero_mod(&w).unwrap());
}

#[test]
fn deplete_and_eval_read_files() {
    let th = tmp("theta.json");
    assert!(run(&["theta", "--disc", "-4", "--power", "4", "--nmax", "20", "--out", th.to_str().unwrap()])
        .status
        .success());
    let o = run(&["deplete", "--p", "2", "--input", th.to_str().unwrap()]);
    let q = json::qexp_in(&stdout_json(&o)).unwrap();
    assert_eq!(q.a(2), &[0]);
    assert_eq!(q.a(5), &[-14]);

    let s = tmp("series.json");
    fs::write(&s, r#"{"coeffs": [0, 1]}"#).unwrap();
    let o = run(&["eval", "--p", "3", "--input", s.to_str().unwrap(), "--t", "0"]);
    assert!(o.status.success());
    assert_eq!(stdout_json(&o)["zero"], true);
}

#[test]
fn galimg_standard_pair() {
    let o = run(&["galimg", "--p", "5"]);
    assert!(o.status.success());
    let v = stdout_json(&o);
    assert_eq!(v["order"], 120);
    assert_eq!(v["solvable"], false);
}
