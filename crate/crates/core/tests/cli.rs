use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_delta-arith"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).env("DELTA_ARITH_THREADS", "2").output().expect("binary runs")
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

/// Compares against a golden file; `UPDATE_GOLDEN=1` rewrites it.
fn check_golden(name: &str, actual: &str) {
    let path = golden(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
    assert_eq!(actual, want, "output differs from {name}");
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn eval_delta_of_two() {
    let out = run(&["eval", "delta", "--p", "5", "--a", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["data"]["value"], "-6 + O(pi^23)");
    assert_eq!(v["result"], "value");
    check_golden("eval_delta.json", &String::from_utf8(out.stdout).unwrap());
}

#[test]
fn eval_gm_char_ramified() {
    let out = run(&["eval", "gm-char", "--p", "5", "--ext", "x^4-p", "--a", "1+pi"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!(v["data"]["shift_used"].as_u64().unwrap() <= 2);
    assert_eq!(v["params"]["e"], 4);
    check_golden("eval_gm_char.json", &String::from_utf8(out.stdout).unwrap());
}

#[test]
fn eval_period_map_domain_error() {
    let out = run(&["eval", "period-map", "--p", "5", "--q", "1"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("ordinary domain"));
    let out = run(&["eval", "period-map", "--p", "5", "--q", "1+p"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["data"]["period"]["valuation"], "-1");
}

#[test]
fn series_dumps_match_golden() {
    let dir = std::env::temp_dir().join(format!("delta-arith-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cases: [(&str, &[&str]); 3] = [
        ("ell_char_1_3.txt", &["eval", "ell-char", "--a4", "1", "--a6", "3", "--order", "2", "--trunc", "8"]),
        ("serre_tate_x4.txt", &["eval", "serre-tate", "--ext", "x^4-p", "--trunc", "6"]),
        ("lr_series_gm_x2.txt", &["eval", "lr-series", "--ext", "x^2-p", "--r", "2", "--trunc", "7"]),
    ];
    for (name, args) in cases {
        let path = dir.join(name);
        let mut full: Vec<&str> = args.to_vec();
        let p = path.to_str().unwrap().to_string();
        full.extend(["--dump-series", &p]);
        let out = run(&full);
        assert_eq!(out.status.code(), Some(0), "{name}: {}", String::from_utf8_lossy(&out.stderr));
        check_golden(name, &std::fs::read_to_string(&path).unwrap());
    }
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_examples() {
    let out = run(&["verify", "estimates", "--p", "5", "--emax", "1000"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["result"], "pass");

    let out = run(&["verify", "lrp", "--p", "5", "--ext", "cyclotomic:1", "--r", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    for c in v["data"]["suites"][0]["checks"].as_array().unwrap() {
        assert!(c["data"]["nu_used"].as_u64().unwrap() <= 2);
    }

    let out = run(&["verify", "divergence", "--p", "5"]);
    assert_eq!(out.status.code(), Some(0));
    check_golden("verify_divergence.json", &String::from_utf8(out.stdout).unwrap());
}

#[test]
fn exit_codes() {
    // usage
    assert_eq!(run(&["eval", "nothing"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "bogus"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "delta", "--p", "4", "--a", "2"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "delta", "--p", "3", "--a", "2"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "delta", "--a", "2", "--ext", "x^2-3"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "delta", "--bogus-flag"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "delta"]).status.code(), Some(2));
    // precondition
    assert_eq!(run(&["eval", "gm-char", "--a", "5"]).status.code(), Some(3));
    assert_eq!(run(&["eval", "ell-char", "--a4", "0", "--a6", "0"]).status.code(), Some(3));
    assert_eq!(run(&["eval", "ell-char", "--a4", "0", "--a6", "1", "--order", "1"]).status.code(), Some(3));
    assert_eq!(
        run(&["eval", "lr-series", "--ext", "x^2-p", "--r", "2", "--trunc", "4", "--strict-truncation"]).status.code(),
        Some(3)
    );
    // falsified certificate: without the p-power rescaling Psi is not integral
    let out = run(&["eval", "serre-tate", "--ext", "x^4-p", "--trunc", "6", "--nu", "0"]);
    assert_eq!(out.status.code(), Some(4));
    assert_eq!(json(&out)["result"], "fail");
    // inconclusive: scan bound too small for a witness
    let out = run(&["verify", "divergence", "--nmax", "100"]);
    assert_eq!(out.status.code(), Some(5));
    assert_eq!(json(&out)["result"], "inconclusive");
}

#[test]
fn out_and_pretty() {
    let path = std::env::temp_dir().join(format!("delta-arith-out-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let out = run(&["eval", "delta", "--a", "7", "--order", "2", "--pretty", "--out", p]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("\n  \"check\": \"eval-delta\""));
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["data"]["jets"].as_array().unwrap().len(), 3);
    assert!(v["version"].is_string());
    std::fs::remove_file(&path).ok();
}
