//! Runs the compiled binary and checks its output and exit codes.

use std::process::{Command, Output};

use serde_json::Value;

use clusterforge::cluster_engine::{cluster_variable, default_names};
use clusterforge::core::word;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_clusterforge")).args(args).output().expect("binary runs")
}

fn json_of(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn expand_running_example() {
    let v = json_of(&["expand", "--word", "ab", "--kind", "P", "--format", "json"]);
    assert_eq!(v["poset"]["elements"].as_array().unwrap().len(), 5);
    let x = cluster_variable(&word("ab"));
    assert_eq!(v["sum"], x.to_json(&default_names(x.nvars())));
}

#[test]
fn expand_empty_word_t_paths() {
    let v = json_of(&["expand", "--word", "", "--kind", "T"]);
    assert_eq!(v["poset"]["elements"].as_array().unwrap().len(), 2);
    assert_eq!(v["poset"]["covers"].as_array().unwrap().len(), 1);
}

#[test]
fn rank_of_aabaa() {
    let v = json_of(&["rank", "--shape", "aabaa"]);
    let coeffs: Vec<i64> = v["polynomial"].as_array().unwrap().iter().map(|c| c.as_i64().unwrap()).collect();
    assert_eq!(coeffs, vec![1, 2, 3, 3, 3, 2, 1]);
    assert_eq!(v["flags"]["symmetric"], true);
}

#[test]
fn cf_and_dual() {
    let v = json_of(&["cf", "--word", "ab"]);
    assert_eq!(v["numerator"], "5");
    assert_eq!(v["denominator"], "3");
    let d = json_of(&["dual", "--word", "ab"]);
    assert_eq!(d["dual"], "bb");
}

#[test]
fn orbit_snake_poset_and_sl3() {
    let o = json_of(&["orbit", "--shape", "aaabbb"]);
    assert_eq!(o["rank"], "1 + q + 2q^2 + 3q^3 + 3q^4 + 3q^5 + 3q^6 + 2q^7 + q^8 + q^9");
    let s = json_of(&["snake", "--word", "ab"]);
    assert_eq!(s["shape"], "bb");
    let p = json_of(&["poset", "--word", "ab"]);
    assert_eq!(p["ideals"]["elements"].as_array().unwrap().len(), 5);
    let e = json_of(&["sl3", "--size", "5", "--kind", "edge"]);
    assert_eq!(e["diagrams"].as_array().unwrap().len(), 9);
    assert_eq!(e["valid"], true);
    let f = json_of(&["sl3", "--size", "6", "--kind", "face"]);
    assert_eq!(f["diagrams"].as_array().unwrap().len(), 4);
}

#[test]
fn dot_and_text_formats() {
    let out = run(&["expand", "--word", "ab", "--format", "dot"]);
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("digraph poset {"));
    let out = run(&["cf", "--word", "ab", "--format", "text"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "[1,1,1,1] = 5/3\n");
}

#[test]
fn output_is_byte_stable() {
    let args = ["expand", "--word", "abba", "--kind", "S"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("clusterforge-cli-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let out = run(&["rank", "--shape", "ab", "--out", p]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["shape"], "ab");
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn verify_passes_with_thread_cap() {
    let out = Command::new(env!("CARGO_BIN_EXE_clusterforge"))
        .args(["verify", "--sweep", "4"])
        .env("CLUSTERFORGE_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["words"], 31);
    assert_eq!(v["ok"], true);
    assert_eq!(run(&["verify", "--word", "abab"]).status.code(), Some(0));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["expand", "--word", "abc"]).status.code(), Some(2));
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["rank"]).status.code(), Some(2));
    assert_eq!(run(&["sl3", "--size", "3"]).status.code(), Some(2));
    assert_eq!(run(&["rank", "--shape", "ab", "--format", "dot"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--word", "ab", "--sweep", "2"]).status.code(), Some(2));
}
