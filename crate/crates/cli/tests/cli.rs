use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cameral")).args(args).output().expect("binary runs")
}

fn report(args: &[&str]) -> (i32, Value) {
    let out = run(args);
    let json = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{args:?}: {e}\nstdout: {}\nstderr: {}", String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&out.stderr))
    });
    (out.status.code().unwrap(), json)
}

#[test]
fn rootdata_flags() {
    let (code, r) = report(&["rootdata", "--type", "PGL", "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(r["command"], "rootdata");
    assert_eq!(r["results"]["nonprimitive"], true);
    let (_, r) = report(&["rootdata", "--type", "SL", "--n", "3"]);
    assert_eq!(r["results"]["weyl_order"], 6);
    let (_, r) = report(&["rootdata", "--type", "GL", "--n", "1"]);
    assert_eq!(r["results"]["degrees"], serde_json::json!([1]));
}

#[test]
fn rootdata_from_file() {
    let path = std::env::temp_dir().join(format!("cameral-b2-{}.json", std::process::id()));
    std::fs::write(&path, r#"{"rank": 2, "simple_roots": [[1,-1],[0,1]], "simple_coroots": [[1,-1],[0,2]]}"#).unwrap();
    let (code, r) = report(&["rootdata", "--datum", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(code, 0);
    assert_eq!(r["results"]["weyl_order"], 8);
    assert_eq!(r["results"]["nonprimitive"], true);
}

#[test]
fn ramcheck_counts() {
    let (code, r) = report(&["ramcheck", "--type", "SL", "--n", "3"]);
    assert_eq!((code, r["results"]["pairs"].as_u64()), (0, Some(36)));
    let (code, r) = report(&["ramcheck", "--type", "SO", "--n", "5"]);
    assert_eq!((code, r["results"]["pairs"].as_u64()), (0, Some(64)));
    let (code, r) = report(&["ramcheck", "--type", "SL", "--n", "3", "--identity-only"]);
    assert_eq!((code, r["results"]["pairs"].as_u64()), (0, Some(1)));
}

#[test]
fn titsclass_verdicts() {
    let (code, r) = report(&["titsclass", "--type", "SL", "--n", "4"]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["verdict"], "nonvanishing");
    let (code, r) = report(&["titsclass", "--type", "GL", "--n", "4", "--witness"]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["verdict"], "vanishes");
    assert_eq!(r["results"]["witness"]["homomorphism_ok"], true);
    let (_, r) = report(&["titsclass", "--type", "PGL", "--n", "2"]);
    assert_eq!(r["results"]["verdict"], "vanishes");
    let (code, r) = report(&["titsclass", "--type", "SL", "--n", "2", "--witness"]);
    assert_eq!(code, 0);
    assert!(r["results"]["witness"]["none_registered"].is_string());
}

#[test]
fn group_order_budget() {
    let (code, r) = report(&["titsclass", "--type", "SL", "--n", "4", "--max-group-order", "10"]);
    assert_eq!(code, 1);
    assert!(r["results"]["error"].as_str().unwrap().contains("10"));
    let out = Command::new(env!("CARGO_BIN_EXE_cameral"))
        .args(["rootdata", "--type", "SL", "--n", "4"])
        .env("CAMERAL_MAX_GROUP_ORDER", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn cover_roundtrips() {
    for json in [r#"{"n":2,"a":[2,-3]}"#, r#"{"n":2,"a":[0,0]}"#, r#"{"n":1,"a":["5/3"]}"#] {
        let (code, r) = report(&["cover", "--json", json]);
        assert_eq!(code, 0, "{json}");
        assert_eq!(r["results"]["roundtrip"]["spectral_recovered"], true);
    }
    assert_eq!(run(&["cover", "--json", "{nope"]).status.code(), Some(2));
    let (code, _) = report(&["cover", "--json", r#"{"n":9,"a":[0,0,0,0,0,0,0,0,0]}"#]);
    assert_eq!(code, 1);
}

#[test]
fn rank1_runs_and_rejects_even_q() {
    let (code, r) = report(&["rank1", "--q", "5", "--g", "1"]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["torsor_ok"], true);
    let (code, r) = report(&["rank1", "--q", "3", "--f", "x^5-x+1"]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["solutions"], r["results"]["jac_order"]);
    assert_eq!(run(&["rank1", "--q", "4", "--g", "1"]).status.code(), Some(2));
    // (x - 1)² divides x⁵ + x + 1 over F_3
    assert_eq!(run(&["rank1", "--q", "3", "--f", "x^5+x+1"]).status.code(), Some(2));
}

#[test]
fn hitchin_rows() {
    for (ty, n, g, dim) in [("SL", "2", "2", 3), ("GL", "3", "2", 10), ("GL", "1", "5", 5)] {
        let (code, r) = report(&["hitchin", "--type", ty, "--n", n, "--g", g]);
        assert_eq!(code, 0);
        let row = &r["results"]["rows"][0];
        assert_eq!((row["hitchin_dim"].as_i64(), row["prym_dim"].as_i64()), (Some(dim), Some(dim)));
    }
    let (_, r) = report(&["hitchin", "--type", "SO", "--n", "5", "--g", "2,3,4"]);
    assert_eq!(r["results"]["rows"].as_array().unwrap().len(), 3);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["rootdata", "--type", "XX", "--n", "2"]).status.code(), Some(2));
    assert_eq!(run(&["rootdata", "--type", "Sp", "--n", "3"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["selftest", "--only", "42"]).status.code(), Some(2));
}

#[test]
fn timing_is_opt_in() {
    let (_, r) = report(&["rootdata", "--type", "SL", "--n", "2"]);
    assert!(r.get("duration_ms").is_none());
    let (_, r) = report(&["rootdata", "--type", "SL", "--n", "2", "--timing"]);
    assert!(r["duration_ms"].is_u64());
}

#[test]
fn pretty_output_is_a_table() {
    let out = run(&["hitchin", "--type", "GL", "--n", "2", "--g", "2,3", "--pretty"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("hitchin  PASS"));
    assert!(text.contains("hitchin_dim"));
}

#[test]
fn selftest_subset() {
    let (code, r) = report(&["selftest", "--only", "3,8"]);
    assert_eq!(code, 0);
    let ids: Vec<u64> = r["results"]["checks"].as_array().unwrap().iter().map(|c| c["id"].as_u64().unwrap()).collect();
    assert_eq!(ids, [3, 8]);
}
