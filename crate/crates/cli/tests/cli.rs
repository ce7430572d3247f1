use std::process::{Command, Output};

use serde_json::Value;

fn specht(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_specht"))
        .args(args)
        .env_remove("SPECHT_CACHE_DIR")
        .output()
        .expect("run specht")
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--output", "json", "-q"]);
    let out = specht(&all);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn classify_reports_a_verified_witness() {
    let v = json(&["classify", "5,3,3,2", "--witness"]);
    assert_eq!(v["classification"], "reducible");
    let w = &v["witness"];
    assert_eq!(w["verified"], true);
    assert_eq!(w["terminal"]["type"], "carter_payne");
    assert_eq!(w["steps"].as_array().unwrap().len(), 2);
}

#[test]
fn classify_oracle_agrees_on_small_cases() {
    assert_eq!(
        json(&["classify", "2,2", "--oracle"])["classification"],
        "irreducible"
    );
    assert_eq!(
        json(&["classify", "4,4,2,2", "--oracle"])["classification"],
        "reducible"
    );
}

#[test]
fn bad_partitions_are_usage_errors() {
    let out = specht(&["classify", "4,x"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains('x'));

    let out = specht(&["classify", "2,3"]);
    assert_eq!(out.status.code(), Some(2));

    let out = specht(&["fock", "apply", "0:1", "2,2", "--canonical"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn size_ceiling_is_enforced() {
    let out = specht(&["decompose", "12", "--max-n", "10", "-q"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_passes_with_exit_zero() {
    let v = json(&["verify", "carter", "--max-n", "10"]);
    assert_eq!(v["suite"], "carter");
    assert_eq!(v["counterexamples"].as_array().unwrap().len(), 0);
}

#[test]
fn json_output_is_deterministic() {
    let args = ["decompose", "8", "--rouquier-check"];
    let a = specht(&[&args[..], &["--output", "json", "-q", "--jobs", "1"]].concat());
    let b = specht(&[&args[..], &["--output", "json", "-q", "--jobs", "4"]].concat());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn warm_cache_matches_cold_cache() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let cold = specht(&["decompose", "9", "--cache-dir", d, "--output", "json", "-q"]);
    assert_eq!(cold.status.code(), Some(0));
    assert!(dir.path().join("decomp_e2_n9.json").exists());
    let warm = specht(&["decompose", "9", "--cache-dir", d, "--output", "json", "-q"]);
    assert_eq!(cold.stdout, warm.stdout);

    let uncached = json(&["decompose", "9"]);
    let mut cold: Value = serde_json::from_slice(&cold.stdout).unwrap();
    cold["cache_file"] = Value::Null;
    assert_eq!(cold, uncached);
}

#[test]
fn fock_apply_gives_the_expected_coefficient() {
    let v = json(&["fock", "apply", "1:4,0:3,1:2", "7,6,3,2,1"]);
    let term = v["terms"]
        .as_array()
        .unwrap()
        .iter()
        .find(|t| t["partition"] == "7,7,5,5,4")
        .expect("term present");
    assert_eq!(term["poly"], serde_json::json!({"6": 1}));
}

#[test]
fn block_reports_quotient() {
    let v = json(&["block", "13,8,7,4,3,2,1,1,1,1,1"]);
    assert_eq!(v["core"], "7,6,5,4,3,2,1");
    assert_eq!(v["weight"], 7);
    assert_eq!(v["rouquier"], true);
}

#[test]
fn lr_single_coefficient() {
    let v = json(&["lr", "2,1", "2,1", "--outer", "3,2,1"]);
    assert_eq!(v["coefficient"], 2);
}
