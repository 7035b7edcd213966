use serde_json::Value;
use std::process::{Command, Output};

fn affroots(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_affroots"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn witnesses(v: &Value) -> Vec<String> {
    v["items"]
        .as_array()
        .unwrap()
        .iter()
        .filter_map(|i| i["witness"].as_str().map(String::from))
        .collect()
}

#[test]
fn enumerate_window_zero() {
    let o = affroots(&[
        "enumerate",
        "--type",
        "A-2k-2l-1-tw2",
        "--k",
        "1",
        "--l",
        "1",
        "--window",
        "0",
    ]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["type"], "A-2k-2l-1-tw2");
    assert_eq!(v["window"], 0);
    let roots = v["roots"].as_array().unwrap();
    assert_eq!(roots.len(), 11);
    let zero = roots.iter().find(|r| r["class"] == "zero").unwrap();
    assert_eq!(zero["parity"], "im");
    assert_eq!(zero["eps"], serde_json::json!([0]));
}

#[test]
fn enumerate_tw4_has_doubled_long_root() {
    let o = affroots(&["enumerate", "--type", "A-2k-2l-tw4", "--window", "2"]);
    let v = json(&o);
    let hit = v["roots"].as_array().unwrap().iter().any(|r| {
        r["delta"] == 2 && r["eps"] == serde_json::json!([2]) && r["del"] == serde_json::json!([0])
    });
    assert!(hit);
}

#[test]
fn enumerate_is_byte_deterministic() {
    let args = [
        "enumerate",
        "--type",
        "D-tw2",
        "--k",
        "2",
        "--l",
        "2",
        "--window",
        "5",
    ];
    assert_eq!(affroots(&args).stdout, affroots(&args).stdout);
}

#[test]
fn out_file() {
    let dir = std::env::temp_dir().join(format!("affroots-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("roots.json");
    let o = affroots(&[
        "enumerate",
        "--window",
        "1",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["window"], 1);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn verify_passes_with_timing() {
    for t in ["A-2k-2l-1-tw2", "A-2k-2l-tw4", "D-tw2"] {
        let o = affroots(&["verify", "--type", t]);
        assert!(o.status.success(), "{t}");
        let v = json(&o);
        assert_eq!(v["status"], "pass");
        assert_eq!(v["config"]["window"], 8);
        assert!(v["items"]
            .as_array()
            .unwrap()
            .iter()
            .all(|i| i["millis"].is_number()));
    }
}

#[test]
fn verify_corrupt_fails_with_witness() {
    let o = affroots(&["verify", "--corrupt"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["status"], "fail");
    assert!(witnesses(&v).iter().any(|w| w.contains("missing root")));
}

#[test]
fn shadow_all_up() {
    let o = affroots(&[
        "shadow", "--kind", "all-up", "--seeds", "6", "--window", "4",
    ]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["summary"]["seeds_passed"], 6);
}

#[test]
fn shadow_mixed_tight_skips_zeta() {
    let o = affroots(&[
        "shadow",
        "--kind",
        "mixed-tight",
        "--seeds",
        "2",
        "--window",
        "4",
    ]);
    assert!(o.status.success());
    let v = json(&o);
    let skipped: Vec<&Value> = v["items"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|i| i["skipped"] == "tight")
        .collect();
    assert_eq!(skipped.len(), 2);
}

#[test]
fn shadow_injections_fail() {
    for (inject, tag) in [("case4", "Case4"), ("close", "CloseSum")] {
        let o = affroots(&[
            "shadow", "--inject", inject, "--seeds", "1", "--window", "4",
        ]);
        assert_eq!(o.status.code(), Some(1));
        let v = json(&o);
        assert_eq!(v["status"], "fail");
        assert!(witnesses(&v).iter().all(|w| w.starts_with(tag)), "{inject}");
    }
}

#[test]
fn realize_reports_order() {
    let o = affroots(&["realize", "--type", "A-2k-2l-tw4", "--trials", "20"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["summary"]["order"], 4);
    let o = affroots(&["realize", "--type", "D-tw2", "--trials", "20"]);
    let v = json(&o);
    assert_eq!(v["status"], "pass");
    assert_eq!(v["summary"]["order"], 2);
    assert!(v["summary"]["weights"]["missing"]
        .as_array()
        .unwrap()
        .is_empty());
}

#[test]
fn realize_size_cap() {
    let o = affroots(&["realize", "--k", "5", "--l", "5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("size cap"));
}

#[test]
fn usage_errors() {
    assert_eq!(
        affroots(&["enumerate", "--type", "B-tw2"]).status.code(),
        Some(2)
    );
    assert_eq!(
        affroots(&["enumerate", "--type", "A-2k-1-2l-1-tw2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(affroots(&["enumerate", "--k", "0"]).status.code(), Some(2));
    assert_ne!(affroots(&["bogus"]).status.code(), Some(0));
}

#[test]
fn thread_cap_does_not_change_output() {
    let args = ["verify", "--type", "A-2k-2l-tw4", "--k", "2"];
    let run = |threads: &str| {
        let o = Command::new(env!("CARGO_BIN_EXE_affroots"))
            .args(args)
            .env("AFFROOTS_THREADS", threads)
            .output()
            .unwrap();
        let mut v = json(&o);
        affroots::cli::without_timing(&mut v);
        v
    };
    assert_eq!(run("1"), run("3"));
}
