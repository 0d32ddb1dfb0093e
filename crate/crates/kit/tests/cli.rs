use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_congruence-kit");

fn kit(args: &[&str]) -> Output {
    kit_env(args, &[])
}

fn kit_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(BIN);
    cmd.args(args).current_dir(env!("CARGO_MANIFEST_DIR")).env_remove("CONGRUENCE_KIT_BUDGET");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

fn status_of(report: &Value, id: &str) -> String {
    report["claims"].as_array().unwrap().iter().find(|c| c["id"] == id).unwrap()["status"]
        .as_str()
        .unwrap()
        .to_string()
}

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

#[test]
fn homology_reports_zd_modules() {
    for (input, d, expected) in [
        ("catalog:T3", "3", "Z_3^3"),
        ("catalog:S3", "5", "0"),
        ("catalog:Unlink(3)", "5", "Z_5^2"),
        ("catalog:Lens(6,1)", "4", "Z_2"),
        ("data/diagrams/trefoil.json", "3", "Z_3"),
        ("data/diagrams/t35.json", "5", "0"),
    ] {
        let o = kit(&["homology", input, "--d", d, "--json"]);
        assert_eq!(code(&o), 0, "{input}");
        let r = json(&o);
        assert_eq!(r["claims"][0]["payload"]["structure"], expected, "{input}");
        assert_eq!(r["exit_status"], 0);
        assert_eq!(r["inputs"][0]["token"], input);
        assert_eq!(r["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
    }
}

#[test]
fn distinguish_verdicts() {
    let o = kit(&["distinguish", "catalog:T3", "catalog:SumS1xS2(3)", "--d", "5", "--json"]);
    assert_eq!(code(&o), 0);
    let r = json(&o);
    assert_eq!(status_of(&r, "homology"), "inconclusive");
    assert_eq!(status_of(&r, "cup-form"), "pass");
    assert_eq!(status_of(&r, "burnside"), "pass");
    assert_eq!(status_of(&r, "verdict"), "pass");

    let o = kit(&["distinguish", "catalog:T3", "catalog:SumS1xS2(3)", "--d", "2", "--json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(status_of(&json(&o), "verdict"), "inconclusive");

    let o = kit(&["distinguish", "catalog:S1xS2", "catalog:Lens(6,1)", "--d", "3", "--json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(status_of(&json(&o), "verdict"), "inconclusive");

    let o = kit(&["distinguish", "catalog:S3", "catalog:T3", "--d", "3"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).lines().any(|l| l.starts_with("pass") && l.contains("homology")));
}

#[test]
fn skipping_every_invariant_is_inconclusive() {
    let o = kit(&[
        "distinguish", "catalog:T3", "catalog:SumS1xS2(3)", "--d", "5",
        "--skip", "homology", "--skip", "cup-form", "--skip", "burnside", "--json",
    ]);
    assert_eq!(code(&o), 0);
    let r = json(&o);
    assert_eq!(r["claims"].as_array().unwrap().len(), 1);
    assert_eq!(status_of(&r, "verdict"), "inconclusive");
}

#[test]
fn budget_from_the_environment() {
    let args = ["distinguish", "catalog:T3", "catalog:SumS1xS2(3)", "--d", "5", "--skip", "fast-path", "--json"];
    let o = kit_env(&args, &[("CONGRUENCE_KIT_BUDGET", "10")]);
    assert_eq!(code(&o), 1);
    assert_eq!(status_of(&json(&o), "cup-form"), "fail");
    // the flag wins over the environment
    let mut with_flag = args.to_vec();
    with_flag.extend(["--budget", "100000000"]);
    let o = kit_env(&with_flag, &[("CONGRUENCE_KIT_BUDGET", "10")]);
    assert_eq!(code(&o), 0);
    assert_eq!(status_of(&json(&o), "cup-form"), "pass");
    let o = kit_env(&args, &[("CONGRUENCE_KIT_BUDGET", "lots")]);
    assert_eq!(code(&o), 2);
}

#[test]
fn errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\n  \"coeffs\": [[0, 1]\n").unwrap();
    let o = kit(&["homology", bad.to_str().unwrap(), "--d", "3"]);
    assert_eq!(code(&o), 2);
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("bad.json:3:"), "{err}");

    for args in [
        &["burnside", "--d", "2"][..],
        &["homology", "catalog:T3", "--d", "1"],
        &["homology", "catalog:Nowhere", "--d", "3"],
        &["homology", "/nonexistent.json", "--d", "3"],
        &["cupform", "lens", "--d", "4"],
        &["cupform", "catalog:T3", "--d", "3", "--s", "1"],
        &["paper-check", "--d-range", "5..3"],
        &["frobnicate"],
    ] {
        assert_eq!(code(&kit(args)), 2, "{args:?}");
    }
}

#[test]
fn burnside_certificates_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    for d in ["3", "4", "12", "13"] {
        let o = kit(&["burnside", "--d", d, "--r", "3", "--json"]);
        assert_eq!(code(&o), 0);
        let r = json(&o);
        assert_eq!(r["claims"][0]["payload"]["verified"], true);
        let path = dir.path().join(format!("cert{d}.json"));
        std::fs::write(&path, serde_json::to_string(&r["claims"][0]["payload"]["certificate"]).unwrap()).unwrap();
        let o = kit(&["burnside", "--verify", path.to_str().unwrap()]);
        assert_eq!(code(&o), 0, "{}", stdout(&o));
    }
    // an image moved to a central element commutes with everything
    let o = kit(&["burnside", "--d", "3", "--json"]);
    let mut cert = json(&o)["claims"][0]["payload"]["certificate"].clone();
    cert["images"][1] = cert["group"]["identity"].clone();
    let path = dir.path().join("tampered.json");
    std::fs::write(&path, cert.to_string()).unwrap();
    assert_eq!(code(&kit(&["burnside", "--verify", path.to_str().unwrap()])), 1);
}

#[test]
fn cupform_prints_the_form() {
    let o = kit(&["cupform", "lens", "--d", "4", "--s", "1", "--q", "1", "--json"]);
    assert_eq!(code(&o), 0);
    let form = &json(&o)["claims"][0]["payload"]["form"];
    assert_eq!(form["d"], 4);
    assert_eq!(form["entries"][0]["ijk"], serde_json::json!([1, 1, 1]));
    assert_eq!(form["entries"][0]["value"], 2);
    let o = kit(&["cupform", "catalog:T3", "--d", "3"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("\"entries\""));
}

#[test]
fn json_output_is_deterministic() {
    for args in [
        &["paper-check", "--json"][..],
        &["distinguish", "catalog:T3", "catalog:SumS1xS2(3)", "--d", "4", "--json"],
        &["homology", "data/diagrams/borromean.json", "--d", "2", "--json"],
    ] {
        let (a, b) = (kit(args), kit(args));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn golden_outputs() {
    let bless = std::env::var_os("CONGRUENCE_KIT_BLESS").is_some();
    let cases: [(&str, &[&str]); 6] = [
        ("homology_t3_d3", &["homology", "catalog:T3", "--d", "3", "--json"]),
        ("homology_borromean_d2", &["homology", "data/diagrams/borromean.json", "--d", "2", "--json"]),
        ("distinguish_t3_sum_d5", &["distinguish", "catalog:T3", "catalog:SumS1xS2(3)", "--d", "5", "--json"]),
        ("distinguish_t3_sum_d2", &["distinguish", "catalog:T3", "catalog:SumS1xS2(3)", "--d", "2", "--json"]),
        ("burnside_d3", &["burnside", "--d", "3", "--json"]),
        ("cupform_lens_4_1_1", &["cupform", "lens", "--d", "4", "--s", "1", "--q", "1", "--json"]),
    ];
    for (name, args) in cases {
        let out = stdout(&kit(args));
        let path = golden_dir().join(format!("{name}.json"));
        if bless {
            std::fs::create_dir_all(golden_dir()).unwrap();
            std::fs::write(&path, &out).unwrap();
        }
        let stored = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(out, stored, "{name}");
    }
}

#[test]
fn paper_check_passes_within_budget() {
    let start = Instant::now();
    let o = kit(&["paper-check"]);
    let took = start.elapsed();
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let text = stdout(&o);
    assert!(text.lines().all(|l| l.starts_with("pass")), "{text}");
    for id in ["t3-vs-sum.cup-form.d5", "t3-vs-sum.burnside.d12", "lens.discrepancy.d6s2q5", "milnor.borromean"] {
        assert!(text.contains(id), "{id}");
    }
    // five minutes with a threefold margin
    assert!(took < Duration::from_secs(100), "paper-check took {took:?}");
}

#[test]
fn paper_check_respects_range_and_skips() {
    let o = kit(&["paper-check", "--d-range", "3..4", "--skip", "burnside", "--skip", "homology", "--json"]);
    assert_eq!(code(&o), 0);
    let r = json(&o);
    let ids: Vec<&str> = r["claims"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap()).collect();
    assert!(ids.contains(&"t3-vs-sum.cup-form.d3") && ids.contains(&"t3-vs-sum.cup-form.d4"));
    assert!(!ids.iter().any(|id| id.contains("burnside.d") || id.starts_with("homology.") || id == &"t3-vs-sum.cup-form.d5"));
    assert!(ids.contains(&"properties.smith-contract"));
}
