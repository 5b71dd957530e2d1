use serde_json::Value;
use std::process::{Command, Output};

fn qtau(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtau")).args(args).output().expect("binary runs")
}

fn qtau_env(args: &[&str], key: &str, val: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtau")).args(args).env(key, val).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut a = args.to_vec();
    a.extend(["--out", "json"]);
    let o = qtau(&a);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)));
    (o.status.code().unwrap(), v)
}

fn artifact<'a>(v: &'a Value, name: &str) -> &'a Value {
    v["artifacts"].as_array().unwrap().iter().find(|a| a["name"] == name).map(|a| &a["value"]).unwrap()
}

fn write_gcm(name: &str, body: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("qtau-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

#[test]
fn a3_tau_from_gcm_file() {
    let p = write_gcm("a3.json", r#"{"labels": ["1","2","3"], "cartan": [[2,-1,0],[-1,2,-1],[0,-1,2]]}"#);
    let (code, v) = json(&["tau", "compute", "--gcm", p.to_str().unwrap(), "--realization", "cc", "--word", "1,2,3,1,2,1", "--weight", "L1"]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "pass");
    // the chain X_k in coroot coordinates: beta_2 = b1 + b2, beta_3 - beta_5 = b1, beta_3 - beta_6 = b1 + b2
    assert_eq!(artifact(&v, "X2"), "f1 f2 + b1 + b2");
    assert_eq!(artifact(&v, "X6"), "f1 f2 f3 + b1 f1 + (b1 + b2) f3");
    assert_eq!(artifact(&v, "weight"), "0,0,-1");
}

#[test]
fn okamoto_q2() {
    let o = qtau(&["okamoto", "--m", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let s = String::from_utf8(o.stdout).unwrap();
    assert!(s.contains("Q2 = x^2 + 1"), "{s}");
    assert!(s.contains("Q0 = 1") && s.contains("Q1 = 1"));
    let (code, v) = json(&["okamoto", "--m", "3"]);
    assert_eq!(code, 0);
    assert_eq!(artifact(&v, "Q3"), "x^6 + 5*x^4 + 5*x^2 + 5");
}

#[test]
fn non_reduced_word_is_an_input_error() {
    let o = qtau(&["verma", "divide", "--gcm", "A2", "--word", "1,1", "--lambda", "rho", "--mu", "rho"]);
    assert_eq!(o.status.code(), Some(3));
    let o = qtau(&["tau", "compute", "--gcm", "A2", "--word", "1,1", "--weight", "L1"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn input_errors_exit_3() {
    assert_eq!(qtau(&["bogus"]).status.code(), Some(3));
    assert_eq!(qtau(&["okamoto"]).status.code(), Some(3));
    assert_eq!(qtau(&["okamoto", "--m", "0"]).status.code(), Some(3));
    assert_eq!(qtau(&["gcm", "validate", "--gcm", "missing.json"]).status.code(), Some(3));
    let bad = write_gcm("bad.json", r#"{"labels": ["1","2"], "cartan": [[2,-1],[0,2]]}"#);
    assert_eq!(qtau(&["gcm", "validate", "--gcm", bad.to_str().unwrap()]).status.code(), Some(3));
    let garbled = write_gcm("garbled.json", "{");
    assert_eq!(qtau(&["gcm", "validate", "--gcm", garbled.to_str().unwrap()]).status.code(), Some(3));
    assert_eq!(qtau(&["tau", "compute", "--gcm", "A2", "--realization", "zz", "--weight", "L1"]).status.code(), Some(3));
    assert_eq!(qtau(&["verma", "divide", "--gcm", "A2", "--big", "f1 +", "--small", "f1"]).status.code(), Some(3));
    assert_eq!(qtau(&["--help"]).status.code(), Some(0));
}

#[test]
fn gcm_validate_reports_symmetrizer() {
    let (code, v) = json(&["gcm", "validate", "--gcm", "B2"]);
    assert_eq!(code, 0);
    assert_eq!(artifact(&v, "symmetrizer"), &serde_json::json!([2, 1]));
}

#[test]
fn report_field_order_is_stable() {
    let o = qtau(&["okamoto", "--m", "1", "--out", "json"]);
    let s = String::from_utf8(o.stdout).unwrap();
    let pos = |k: &str| s.find(&format!("\"{k}\"")).unwrap();
    assert!(pos("command") < pos("status"));
    assert!(pos("status") < pos("exit_code"));
    assert!(pos("exit_code") < pos("checks"));
    assert!(pos("checks") < pos("artifacts"));
    assert!(pos("artifacts") < pos("timings"));
}

#[test]
fn reports_are_deterministic_apart_from_timings() {
    let args = ["verify", "braid", "--gcm", "B2", "--realization", "qc", "--out", "json"];
    let strip = |o: Output| {
        let mut v: Value = serde_json::from_slice(&o.stdout).unwrap();
        v.as_object_mut().unwrap().remove("timings");
        serde_json::to_string(&v).unwrap()
    };
    assert_eq!(strip(qtau(&args)), strip(qtau(&args)));
}

#[test]
fn braid_relations_pass() {
    for (gcm, real) in [("A2", "cc"), ("B2", "qc"), ("G2", "cc"), ("B2", "classical")] {
        let (code, v) = json(&["verify", "braid", "--gcm", gcm, "--realization", real]);
        assert_eq!(code, 0, "{gcm} {real}");
        assert!(!v["checks"].as_array().unwrap().is_empty());
    }
}

#[test]
fn unsupported_localization_exits_2() {
    let (code, v) = json(&["verify", "verma-identity", "--realization", "weyl:A2", "--pair", "1,2", "--bound", "1"]);
    assert_eq!(code, 2);
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().any(|c| c["status"] == "unsupported"));
    assert!(checks.iter().all(|c| c["status"] != "fail"));
    assert!(checks.iter().any(|c| c["name"] == "x-d closed sum (1,1)" && c["status"] == "pass"));
}

#[test]
fn hirota_identity_passes_and_commutativity_claims_fail() {
    let (code, v) = json(&["verify", "hirota", "--n", "3", "--k", "1"]);
    assert_eq!(code, 1);
    for c in v["checks"].as_array().unwrap() {
        let name = c["name"].as_str().unwrap();
        let claim = name.ends_with("s_k(tau_k) and s_k+1(tau_k+1) commute")
            || name.ends_with("does not commute with [a_k+a_k+1]");
        if c["informational"] == true {
            continue;
        }
        assert_eq!(c["status"] == "fail", claim, "{name}");
    }
}

#[test]
fn divide_expressions() {
    let (code, v) = json(&["verma", "divide", "--gcm", "A2", "--big", "f1 f2 f1 - 2 f2 f1 f1", "--small", "f1"]);
    assert_eq!(code, 0);
    assert_eq!(artifact(&v, "quotient"), "f1 f2 - 2 f2 f1");
    let (code, v) = json(&["verma", "divide", "--gcm", "A2", "--big", "f1 f2", "--small", "f1"]);
    assert_eq!(code, 0);
    assert_eq!(artifact(&v, "quotient"), &Value::Null);
    let (code, v) = json(&["verma", "divide", "--gcm", "A2", "--case", "q", "--word", "1,2,1", "--lambda", "rho", "--mu", "L1"]);
    assert_eq!(code, 0, "{v}");
}

#[test]
fn degree_cap_from_environment() {
    let args = ["verma", "divide", "--gcm", "A2", "--word", "1,2,1", "--lambda", "rho", "--mu", "rho"];
    assert_eq!(qtau(&args).status.code(), Some(0));
    let o = qtau_env(&args, "QTAU_VERMA_MAXDEG", "3");
    assert_eq!(o.status.code(), Some(3), "{}", String::from_utf8_lossy(&o.stdout));
}

#[test]
fn crosscheck_and_q1_limit() {
    let (code, v) = json(&["verma", "crosscheck", "--gcm", "B2", "--realization", "qc", "--word", "1,2", "--lambda", "rho", "--mu", "L2"]);
    assert_eq!(code, 0, "{v}");
    let (code, _) = json(&["verma", "crosscheck", "--gcm", "A2", "--realization", "classical", "--word", "1"]);
    assert_eq!(code, 3);
}

#[test]
fn reduced_words_and_regularity() {
    assert_eq!(qtau(&["verify", "reduced-word", "--gcm", "A2", "--max-len", "3"]).status.code(), Some(0));
    assert_eq!(qtau(&["tau", "check-regular", "--gcm", "A2", "--realization", "qc"]).status.code(), Some(0));
    assert_eq!(qtau(&["tau", "check-regular", "--gcm", "B2", "--realization", "classical"]).status.code(), Some(0));
}
