use std::process::{Command, Output};

fn leibniz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_leibniz")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn check_catalog_algebra() {
    let o = leibniz(&["check", "g1n1:n=5"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("leibniz: true\n"));
    assert!(s.contains("lie: true\n"));
    assert!(s.contains("nil_index: 4\n"));
}

#[test]
fn check_abelian_document() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ab.json");
    std::fs::write(
        &path,
        r#"{"schema_version":"1","dim":3,"field":"Q","labels":["a","b","c"],"brackets":[]}"#,
    )
    .unwrap();
    let o = leibniz(&["check", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("nil_index: 2\n"));
}

#[test]
fn perturbed_document_fails_identity() {
    let o = leibniz(&["export", "g2n1:n=6"]);
    assert_eq!(o.status.code(), Some(0));
    let mut doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    doc["brackets"][0]["terms"][0]["num"] = "3".into();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.json");
    std::fs::write(&path, doc.to_string()).unwrap();
    let o = leibniz(&["check", path.to_str().unwrap(), "--format", "structured"]);
    assert_eq!(o.status.code(), Some(1));
    let r: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r["result"]["leibniz"], false);
    assert!(r["result"]["first_failure"]["args"].is_string());
}

#[test]
fn export_round_trips_through_check() {
    let o = leibniz(&["export", "R7_g1:n=5,b2=2"]);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    std::fs::write(&path, &o.stdout).unwrap();
    let a = leibniz(&["check", "R7_g1:n=5,b2=2", "--format", "structured"]);
    let b = leibniz(&["check", path.to_str().unwrap(), "--format", "structured"]);
    let a: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let b: serde_json::Value = serde_json::from_slice(&b.stdout).unwrap();
    assert_eq!(a["input_fingerprint"], b["input_fingerprint"]);
    assert_eq!(a["result"], b["result"]);
}

#[test]
fn cohomology_of_rigid_extension() {
    let o = leibniz(&["cohomology", "R_g1n1_2:n=5", "--degree", "2", "--theory", "leibniz"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\ndim: 0\n"));
}

#[test]
fn grading_reports_weights() {
    let o = leibniz(&["grading", "g2n1:n=5", "--bound", "10"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("length: 5\n"));
    assert!(s.contains("  - e5=2\n"));
}

#[test]
fn invalid_usage_exits_2() {
    for args in [
        vec!["cohomology", "g1n1:n=5", "--degree", "3"],
        vec!["cohomology", "g1n1:n=5", "--theory", "jordan"],
        vec!["check", "g1n1:n=4"],
        vec!["grading", "g1n1:n=5", "--bound", "0"],
        vec!["nilradical", "g1n1:n=5", "--nilradical", "0"],
        vec!["frobnicate"],
    ] {
        assert_eq!(leibniz(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn reproduce_is_deterministic_and_reports_discrepancies() {
    let a = leibniz(&["reproduce", "--n", "5", "--seed", "7", "--trials", "1"]);
    let b = leibniz(&["reproduce", "--n", "5", "--seed", "7", "--trials", "1"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), Some(1));
    let s = stdout(&a);
    assert!(s.contains("g1n1:n=5: 9 parameters but dim Der = 10"), "{s}");
    assert!(s.contains("R_g2_9_1: listed 2-cochain cocycle=false"), "{s}");
}

#[test]
fn nilradical_certificate_for_two_dim_complement() {
    let o = leibniz(&["nilradical", "R_g2n1_2:n=5", "--format", "structured"]);
    assert_eq!(o.status.code(), Some(0));
    let r: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r["result"]["nil_independence_method"], "triangular");
    assert_eq!(r["result"]["passed"], true);
}
