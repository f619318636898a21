//! End-to-end tests of the binary: spawn it against generated documents
//! and check outputs, machine reports, and exit codes.

use std::path::PathBuf;
use std::process::{Command, Output};

use polywedge::document::PairDocument;
use polywedge::fixtures;
use serde_json::Value;
use sha2::{Digest, Sha256};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_polywedge"))
}

fn temp_path(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("polywedge-cli-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let path = temp_path(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn prism_doc_path(name: &str) -> PathBuf {
    let doc = PairDocument::from_pair(&fixtures::prism_pair());
    write_temp(name, &doc.to_canonical_string())
}

fn stdout_json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("machine output parses as JSON")
}

#[test]
fn validate_reports_orders_and_hash() {
    let path = prism_doc_path("validate.json");
    let bytes = std::fs::read(&path).unwrap();
    let expected_hash: String =
        Sha256::digest(&bytes).iter().map(|b| format!("{b:02x}")).collect();

    let out = bin().args(["validate"]).arg(&path).args(["--format", "machine"]).output().unwrap();
    let report = stdout_json(&out);
    assert_eq!(report["command"], "validate");
    assert_eq!(report["input_hash"], Value::from(expected_hash));
    let results = &report["results"];
    assert_eq!(results["kind"], "pair");
    assert_eq!(results["orders"], serde_json::json!([2, 4, 1, 1, 1, 1]));
    assert_eq!(results["h_vector"], serde_json::json!([1, 2, 2, 1]));
}

#[test]
fn orders_restricted_to_a_face() {
    let path = prism_doc_path("orders.json");
    let out = bin()
        .args(["orders"])
        .arg(&path)
        .args(["--face", "F4", "--format", "machine"])
        .output()
        .unwrap();
    let report = stdout_json(&out);
    let rows = report["results"]["orders"].as_array().unwrap();
    let pairs: Vec<(String, i64)> = rows
        .iter()
        .map(|r| (r["vertex"].as_str().unwrap().to_owned(), r["order"].as_i64().unwrap()))
        .collect();
    assert_eq!(
        pairs,
        vec![("v1".into(), 1), ("v2".into(), 2), ("v3".into(), 1)]
    );
}

#[test]
fn wedge_emits_a_valid_document_and_vertex_map() {
    let path = prism_doc_path("wedge.json");
    let out = bin()
        .args(["wedge"])
        .arg(&path)
        .args(["--at", "F1", "--format", "machine"])
        .output()
        .unwrap();
    let report = stdout_json(&out);
    let doc = PairDocument::from_value(&report["results"]["document"]).unwrap();
    let pair = doc.to_pair().unwrap();
    assert_eq!(pair.polytope().facet_count(), 6);
    assert_eq!(pair.polytope().vertex_count(), 8);

    // Exactly the vertices off F1 (v3 and v6) split into two copies.
    let map = report["results"]["vertex_map"].as_array().unwrap();
    let split: Vec<&str> = map
        .iter()
        .filter(|row| !row["plus"].is_null())
        .map(|row| row["base"].as_str().unwrap())
        .collect();
    assert_eq!(split, vec!["v3", "v6"]);
}

#[test]
fn retraction_census_lift_pipeline() {
    let path = prism_doc_path("pipeline.json");
    let out = bin().args(["retraction"]).arg(&path).output().unwrap();
    assert!(out.status.success());
    let seq_text = String::from_utf8(out.stdout).unwrap();
    let seq_path = write_temp("pipeline-seq.json", &seq_text);

    let out = bin()
        .args(["census"])
        .arg(&path)
        .arg("--from")
        .arg(&seq_path)
        .args(["--format", "machine"])
        .output()
        .unwrap();
    let report = stdout_json(&out);
    assert_eq!(report["results"]["matches"], Value::from(true));
    assert_eq!(report["results"]["census"], serde_json::json!([1, 2, 2, 1]));

    let out = bin()
        .args(["lift"])
        .arg(&path)
        .args(["--facet", "F1"])
        .arg("--from")
        .arg(&seq_path)
        .args(["--format", "machine"])
        .output()
        .unwrap();
    let report = stdout_json(&out);
    let lifted = report["results"]["sequence"]["vertex_order"].as_array().unwrap();
    assert_eq!(lifted.len(), 8);
}

#[test]
fn avoiding_retraction_succeeds_on_the_prism() {
    let path = prism_doc_path("avoid.json");
    let out = bin()
        .args(["retraction"])
        .arg(&path)
        .args(["--avoid-prime", "2", "--format", "machine"])
        .output()
        .unwrap();
    let report = stdout_json(&out);
    assert_eq!(report["results"]["outcome"], "found");
}

#[test]
fn wsr_reports_clearing_factors() {
    let path = prism_doc_path("wsr.json");
    let out = bin()
        .args(["wsr"])
        .arg(&path)
        .args(["--degree", "1", "--format", "machine"])
        .output()
        .unwrap();
    let report = stdout_json(&out);
    let monomials = report["results"]["monomials"].as_array().unwrap();
    let clearing = report["results"]["clearing"].as_array().unwrap();
    let x4 = monomials
        .iter()
        .position(|m| m == &serde_json::json!([0, 0, 0, 1, 0]))
        .unwrap();
    assert_eq!(clearing[x4], Value::from(4));
}

#[test]
fn wps_orders_follow_the_weights() {
    let out = bin()
        .args(["wps", "--chi", "1,2,3", "--format", "machine"])
        .output()
        .unwrap();
    let report = stdout_json(&out);
    assert_eq!(report["results"]["orders"], serde_json::json!([1, 2, 3]));

    let out = bin()
        .args(["wps", "--chi", "1,1,2", "--arity", "2,1,1", "--format", "machine"])
        .output()
        .unwrap();
    let report = stdout_json(&out);
    let mut orders: Vec<i64> = report["results"]["orders"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_i64().unwrap())
        .collect();
    orders.sort_unstable();
    assert_eq!(orders, vec![1, 1, 1, 2]);
}

#[test]
fn presentation_is_gated_on_the_certificate() {
    let path = prism_doc_path("presentation.json");
    let out = bin()
        .args(["presentation"])
        .arg(&path)
        .args(["--max-degree", "1", "--format", "machine"])
        .output()
        .unwrap();
    let report = stdout_json(&out);
    assert_eq!(report["results"]["certified"], Value::from(true));
    assert_eq!(report["results"]["sr_generators"].as_array().unwrap().len(), 2);

    // All-even orders: no avoiding sequence for 2 exists, so no
    // presentation and exit code 4.
    let doc = PairDocument::from_pair(&fixtures::even_pentagon_pair());
    let path = write_temp("presentation-even.json", &doc.to_canonical_string());
    let out = bin().args(["presentation"]).arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn formality_exit_code_distinguishes_certification() {
    let path = prism_doc_path("formality.json");
    let out = bin().args(["formality"]).arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(0));

    let doc = PairDocument::from_pair(&fixtures::even_pentagon_pair());
    let path = write_temp("formality-even.json", &doc.to_canonical_string());
    let out = bin().args(["formality"]).arg(&path).args(["--format", "machine"]).output().unwrap();
    assert_eq!(out.status.code(), Some(4));
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["results"]["certified"], Value::from(false));
    assert_eq!(report["results"]["primes"][0]["reason"], "search-exhausted");
}

#[test]
fn schema_and_condition_exit_codes() {
    let path = write_temp("bad.json", "not json at all");
    let out = bin().args(["validate"]).arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    let dependent = r#"{
        "dim": 2,
        "facets": ["F1", "F2", "F3"],
        "vertices": [
            {"label": "v1", "facets": ["F2", "F3"]},
            {"label": "v2", "facets": ["F1", "F3"]},
            {"label": "v3", "facets": ["F1", "F2"]}
        ],
        "lambda": {"F1": [1, 0], "F2": [2, 0], "F3": [0, 1]}
    }"#;
    let path = write_temp("dependent.json", dependent);
    let out = bin().args(["validate"]).arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("v3"), "witness vertex missing: {err}");

    let out = bin().args(["orders"]).arg(&path).args(["--face", "nope"]).output().unwrap();
    assert_eq!(out.status.code(), Some(3), "condition reported before face lookup");
}

#[test]
fn unknown_facet_label_is_a_usage_error() {
    let path = prism_doc_path("usage.json");
    let out = bin().args(["orders"]).arg(&path).args(["--face", "nope"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = bin().args(["wedge"]).arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(1), "wedge requires --at or --arity");
}
