//! End-to-end runs of the command-line front end, reports written to a
//! temporary directory.

use std::path::Path;

use cyclo_schur::cli::run;
use serde_json::Value;
use tempfile::TempDir;

fn invoke(dir: &Path, name: &str, args: &[&str]) -> (i32, Value) {
    let out = dir.join(name);
    let mut argv = vec!["cyclo-schur"];
    argv.extend_from_slice(args);
    let out_s = out.to_str().unwrap().to_string();
    argv.extend_from_slice(&["--out", &out_s]);
    let code = run(argv);
    let doc = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    (code, doc)
}

#[test]
fn dim_of_the_trivial_case_is_one() {
    let d = TempDir::new().unwrap();
    let (code, doc) = invoke(d.path(), "a.json", &["dim", "--n", "1", "--r", "1"]);
    assert_eq!(code, 0);
    assert_eq!(doc["status"], "pass");
    for key in ["hecke_dim", "schur_dim", "quotient_dim", "modified_dim"] {
        assert_eq!(doc["data"][key], 1, "{key}");
    }
}

#[test]
fn dim_block_sum_at_three_two() {
    let d = TempDir::new().unwrap();
    let (code, doc) = invoke(d.path(), "a.json", &["dim", "--n", "3", "--r", "2", "--p", "(1,1)"]);
    assert_eq!(code, 0);
    assert_eq!(doc["data"]["modified_dim"], 48);
    // u128 count, emitted as a string
    assert_eq!(doc["data"]["block_sum"], "48");
}

#[test]
fn decomp_reports_string_scalars_and_arrays() {
    let d = TempDir::new().unwrap();
    let (code, doc) = invoke(d.path(), "a.json", &["decomp", "--n", "2", "--r", "1"]);
    assert_eq!(code, 0);
    assert_eq!(doc["config"]["q"], "2");
    assert_eq!(doc["config"]["p"], serde_json::json!([1]));
    let m = &doc["data"]["matrix"];
    assert!(m.is_array() || m.is_object());
}

#[test]
fn structure_suite_passes() {
    let d = TempDir::new().unwrap();
    let (code, doc) = invoke(d.path(), "a.json", &["verify", "structure", "--n", "2", "--r", "2", "--p", "2"]);
    assert_eq!(code, 0, "{doc}");
}

#[test]
fn product_formula_at_three_two() {
    let d = TempDir::new().unwrap();
    let (code, doc) = invoke(d.path(), "a.json", &["verify", "product-formula", "--n", "3", "--r", "2", "--p", "1,1"]);
    assert_eq!(code, 0, "{doc}");
}

#[test]
fn failing_suite_exits_one() {
    // the literal presentation reading breaks once a block is nonempty
    let d = TempDir::new().unwrap();
    let (code, doc) = invoke(d.path(), "a.json", &["verify", "presentation", "--n", "2", "--r", "2", "--p", "1,1"]);
    assert_eq!(code, 1);
    assert_eq!(doc["status"], "fail");
    assert!(doc["checks"].as_array().unwrap().iter().any(|c| c["passed"] == false));
}

#[test]
fn repeated_parameters_are_a_hypothesis_failure() {
    let d = TempDir::new().unwrap();
    let (code, doc) =
        invoke(d.path(), "a.json", &["verify", "presentation", "--n", "2", "--r", "2", "--p", "1,1", "--Q", "1,1"]);
    assert_eq!(code, 2);
    assert_eq!(doc["error"]["kind"], "HypothesisNotMet");
}

#[test]
fn invalid_configs_exit_two() {
    let d = TempDir::new().unwrap();
    let cases: [&[&str]; 4] = [
        &["dim", "--n", "5", "--r", "3"],
        &["dim", "--n", "2", "--r", "2", "--q", "5"],
        &["dim", "--n", "2", "--r", "2", "--p", "3"],
        &["dim", "--n", "2", "--r", "2", "--field", "fp:6"],
    ];
    for (i, args) in cases.iter().enumerate() {
        let (code, doc) = invoke(d.path(), &format!("{i}.json"), args);
        assert_eq!(code, 2, "{args:?}");
        assert_eq!(doc["error"]["kind"], "InvalidConfig", "{args:?}");
    }
    assert_eq!(run(["cyclo-schur", "verify", "no-such-suite", "--n", "1", "--r", "1"]), 2);
}

#[test]
fn output_is_deterministic() {
    let d = TempDir::new().unwrap();
    let args = ["verify", "standardly-based", "--n", "2", "--r", "2", "--p", "1,1", "--seed", "7"];
    invoke(d.path(), "a.json", &args);
    invoke(d.path(), "b.json", &args);
    let a = std::fs::read(d.path().join("a.json")).unwrap();
    let b = std::fs::read(d.path().join("b.json")).unwrap();
    assert_eq!(a, b);
}

#[test]
fn cache_round_trip() {
    let d = TempDir::new().unwrap();
    let cache = d.path().join("cache");
    let cache = cache.to_str().unwrap();
    let build = ["cache", "build", "--n", "2", "--r", "2", "--p", "1,1", "--cache-dir", cache];
    let (code, first) = invoke(d.path(), "1.json", &build);
    assert_eq!(code, 0);
    assert_eq!(first["data"]["hit"], false);
    assert_eq!(first["data"]["dim"], 8);
    let (_, second) = invoke(d.path(), "2.json", &build);
    assert_eq!(second["data"]["hit"], true);
    assert_eq!(second["data"]["key"], first["data"]["key"]);

    let (code, listing) = invoke(d.path(), "3.json", &["cache", "inspect", "--cache-dir", cache]);
    assert_eq!(code, 0);
    assert_eq!(listing["data"]["entries"].as_array().unwrap().len(), 1);

    let (_, purged) = invoke(d.path(), "4.json", &["cache", "purge", "--cache-dir", cache]);
    assert_eq!(purged["data"]["removed"], 1);
    let (_, empty) = invoke(d.path(), "5.json", &["cache", "inspect", "--cache-dir", cache]);
    assert!(empty["data"]["entries"].as_array().unwrap().is_empty());
}
