use std::process::Command;

use basesize::Error;
use basesize_cli::commands::*;
use basesize_cli::exit_code;
use serde_json::Value;

fn subsets(n: usize, k: usize, trace: bool) -> SubsetsArgs {
    SubsetsArgs {
        n,
        k,
        max_l: None,
        trace,
        scalar: Scalar::Big,
    }
}

fn partitions(n: usize, r: usize, s: usize) -> PartitionsArgs {
    PartitionsArgs {
        n,
        r,
        s,
        l_max: None,
        ceiling: 16,
        cache_dir: None,
        oracle: false,
        scalar: Scalar::Big,
    }
}

fn verify(group: &str, labels: &str) -> VerifyArgs {
    VerifyArgs {
        group: group.into(),
        labels: labels.into(),
        l_max: None,
        seed: 0,
    }
}

fn out<'a>(doc: &'a basesize_cli::ResultDocument, key: &str) -> &'a Value {
    doc.outputs().get(key).unwrap_or_else(|| panic!("missing output {key}"))
}

#[test]
fn basesize_subsets_examples() {
    let doc = cmd_basesize_subsets(&subsets(6, 1, false)).unwrap();
    assert_eq!(doc.output_str("base_size"), Some("5"));

    let doc = cmd_basesize_subsets(&subsets(5, 2, true)).unwrap();
    let trace = out(&doc, "trace").as_array().unwrap();
    let counts: Vec<&str> = trace.iter().map(|t| t["count"].as_str().unwrap()).collect();
    let (last, zeros) = counts.split_last().unwrap();
    assert!(zeros.iter().all(|c| *c == "0"));
    assert_ne!(*last, "0");
    assert_eq!(doc.output_str("base_size"), Some(trace.len().to_string().as_str()));

    let err = cmd_basesize_subsets(&subsets(4, 2, false)).unwrap_err();
    assert_eq!(exit_code(&err), 2);
    let mut capped = subsets(8, 1, false);
    capped.max_l = Some(2);
    assert_eq!(exit_code(&cmd_basesize_subsets(&capped).unwrap_err()), 3);
}

#[test]
fn i128_scalar_reports_overflow() {
    let err = cmd_orbits(&OrbitsArgs {
        n: 25,
        k: 12,
        l: 10,
        scalar: Scalar::I128,
    })
    .unwrap_err();
    assert!(matches!(err, Error::Overflow(_)));
    assert_eq!(exit_code(&err), 3);
    let mut a = subsets(9, 3, false);
    a.scalar = Scalar::I128;
    assert_eq!(
        cmd_basesize_subsets(&a).unwrap().output_str("base_size"),
        cmd_basesize_subsets(&subsets(9, 3, false)).unwrap().output_str("base_size")
    );
}

#[test]
fn orbits_examples() {
    let run = |n, k, l| {
        cmd_orbits(&OrbitsArgs {
            n,
            k,
            l,
            scalar: Scalar::Big,
        })
        .unwrap()
    };
    let doc = run(3, 1, 2);
    assert_eq!(
        (doc.output_str("regular"), doc.output_str("o"), doc.output_str("o_K")),
        (Some("1"), Some("2"), Some("3"))
    );
    let doc = run(4, 1, 1);
    assert_eq!((doc.output_str("regular"), doc.output_str("o")), (Some("0"), Some("1")));
    assert_eq!(run(15, 5, 1).output_str("regular"), Some("0"));
}

#[test]
fn wreath_examples() {
    let args = |n, k, r: Option<usize>, dist: Option<usize>, oracle| WreathArgs {
        n,
        k,
        r,
        dist,
        max_l: None,
        oracle,
        scalar: Scalar::Big,
    };
    let doc = cmd_wreath(&args(3, 1, Some(2), None, true)).unwrap();
    assert_eq!(doc.output_str("base_size"), Some("3"));
    assert_eq!(out(&doc, "agree"), &Value::Bool(true));

    let d1 = cmd_wreath(&args(5, 2, None, Some(1), false)).unwrap();
    let b = cmd_basesize_subsets(&subsets(5, 2, false)).unwrap();
    assert_eq!(d1.output_str("base_size"), b.output_str("base_size"));

    let doc = cmd_wreath(&args(4, 1, Some(2), None, true)).unwrap();
    assert_eq!(doc.output_str("base_size"), doc.output_str("oracle_base_size"));

    assert_eq!(exit_code(&cmd_wreath(&args(5, 1, Some(2), Some(2), false)).unwrap_err()), 2);
    assert_eq!(exit_code(&cmd_wreath(&args(5, 1, None, Some(0), false)).unwrap_err()), 2);
}

#[test]
fn bounds_examples() {
    let run = |m, k, r| {
        cmd_bounds(&BoundsArgs {
            m,
            k,
            r,
            max_l: None,
            scalar: Scalar::Big,
        })
    };
    let doc = run(5, 1, 2).unwrap();
    assert_eq!((doc.output_str("lower"), doc.output_str("upper")), (Some("3"), Some("5")));
    let doc = run(5, 1, 1).unwrap();
    let b4 = cmd_basesize_subsets(&subsets(4, 1, false)).unwrap();
    let b5 = cmd_basesize_subsets(&subsets(5, 1, false)).unwrap();
    assert_eq!(doc.output_str("lower"), b4.output_str("base_size"));
    assert_eq!(doc.output_str("upper"), b5.output_str("base_size"));
    assert_eq!(exit_code(&run(4, 2, 2).unwrap_err()), 2);
}

#[test]
fn partitions_action_small_cases() {
    let mut a = partitions(6, 3, 2);
    a.oracle = true;
    let doc = cmd_partitions_action(&a).unwrap();
    assert_eq!(doc.output_str("domain_size"), Some("15"));
    assert_eq!(out(&doc, "character").as_array().unwrap().len(), 11);
    assert!(doc.output_str("min_l").is_some());
    assert!(doc.output_str("oracle_base_size").is_some());
    assert!(doc.outputs().contains_key("formula_equals_oracle"));
    assert!(!doc.warnings().is_empty());

    assert_eq!(exit_code(&cmd_partitions_action(&partitions(6, 2, 2)).unwrap_err()), 2);
    assert_eq!(exit_code(&cmd_partitions_action(&partitions(18, 3, 6)).unwrap_err()), 3);

    let doc = cmd_partitions_action(&partitions(4, 1, 4)).unwrap();
    assert_eq!(out(&doc, "min_l"), &Value::Null);
}

#[test]
fn partitions_cache_is_reused() {
    let dir = tempfile::tempdir().unwrap();
    let mut a = partitions(8, 2, 4);
    a.cache_dir = Some(dir.path().to_path_buf());
    let first = cmd_partitions_action(&a).unwrap();
    assert!(dir.path().join("setpartitions-8-2x4.bin").exists());
    let second = cmd_partitions_action(&a).unwrap();
    assert_eq!(first.to_json_untimed(), second.to_json_untimed());
}

#[test]
fn verify_examples() {
    let doc = cmd_verify(&verify("pgl2:7", "auto")).unwrap();
    assert_eq!(out(&doc, "base_controlling"), &Value::Bool(true));
    assert_eq!(doc.output_str("base_size"), Some("3"));
    let orbits = out(&doc, "orbits").as_array().unwrap();
    assert_eq!(orbits[2]["regular"], "1");

    let doc = cmd_verify(&verify("sn:6/subsets:2", "sgn")).unwrap();
    assert_eq!(out(&doc, "base_controlling"), &Value::Bool(true));
    assert_eq!(out(&doc, "formula_equals_oracle"), &Value::Bool(true));
    assert_eq!(doc.output_str("base_size"), doc.output_str("formula_base_size"));

    let doc = cmd_verify(&verify("sn:6/partitions:3x2", "sgn")).unwrap();
    assert!(doc.outputs().contains_key("verdict"));
    if out(&doc, "base_controlling") == &Value::Bool(true) {
        assert_eq!(out(&doc, "formula_equals_oracle"), &Value::Bool(true));
    }

    let doc = cmd_verify(&verify("sn:3/wreath:2", "auto")).unwrap();
    assert_eq!(doc.output_str("base_size"), Some("3"));
    assert_eq!(out(&doc, "formula_equals_oracle"), &Value::Bool(true));

    // A_5 has no odd elements, so the controlling check is skipped with a warning
    let doc = cmd_verify(&verify("an:5", "sgn")).unwrap();
    assert_eq!(out(&doc, "base_controlling"), &Value::Null);
    assert!(!doc.warnings().is_empty());

    assert_eq!(exit_code(&cmd_verify(&verify("sn:x", "auto")).unwrap_err()), 2);
    assert_eq!(exit_code(&cmd_verify(&verify("sn:4", "bogus")).unwrap_err()), 2);
}

#[test]
fn documents_are_deterministic_and_integers_are_strings() {
    let a = cmd_partitions_action(&partitions(8, 4, 2)).unwrap();
    let b = cmd_partitions_action(&partitions(8, 4, 2)).unwrap();
    assert_eq!(a.to_json_untimed(), b.to_json_untimed());
    let json = a.to_json();
    assert!(json["timing_ms"].is_string());
    let text = serde_json::to_string(&json).unwrap();
    let back: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(back, json);

    let big = cmd_orbits(&OrbitsArgs {
        n: 25,
        k: 12,
        l: 10,
        scalar: Scalar::Big,
    })
    .unwrap();
    let o = big.output_str("o").unwrap();
    assert!(o.len() > 20 && o.bytes().all(|c| c.is_ascii_digit()));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_basesize");
    let run = |args: &[&str]| Command::new(bin).args(args).output().unwrap();

    let ok = run(&["basesize-subsets", "--n", "6", "--k", "1"]);
    assert_eq!(ok.status.code(), Some(0));
    let doc: Value = serde_json::from_slice(&ok.stdout).unwrap();
    assert_eq!(doc["outputs"]["base_size"], "5");

    assert_eq!(run(&["basesize-subsets", "--n", "4", "--k", "2"]).status.code(), Some(2));
    assert_eq!(
        run(&["basesize-subsets", "--n", "9", "--k", "1", "--max-l", "3"]).status.code(),
        Some(3)
    );
    assert_eq!(run(&["bounds", "--m", "4", "--k", "2", "--r", "2"]).status.code(), Some(2));
    assert_eq!(run(&["partitions-action", "--n", "6", "--r", "2", "--s", "2"]).status.code(), Some(2));
    assert_eq!(run(&["orbits", "--n", "5"]).status.code(), Some(2));
    let err = run(&["verify", "--group", "foo:3"]);
    assert_eq!(err.status.code(), Some(2));
    assert!(!err.stderr.is_empty() && err.stdout.is_empty());
}
