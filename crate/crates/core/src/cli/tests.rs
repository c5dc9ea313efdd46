use std::path::PathBuf;

use clap::Parser;

use super::*;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).display().to_string()
}

fn run(args: &[&str]) -> Result<String, CliError> {
    let mut full = vec!["ziegler"];
    full.extend_from_slice(args);
    let config = RunConfig::try_parse_from(full).map_err(|e| CliError::Usage(e.to_string()))?;
    config.validate()?;
    run_command(&config)
}

#[test]
fn domain_parsing() {
    assert_eq!("q".parse::<Domain>(), Ok(Domain::Q));
    assert_eq!("gfp".parse::<Domain>(), Ok(Domain::Gfp));
    assert_eq!("qsqrt:5".parse::<Domain>(), Ok(Domain::QSqrt(5)));
    assert!("qsqrt:x".parse::<Domain>().is_err());
    assert!("reals".parse::<Domain>().is_err());
}

#[test]
fn config_validation() {
    assert!(matches!(run(&["--primes", "10", "tn", "5"]), Err(CliError::Usage(_))));
    assert!(matches!(run(&["--domain", "q", "--primes", "7", "tn", "5"]), Err(CliError::Usage(_))));
    let err = run(&["--domain", "q", "betti", &fixture("Qsqrt5.arr")]).unwrap_err();
    assert!(err.to_string().contains("cannot be computed"), "{err}");
}

#[test]
fn betti_text_and_json_agree() {
    let b = fixture("B.arr");
    assert_eq!(run(&["betti", &b]).unwrap(), "d=(6_6), c=(7_4)");
    assert_eq!(run(&["--domain", "q", "betti", &b]).unwrap(), "d=(6_6), c=(7_4)");
    let json: serde_json::Value = serde_json::from_str(&run(&["--format", "json", "betti", &b]).unwrap()).unwrap();
    let betti: crate::resolution::BettiData = serde_json::from_value(json[0]["betti"].clone()).unwrap();
    assert_eq!(betti.to_string(), "d=(6_6), c=(7_4)");
    assert_eq!(json[0]["mdr"], 6);
}

#[test]
fn explicit_primes_are_used() {
    let json = run(&["--format", "json", "--primes", "1000003,1000033", "betti", &fixture("B.arr")]).unwrap();
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v[0]["primes"], serde_json::json!([1000003, 1000033]));
}

#[test]
fn hilbert_text_and_json_agree() {
    let text = run(&["hilbert", &fixture("Bprime.arr")]).unwrap();
    let json: serde_json::Value =
        serde_json::from_str(&run(&["--format", "json", "hilbert", &fixture("Bprime.arr")]).unwrap()).unwrap();
    let values: Vec<i64> = serde_json::from_value(json["values"].clone()).unwrap();
    let line = text.lines().next().unwrap();
    let shown: Vec<i64> = line.split(": ").nth(1).unwrap().split(", ").map(|v| v.parse().unwrap()).collect();
    assert_eq!(shown, values);
    assert_eq!(&values[10..16], &[48, 48, 46, 43, 42, 42]);
    assert!(text.contains("stabilization: 14"));
}

#[test]
fn ziegler_report() {
    let out = run(&["ziegler", &fixture("B.arr"), &fixture("Bprime.arr")]).unwrap();
    assert!(out.contains("is_ziegler_pair: true"), "{out}");
    assert!(out.contains("HF: false at degree 13 (42 vs 43)"), "{out}");
    let with_family = run(&[
        "ziegler",
        &fixture("B.arr"),
        &fixture("Bprime.arr"),
        "--family",
        &fixture("Bfamily.arr"),
        "--samples",
        "0,1,2",
    ])
    .unwrap();
    assert!(with_family.contains("t = 1: degenerate"), "{with_family}");
    assert!(with_family.contains("SPEC0: false"), "{with_family}");
}

#[test]
fn lattice_and_cone_commands() {
    let out = run(&["lattice", &fixture("B.arr"), "--against", &fixture("Bprime.arr")]).unwrap();
    assert!(out.contains("rank 2: 6 flats of multiplicity 3"));
    assert!(out.contains("isomorphic to Bprime.arr"));
    let out = run(&["cone", &fixture("Bprime.arr")]).unwrap();
    assert!(out.contains("51u-222"), "{out}");
    let out = run(&["tame", &fixture("B.arr")]).unwrap();
    assert!(out.ends_with("tame: true"), "{out}");
}

#[test]
fn matroid_commands() {
    let out = run(&["tn", "10", "--automorphisms"]).unwrap();
    assert!(out.contains("dependent triples (12, formula 12)"), "{out}");
    assert!(out.contains("translations a = 0"), "{out}");
    assert!(matches!(run(&["tn", "2"]), Err(CliError::Matroid(_))));
    let out = run(&["qt", "3"]).unwrap();
    assert!(out.contains("[6:-3:-1]"));
    assert!(out.contains("type 2A"));
    assert!(matches!(run(&["qt", "2"]), Err(CliError::Arrangement(_))));
    let out = run(&["realize", "2,1,5,7,11"]).unwrap();
    assert!(out.contains("x2 - 1"), "{out}");
    assert!(matches!(run(&["realize", "1,2"]), Err(CliError::Usage(_))));
}

#[test]
fn missing_file_is_an_error() {
    let err = run(&["betti", "/nonexistent/file.arr"]).unwrap_err();
    assert!(err.to_string().contains("/nonexistent/file.arr"), "{err}");
}
