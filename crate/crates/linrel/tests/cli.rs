//! End-to-end tests of the command-line interface against the fixture
//! corpus. Every documented invocation shape is exercised here.

use std::path::PathBuf;

use linrel::cli::run;

fn fixture(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/fixtures");
    p.push(name);
    p.display().to_string()
}

fn cli(args: &[&str]) -> (i32, String) {
    let mut full = vec!["linrel".to_string()];
    full.extend(args.iter().map(|s| s.to_string()));
    run(full)
}

#[test]
fn roundtrip_is_byte_identical_on_the_fixture_corpus() {
    for name in ["z", "mul_i", "g1", "sa1", "sa2", "m0", "swap"] {
        let path = fixture(&format!("{name}.json"));
        let original = std::fs::read_to_string(&path).unwrap();
        let parsed = linrel::io::parse_relation_file(path.as_ref()).unwrap();
        let serialized = linrel::io::serialize_relation(&parsed.relation);
        assert_eq!(serialized, original, "fixture {name} is not canonical");
        let reparsed = linrel::io::parse_relation_str(&serialized, name).unwrap();
        assert_eq!(reparsed.relation, parsed.relation);
    }
}

#[test]
fn adjoint_of_z_is_everything() {
    let (code, out) = cli(&["adjoint", &fixture("z.json")]);
    assert_eq!(code, 0);
    let parsed = linrel::io::parse_relation_str(&out, "out").unwrap();
    assert_eq!(parsed.relation, linrel::LinearRelation::everything(1));
}

#[test]
fn adjoint_of_mult_by_i() {
    let (code, out) = cli(&["adjoint", &fixture("mul_i.json")]);
    assert_eq!(code, 0);
    let parsed = linrel::io::parse_relation_str(&out, "out").unwrap();
    assert_eq!(
        parsed.relation,
        linrel::LinearRelation::scalar_graph(1, &(-linrel::GaussianRational::i()))
    );
}

#[test]
fn product_subcommand() {
    // G1* ∘ G1* = C²×C²
    let (code, out) = cli(&["adjoint", &fixture("g1.json")]);
    assert_eq!(code, 0);
    let tmp = std::env::temp_dir().join("linrel_test_g1_star.json");
    std::fs::write(&tmp, &out).unwrap();
    let star = tmp.display().to_string();
    let (code, out) = cli(&["product", &star, &star]);
    assert_eq!(code, 0);
    let parsed = linrel::io::parse_relation_str(&out, "out").unwrap();
    assert_eq!(parsed.relation, linrel::LinearRelation::everything(2));
}

#[test]
fn decompose_subcommand() {
    let (code, out) = cli(&["decompose", &fixture("sa2.json")]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["op_part"]["pairs"].as_array().unwrap().len(), 1);
    assert_eq!(v["multi_part"]["pairs"].as_array().unwrap().len(), 1);
}

#[test]
fn check_subcommand() {
    let (code, out) = cli(&["check", &fixture("g1.json")]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["dims"]["graph"], 1);
    assert_eq!(v["dims"]["adjoint"], 3);
    assert_eq!(v["hermitian"], true);
    assert_eq!(v["selfadjoint"], false);
    assert_eq!(v["deficiency"][0], 1);
    assert_eq!(v["von_neumann"], true);
    // non-Hermitian: deficiency and the von Neumann check are null
    let (code, out) = cli(&["check", &fixture("mul_i.json")]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["hermitian"], false);
    assert!(v["deficiency"].is_null());
    assert!(v["von_neumann"].is_null());
}

#[test]
fn analyze_g1_pair_golden_output() {
    let g1 = fixture("g1.json");
    let (code, out) = cli(&["analyze", &g1, &g1]);
    assert_eq!(code, 0);
    let expected = r#"{
  "hypotheses": {
    "h1": false,
    "h2": false,
    "k1": true,
    "k2": true
  },
  "dims": {
    "dimA": 1,
    "dimB": 1,
    "dimAstar": 3,
    "dimBstar": 3,
    "n_ab": 1,
    "n_ba": 1,
    "k_ba": 2,
    "k_ab": 2,
    "s_nplus": 2,
    "s_nminus": 2
  },
  "checks": {
    "e1": "not-applicable",
    "e2": "not-applicable",
    "e6": true,
    "e5": "not-applicable",
    "e11": true,
    "e12": "not-applicable",
    "e13": true,
    "selfadjoint_criterion": true,
    "degeneracy": "not-applicable"
  }
}
"#;
    assert_eq!(out, expected);
}

#[test]
fn analyze_is_deterministic_across_runs() {
    let g1 = fixture("g1.json");
    let (c1, out1) = cli(&["analyze", &g1, &g1]);
    let (c2, out2) = cli(&["analyze", &g1, &g1]);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(out1, out2);
}

#[test]
fn analyze_with_override_evaluates_gated_checks() {
    let g1 = fixture("g1.json");
    let (code, out) = cli(&["analyze", &g1, &g1, "--override-hypotheses"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["checks"]["e1"], false);
    assert_eq!(v["checks"]["e12"], false);
    assert_eq!(v["checks"]["e6"], true);
}

#[test]
fn analyze_rejects_non_dual_pair() {
    let mi = fixture("mul_i.json");
    let (code, _) = cli(&["analyze", &mi, &mi]);
    assert_eq!(code, 2);
}

#[test]
fn extend_with_explicit_extra() {
    let g1 = fixture("g1.json");
    let swap_extra = std::env::temp_dir().join("linrel_test_swap_extra.json");
    std::fs::write(
        &swap_extra,
        r#"{"space_dim":2,"pairs":[{"x":[["0","0"],["1","0"]],"y":[["1","0"],["0","0"]]}]}"#,
    )
    .unwrap();
    let (code, out) = cli(&["extend", &g1, &g1, "--extra", &swap_extra.display().to_string()]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["profile"], serde_json::json!([1, 1, 0, 0]));
    assert_eq!(v["quasi"], true);
    assert!(v["e32"].is_null());
}

#[test]
fn extend_rejects_generator_outside_b_star() {
    let g1 = fixture("g1.json");
    let bad = std::env::temp_dir().join("linrel_test_bad_extra.json");
    std::fs::write(
        &bad,
        r#"{"space_dim":2,"pairs":[{"x":[["1","0"],["0","0"]],"y":[["1","0"],["0","0"]]}]}"#,
    )
    .unwrap();
    let (code, _) = cli(&["extend", &g1, &g1, "--extra", &bad.display().to_string()]);
    assert_eq!(code, 2);
}

#[test]
fn extend_sampling_mode() {
    let g1 = fixture("g1.json");
    let (code, out) = cli(&["extend", &g1, &g1, "--k", "1", "--count", "3", "--seed", "5"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 3);
    // determinism
    let (_, out2) = cli(&["extend", &g1, &g1, "--k", "1", "--count", "3", "--seed", "5"]);
    assert_eq!(out, out2);
}

#[test]
fn verify_exit_codes_and_unknown_names() {
    let (code, out) = cli(&["verify", "--suite", "sa-criterion", "--seed", "1", "--trials", "20", "--dim-max", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("\"falsifications\": 0"));
    let (code, _) = cli(&["verify", "--suite", "nonexistent"]);
    assert_eq!(code, 2);
    let (code, _) = cli(&["verify", "--strategy", "bogus"]);
    assert_eq!(code, 2);
    let (code, _) = cli(&["verify", "--dim-min", "4", "--dim-max", "2"]);
    assert_eq!(code, 2);
}

#[test]
fn verify_writes_output_file() {
    let out_path = std::env::temp_dir().join("linrel_test_report.json");
    let (code, stdout) = cli(&[
        "verify",
        "--suite",
        "arens",
        "--seed",
        "2",
        "--trials",
        "5",
        "--dim-max",
        "2",
        "--output",
        &out_path.display().to_string(),
    ]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(report["config"]["seed"], 2);
    assert_eq!(report["suites"][0]["suite"], "arens");
}

#[test]
fn malformed_files_exit_two_with_diagnostics() {
    let bad = std::env::temp_dir().join("linrel_test_malformed.json");
    std::fs::write(&bad, r#"{"space_dim":1,"pairs":[{"x":[["1/0","0"]],"y":[["0","0"]]}]}"#)
        .unwrap();
    let (code, _) = cli(&["adjoint", &bad.display().to_string()]);
    assert_eq!(code, 2);
    let (code, _) = cli(&["adjoint", "/nonexistent/path.json"]);
    assert_eq!(code, 2);
    // unknown flag is a usage error
    let (code, _) = cli(&["adjoint", "--bogus"]);
    assert_eq!(code, 2);
}

#[test]
fn help_exits_zero() {
    let (code, out) = cli(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("adjoint"));
    assert!(out.contains("verify"));
}
