//! Acceptance suite: one test per release criterion, each printing a
//! PASS line (visible with `--nocapture`). All checks are exact — zero
//! tolerance — and every campaign is seeded, so failures are reproducible.

use linrel::dualpair::DualPair;
use linrel::extension::ProperExtension;
use linrel::harness::{
    lemma32_probe, run_campaign, GenConfig, Strategy, Suite, VerificationReport,
};
use linrel::linalg::Vector;
use linrel::relation::LinearRelation;

fn config(seed: u64, trials: usize, strategy: Strategy) -> GenConfig {
    GenConfig {
        seed,
        dim_min: 1,
        dim_max: 6,
        entry_bound: 3,
        strategy,
        trials,
    }
}

fn assert_clean(report: &VerificationReport, what: &str) {
    for suite in &report.suites {
        assert_eq!(
            suite.asserted_failures, 0,
            "{what}: suite {} has asserted failures: {:?}",
            suite.suite, suite.failures
        );
        assert!(
            suite.coverage_failures.is_empty(),
            "{what}: suite {} missed coverage: {:?}",
            suite.suite, suite.coverage_failures
        );
    }
    assert_eq!(report.falsifications, 0, "{what}: falsifications found");
}

fn g1() -> LinearRelation {
    LinearRelation::from_pairs(2, &[(Vector::unit(2, 0), Vector::unit(2, 1))])
}

fn swap_graph() -> LinearRelation {
    LinearRelation::from_pairs(
        2,
        &[
            (Vector::unit(2, 0), Vector::unit(2, 1)),
            (Vector::unit(2, 1), Vector::unit(2, 0)),
        ],
    )
}

fn g1_pair() -> DualPair {
    DualPair::new(g1(), g1()).unwrap()
}

#[test]
fn acceptance_01_adjoint_calculus() {
    // T** = T, dim T + dim T* = 2n, T*(0) = D(T)^⊥, N(T*) = R(T)^⊥,
    // D(T*) = T(0)^⊥ over ≥1000 seeded random relations with dims 1..6.
    let report = run_campaign(
        &config(101, 1000, Strategy::Free),
        &[Suite::AdjointDuality],
        false,
    );
    assert_clean(&report, "adjoint calculus");
    assert_eq!(report.suites[0].instances, 1000);
    println!("ACCEPTANCE 1 (adjoint calculus, 1000 relations): PASS");
}

#[test]
fn acceptance_02_arens_decomposition() {
    let report = run_campaign(&config(102, 1000, Strategy::Free), &[Suite::Arens], false);
    assert_clean(&report, "arens decomposition");
    assert_eq!(report.suites[0].instances, 1000);
    println!("ACCEPTANCE 2 (Arens decomposition, 1000 instances): PASS");
}

#[test]
fn acceptance_03_decompositions_e1_e2() {
    // ≥500 h-filtered dual pairs with exact graph-Gram orthogonality, and
    // trivial kernels whenever A = B*.
    let report = run_campaign(
        &config(103, 510, Strategy::HFiltered),
        &[Suite::E1E2],
        false,
    );
    assert_clean(&report, "e1/e2 decompositions");
    let suite = &report.suites[0];
    assert!(suite.instances >= 500, "h-filter starved: {}", suite.instances);
    let degenerate_pairs = suite
        .instances_detail
        .iter()
        .filter(|r| r.checks.contains_key("kernel-trivial-when-degenerate"))
        .count();
    assert!(degenerate_pairs > 0, "no A = B* pairs seen");

    // The canned G1 pair demonstrates (e1) failing when h1 is dropped:
    // the dimension count is 1 + 2 = 3 ≠ 2 = dim D(A*).
    let pair = g1_pair();
    let hyp = pair.hypotheses();
    assert!(!hyp.h1);
    let d = pair.decompose_e1(&hyp, true).unwrap();
    assert!(!d.holds);
    assert_eq!(d.summands.0.dim() + d.summands.1.dim(), 3);
    assert_eq!(pair.a_star().domain().dim(), 2);
    println!(
        "ACCEPTANCE 3 (Lemma 2.4 suite, {} h-filtered pairs + override probe): PASS",
        suite.instances
    );
}

#[test]
fn acceptance_04_kernel_isomorphism_q() {
    // ≥500 k-filtered pairs: Q exactly bijective and
    // dim N(1+B*A*) = dim N(1+A*B*); coverage must include a kernel of
    // dimension ≥ 1.
    let report = run_campaign(&config(104, 510, Strategy::KFiltered), &[Suite::QIso], false);
    assert_clean(&report, "q isomorphism");
    let suite = &report.suites[0];
    assert!(suite.instances >= 500, "k-filter starved: {}", suite.instances);
    assert!(
        suite.coverage.get("nonzero-kernel").copied().unwrap_or(0) >= 1,
        "no nontrivial kernels seen"
    );
    // The canned G1 pair realizes kernel dimension 2.
    let pair = g1_pair();
    let (k_ba, k_ab) = pair.kernel_spaces();
    assert_eq!((k_ba.dim(), k_ab.dim()), (2, 2));
    println!(
        "ACCEPTANCE 4 (Lemma 2.5 / e6 suite, {} k-filtered pairs): PASS",
        suite.instances
    );
}

#[test]
fn acceptance_05_block_relation_s() {
    // S Hermitian and the S* block formula exact on every generated pair
    // (≥1000); the self-adjointness criterion on every instance; under the
    // k-filter, n±(S) = dim N(1+B*A*) with P exactly bijective.
    let report = run_campaign(
        &config(105, 1000, Strategy::Free),
        &[Suite::SBlock, Suite::SaCriterion],
        false,
    );
    assert_clean(&report, "s block + criterion");
    assert_eq!(report.suites[0].instances, 1000);
    let report_k = run_campaign(
        &config(1050, 500, Strategy::KFiltered),
        &[Suite::SDeficiency],
        false,
    );
    assert_clean(&report_k, "s deficiency under k");
    assert!(report_k.suites[0].instances >= 490);
    println!(
        "ACCEPTANCE 5 (Prop 2.9 suite: e11 on 1000 pairs, e13 + P on {} k-filtered): PASS",
        report_k.suites[0].instances
    );
}

#[test]
fn acceptance_06_degeneracy_finding() {
    // ≥10⁴ rejection-sampled full-hypotheses instances: every one satisfies
    // A = B*, hence all surplus quantities vanish and (e12), (e32), (e33),
    // (e37) hold as 0 = 0. The population itself must be nonempty.
    let report = run_campaign(
        &config(106, 10_000, Strategy::FullHypotheses),
        &[Suite::Degeneracy],
        false,
    );
    assert_clean(&report, "degeneracy");
    let suite = &report.suites[0];
    assert!(
        suite.instances >= 10_000,
        "full-hypotheses starved: {}",
        suite.instances
    );
    assert!(
        suite.coverage.get("full-hypotheses-population").copied().unwrap_or(0) >= 10_000
    );
    // The surplus identities and extension formulas in the forced-degenerate
    // regime, exercised directly on part of the population.
    let extra = run_campaign(
        &config(1060, 500, Strategy::FullHypotheses),
        &[Suite::SurplusEq, Suite::SDeficiency, Suite::Thm33, Suite::Thm34],
        false,
    );
    assert_clean(&extra, "degenerate-regime identities");
    for suite in &extra.suites {
        for record in &suite.instances_detail {
            for key in ["n_ab", "n_ba", "s_nplus", "s_nminus", "k_ba"] {
                if let Some(v) = record.dims.get(key) {
                    assert_eq!(*v, 0, "{key} nonzero in the degenerate regime");
                }
            }
        }
    }
    println!("ACCEPTANCE 6 (degeneracy finding, 10000 full-hypotheses instances): PASS");
}

#[test]
fn acceptance_07_extension_bookkeeping() {
    // The unconditional quotient-tower identities over ≥1000 sampled
    // extensions across every strategy.
    let mut extensions_checked = 0usize;
    for (salt, strategy) in Strategy::ALL.iter().enumerate() {
        let trials = match strategy {
            Strategy::DualPair => 80, // rejection-heavy; small dims starve less
            _ => 150,
        };
        let mut cfg = config(107 + salt as u64, trials, *strategy);
        if *strategy == Strategy::DualPair {
            cfg.dim_max = 3;
        }
        let report = run_campaign(&cfg, &[Suite::Thm33, Suite::Thm34], false);
        assert_clean(&report, "extension bookkeeping");
        extensions_checked += report.suites[0]
            .instances_detail
            .iter()
            .flat_map(|r| r.checks.keys())
            .filter(|name| name.starts_with("e36-tower-a/"))
            .count();
    }
    assert!(
        extensions_checked >= 1000,
        "only {extensions_checked} extensions sampled"
    );

    // The G1-pair extension table, exactly.
    let pair = g1_pair();
    let swap_ext = ProperExtension::new(&pair, &[(Vector::unit(2, 1), Vector::unit(2, 0))])
        .unwrap();
    let p = swap_ext.quotient_profile();
    assert_eq!(
        (p.d_ext_over_a, p.d_extstar_over_b, p.d_bstar_over_ext, p.d_astar_over_extstar),
        (1, 1, 0, 0)
    );
    assert!(swap_ext.is_quasi_selfadjoint());
    // e32 recorded false: 1 ≠ 0 + 0 and 1 ≠ 1 + 1.
    assert!(!swap_ext.check_thm33().e32);
    let minimal = ProperExtension::new(&pair, &[]).unwrap();
    let p = minimal.quotient_profile();
    assert_eq!(
        (p.d_ext_over_a, p.d_extstar_over_b, p.d_bstar_over_ext, p.d_astar_over_extstar),
        (0, 1, 1, 0)
    );
    assert!(!minimal.is_quasi_selfadjoint());
    // e32 recorded true despite the failed hypotheses: 1 = 1+0 = 0+1.
    assert!(minimal.check_thm33().e32);
    println!(
        "ACCEPTANCE 7 (quotient towers on {extensions_checked} extensions + G1 table): PASS"
    );
}

#[test]
fn acceptance_08_extension_lemma_probe() {
    // Graph-version von Neumann equalities asserted on every
    // (S Hermitian ⊆ T self-adjoint) instance; the literal domain-quotient
    // reading fails on the canned counterexample and is flagged.
    let report = run_campaign(
        &config(108, 1000, Strategy::Free),
        &[Suite::Lemma32Probe],
        false,
    );
    assert_clean(&report, "extension lemma probe");
    let suite = &report.suites[0];
    assert_eq!(suite.instances, 1000);
    assert!(
        suite.coverage.get("domain-version-counterexample").copied().unwrap_or(0) >= 1,
        "domain-version counterexamples must be flagged in the report"
    );

    let probe = lemma32_probe(&g1(), &swap_graph()).unwrap();
    assert_eq!((probe.n_plus, probe.n_minus), (1, 1));
    assert_eq!(probe.d1, 1);
    assert_eq!(probe.d2, 0);
    assert!(probe.graph_version_holds);
    assert!(!probe.domain_version_holds);
    println!("ACCEPTANCE 8 (extension lemma probe, 1000 instances + counterexample): PASS");
}

#[test]
fn acceptance_09_von_neumann_formula() {
    // S* = S ∔ N̂₊ ∔ N̂₋ exact on every Hermitian instance.
    let report = run_campaign(
        &config(109, 1000, Strategy::Free),
        &[Suite::VnFormula],
        false,
    );
    assert_clean(&report, "von Neumann formula");
    assert_eq!(report.suites[0].instances, 1000);
    println!("ACCEPTANCE 9 (first von Neumann formula, 1000 instances): PASS");
}

#[test]
fn acceptance_10_determinism_and_serialization() {
    // Identical configurations yield byte-identical reports, independent of
    // the thread count; fixture round-trips are byte-identical.
    let cfg = config(110, 60, Strategy::Free);
    let suites = [Suite::SBlock, Suite::QIso, Suite::Lemma32Probe];
    let r1 = serde_json::to_string(&run_campaign(&cfg, &suites, false)).unwrap();
    let r2 = serde_json::to_string(&run_campaign(&cfg, &suites, false)).unwrap();
    assert_eq!(r1, r2, "repeated runs must be byte-identical");
    let single = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap()
        .install(|| serde_json::to_string(&run_campaign(&cfg, &suites, false)).unwrap());
    assert_eq!(r1, single, "thread count must not affect the report");

    let fixtures = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    let mut checked = 0;
    for entry in std::fs::read_dir(fixtures).unwrap() {
        let path = entry.unwrap().path();
        let original = std::fs::read_to_string(&path).unwrap();
        let parsed = linrel::io::parse_relation_file(&path).unwrap();
        assert_eq!(
            linrel::io::serialize_relation(&parsed.relation),
            original,
            "{} round-trip not byte-identical",
            path.display()
        );
        checked += 1;
    }
    assert!(checked >= 6);
    println!("ACCEPTANCE 10 (determinism + byte-exact serialization): PASS");
}
