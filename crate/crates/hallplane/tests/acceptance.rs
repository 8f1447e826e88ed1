//! Acceptance gate: one test per criterion, each printing a pass/fail line
//! (visible with `--nocapture`) and asserting both the verified counts and
//! the wall-clock budget. Run with `cargo test --test acceptance`.

use std::time::{Duration, Instant};

use hallplane::census::{run_census, CensusConfig, CensusReport, CheckResult};
use hallplane::{Field, FieldSpec};

fn specs(fields: &[(u32, u32)]) -> Vec<FieldSpec> {
    fields
        .iter()
        .map(|&(p, k)| Field::new(p, k).unwrap().spec())
        .collect()
}

/// Run the named checks serially (the budget figures assume one core).
fn run_checks(checks: &[&str], fields: &[(u32, u32)]) -> CensusReport {
    let mut cfg = CensusConfig::new(specs(fields));
    cfg.checks = checks.iter().map(|s| s.to_string()).collect();
    cfg.jobs = 1;
    run_census(&cfg).expect("census run failed")
}

/// Every requested (check, q) pair must have run (no hypothesis skips) and
/// passed.
fn assert_clean(rep: &CensusReport) {
    assert_eq!(
        rep.failed,
        0,
        "failing rows: {:#?}",
        rep.failures().collect::<Vec<_>>()
    );
    assert_eq!(
        rep.skipped,
        0,
        "unexpected skips: {:#?}",
        rep.results.iter().filter(|r| r.skipped).collect::<Vec<_>>()
    );
    assert!(rep.passed > 0, "no checks ran");
}

fn row<'r>(rep: &'r CensusReport, check: &str, q: u32, conic_part: &str) -> &'r CheckResult {
    rep.results
        .iter()
        .find(|r| r.check == check && r.q == q && r.conic.contains(conic_part))
        .unwrap_or_else(|| panic!("no row for {check}@{q} matching {conic_part:?}"))
}

fn conclude(n: u32, desc: &str, started: Instant, limit: Duration) {
    let elapsed = started.elapsed();
    let ok = elapsed <= limit;
    println!(
        "criterion {n:02}: {} — {desc} [{elapsed:.2?} of {limit:?}]",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {n} exceeded its {limit:?} budget: {elapsed:?}");
}

#[test]
fn criterion_01_plane_axioms_and_line_counts() {
    let t = Instant::now();
    let rep = run_checks(&["hall_axioms"], &[(3, 1), (2, 2)]);
    assert_clean(&rep);
    for q in [3, 4] {
        row(&rep, "hall_axioms", q, "affine axioms");
        let lines = row(&rep, "hall_axioms", q, "new-line count");
        assert_eq!(lines.expected, ((q as u64 + 1) * (q as u64).pow(2)).to_string());
    }
    conclude(
        1,
        "Hall plane axioms hold at q=3,4 with (q+1)q^2 new lines",
        t,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_02_inscribed_triangle_counts() {
    let t = Instant::now();
    let even = run_checks(&["sk_triangles_even"], &[(2, 2), (2, 3)]);
    assert_clean(&even);
    let odd = run_checks(&["sk_triangles_odd"], &[(5, 1), (7, 1)]);
    assert_clean(&odd);
    conclude(
        2,
        "non-tangent triples carry 1 triangle at q=4,8; odd-q tangent/parity rule at q=5,7",
        t,
        Duration::from_secs(30),
    );
}

#[test]
fn criterion_03_odd_parabola_secant_spectrum() {
    let t = Instant::now();
    let rep = run_checks(&["a3_a4_parabola_odd"], &[(3, 1), (5, 1), (7, 1)]);
    assert_clean(&rep);
    for (q, a3, a4) in [(3u32, 4u64, 0u64), (5, 12, 2), (7, 24, 8)] {
        let r = row(&rep, "a3_a4_parabola_odd", q, "");
        assert!(r.expected.contains(&format!("a3={a3} a4={a4}")), "{r:?}");
    }
    conclude(
        3,
        "a3=(q^2-1)/2, a4=(q-3)(q^2-1)/24, a3+4a4=C(q+1,3) at q=3,5,7",
        t,
        Duration::from_secs(10),
    );
}

#[test]
fn criterion_04_three_point_parabola_pencil() {
    let t = Instant::now();
    let rep = run_checks(&["three_secant_pencil"], &[(5, 1), (7, 1)]);
    assert_clean(&rep);
    for (q, want) in [(5u32, 12u64), (7, 18)] {
        let r = row(&rep, "three_secant_pencil", q, "triple (0,0)");
        assert_eq!(r.expected, want.to_string());
        row(&rep, "three_secant_pencil", q, "20 random triples");
    }
    conclude(
        4,
        "exactly 3(q-1) parabolas per new-line triple at q=5,7, invariant over 20 random triples",
        t,
        Duration::from_secs(10),
    );
}

#[test]
fn criterion_05_even_parabola_support_and_spectrum() {
    let t = Instant::now();
    let support = run_checks(&["parabola_support_even"], &[(2, 2), (2, 3)]);
    assert_clean(&support);
    let spectrum = run_checks(&["parabola_conjugate_spectrum"], &[(2, 3)]);
    assert_clean(&spectrum);
    let full = row(&spectrum, "parabola_conjugate_spectrum", 8, "Q:");
    assert_eq!(full.expected, "a0=144 a1=384 a2=0 a4=48");
    let per_point = row(&spectrum, "parabola_conjugate_spectrum", 8, "per-point");
    assert_eq!(per_point.expected, "{1:6, 4:3}");
    conclude(
        5,
        "even-q support {0,1,2,4} at q=4,8; q=8 conjugate spectrum 144/384/48 with 3+6 per point",
        t,
        Duration::from_secs(20),
    );
}

#[test]
fn criterion_06_cubic_rational_root_counts() {
    let t = Instant::now();
    let rep = run_checks(&["nbeta_roots"], &[(2, 2), (2, 3)]);
    assert_clean(&rep);
    let q4 = row(&rep, "nbeta_roots", 4, "square");
    assert!(q4.expected.contains("{1:12, 3:3}"), "{q4:?}");
    let q8 = row(&rep, "nbeta_roots", 8, "non-square");
    assert!(q8.expected.contains("{0:42, 3:21}"), "{q8:?}");
    conclude(
        6,
        "exhaustive N_beta root counts match the case table at q=4,8",
        t,
        Duration::from_secs(5),
    );
}

#[test]
fn criterion_07_hyperbola_arcs_and_conjugate_dichotomy() {
    let t = Instant::now();
    let okp = run_checks(&["okp_hyperbola_xy1", "okp_complete_arc"], &[(5, 1)]);
    assert_clean(&okp);
    let complete = row(&okp, "okp_complete_arc", 5, "");
    assert!(complete.actual.contains("complete arc of size 24"), "{complete:?}");
    let odd = run_checks(&["conjugate_hyperbola_odd"], &[(5, 1)]);
    assert_clean(&odd);
    row(&odd, "conjugate_hyperbola_odd", 5, "all of D external");
    row(&odd, "conjugate_hyperbola_odd", 5, "all of D internal");
    let even = run_checks(&["conjugate_hyperbola_even"], &[(2, 2)]);
    assert_clean(&even);
    conclude(
        7,
        "XY=1 loses arc-ness, XY=-d is a complete 24-arc at q=5; conjugate-pair line counts at q=4,5",
        t,
        Duration::from_secs(30),
    );
}

#[test]
fn criterion_08_hyperbola_one_point_in_derivation_set() {
    let t = Instant::now();
    let rep = run_checks(&["hyperbola_one_in_d"], &[(7, 1)]);
    assert_clean(&rep);
    let s_row = row(&rep, "hyperbola_one_in_d", 7, "observed s values");
    assert_eq!(s_row.expected, "{3, 4}");
    conclude(
        8,
        "q=7, one infinite point in D: s=(q±1)/2, max 3 per line, triple formula",
        t,
        Duration::from_secs(10),
    );
}

#[test]
fn criterion_09_even_normal_form_sweep_and_witness() {
    let t = Instant::now();
    let rep = run_checks(&["a3_even", "tangent_witness_even"], &[(2, 2), (2, 3)]);
    assert_clean(&rep);
    let q4 = row(&rep, "a3_even", 4, "admissible");
    assert!(q4.expected.contains("a3=6"), "{q4:?}");
    let q8 = row(&rep, "a3_even", 8, "admissible");
    assert!(q8.expected.contains("a3=28"), "{q8:?}");
    conclude(
        9,
        "a3=q(q-1)/2 over the admissible sweep at q=4,8; unique tangent witness per 3-secant",
        t,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_10_odd_ellipses_never_stay_ovals() {
    let t = Instant::now();
    let rep = run_checks(&["odd_ellipse_never_oval"], &[(3, 1), (5, 1)]);
    assert_clean(&rep);
    row(&rep, "odd_ellipse_never_oval", 3, "all ellipses (");
    row(&rep, "odd_ellipse_never_oval", 5, "up to translation");
    conclude(
        10,
        "no odd-q ellipse remains an oval: exhaustive at q=3, all translates at q=5",
        t,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_11_quadratic_normalization_exhaustive() {
    let t = Instant::now();
    let rep = run_checks(&["quadratic_normal_form"], &[(2, 2)]);
    assert_clean(&rep);
    let r = row(&rep, "quadratic_normal_form", 4, "all (b,c) pairs");
    assert!(
        r.expected
            .contains("{frobenius-pair:6, normalized:180, repeated-root:16, root-in-subfield:54}"),
        "{r:?}"
    );
    conclude(
        11,
        "all 256 quadratics over GF(16) classify and normalize with w off the subfield",
        t,
        Duration::from_secs(5),
    );
}

#[test]
fn criterion_12_crosschecks_and_baer_dichotomy() {
    let t = Instant::now();
    let triples = run_checks(&["triples_crosscheck"], &[(3, 1), (2, 2), (5, 1)]);
    assert_clean(&triples);
    let baer = run_checks(&["baer_dichotomy"], &[(3, 1), (2, 2)]);
    assert_clean(&baer);
    conclude(
        12,
        "spectrum triples match direct enumeration at q=3,4,5; Baer meetings bounded or subconics at q=3,4",
        t,
        Duration::from_secs(60),
    );
}
