use lestab::criterion::{gamma_condition, gamma_condition_limit, ParamPoint};
use lestab::exponents::{
    a_ns, classify_regime, closed_form_exponent, exponent_profile, exponent_table, jl_classical, n0_threshold,
    pc_exponent, pc_from_a, pm_exponent, pm_threshold_m, sobolev_exponent, Regime, CRITICAL_TOL, DEFAULT_TOL,
};
use lestab::{Error, ExecMode};

#[test]
fn sobolev_examples() {
    assert_eq!(sobolev_exponent(5.0, 2.5), f64::INFINITY);
    assert_eq!(sobolev_exponent(8.0, 2.0), 3.0);
}

#[test]
fn pm_examples() {
    assert_eq!(pm_exponent(19.0, 2.5).unwrap(), f64::INFINITY);
    let root = 8770f64.sqrt();
    let expect = (150.0 - root) / (100.0 - root);
    assert!((pm_exponent(25.0, 2.5).unwrap() - expect).abs() < 1e-12);
    assert!((expect - 8.87).abs() < 0.01);
    // blows up just above the threshold
    let just_above = pm_exponent(5.0 + pm_threshold_m() + 1e-6, 2.5).unwrap();
    assert!(just_above > 1e5);
    assert!(pm_exponent(5.0, 2.5).is_err());
}

#[test]
fn pc_matches_closed_forms() {
    for (s, range) in [(1u32, 11..=20), (2, 13..=20), (3, 15..=20)] {
        for n in range {
            let n = n as f64;
            let pc = pc_exponent(n, s as f64, DEFAULT_TOL).unwrap();
            let cf = closed_form_exponent(n, s).unwrap();
            assert!((pc - cf).abs() < 1e-6, "s = {s}, n = {n}: {pc} vs {cf}");
        }
    }
    assert!((jl_classical(11.0) - (37.0 + 8.0 * 10f64.sqrt()) / 9.0).abs() < 1e-12);
}

#[test]
fn criterion_vanishes_on_classical_exponent() {
    let f = gamma_condition(&ParamPoint::new(11.0, 1.0, jl_classical(11.0)).unwrap()).unwrap().f;
    assert!(f.abs() < 1e-6, "F = {f}");
}

#[test]
fn closed_form_infinite_branches() {
    assert_eq!(closed_form_exponent(10.0, 1).unwrap(), f64::INFINITY);
    assert_eq!(closed_form_exponent(12.0, 2).unwrap(), f64::INFINITY);
    assert_eq!(closed_form_exponent(14.0, 3).unwrap(), f64::INFINITY);
    assert!(closed_form_exponent(15.0, 3).unwrap().is_finite());
}

#[test]
fn n0_threshold_values() {
    assert!((n0_threshold(1.0, DEFAULT_TOL).unwrap() - 10.0).abs() < 1e-6);
    for s in [2.01, 2.5, 2.99] {
        let n0 = n0_threshold(s, DEFAULT_TOL).unwrap();
        assert!(n0 > 2.0 * s && n0 <= 2.0 * s + 8.998, "s = {s}: {n0}");
        assert!(gamma_condition_limit(n0 - 0.01, s).unwrap() > 0.0);
        assert!(gamma_condition_limit(n0 + 0.01, s).unwrap() < 0.0);
    }
}

/// The `s = 2` threshold is the root of the denominator of the biharmonic
/// closed form, `n^3 - 4n^2 - 128n + 256`, not 12.
#[test]
fn n0_for_bilaplacian_is_the_cubic_root() {
    let n0 = n0_threshold(2.0, DEFAULT_TOL).unwrap();
    let cubic = |n: f64| n * n * n - 4.0 * n * n - 128.0 * n + 256.0;
    assert!(cubic(n0).abs() < 1e-6, "{n0}");
    assert!((n0 - 12.565_344_462_6).abs() < 1e-8);
}

#[test]
fn pc_infinite_exactly_below_n0() {
    for s in [2.1, 2.5, 2.9] {
        let n0 = n0_threshold(s, DEFAULT_TOL).unwrap();
        for dn in [-1.0, -0.3, -0.05] {
            assert_eq!(pc_exponent(n0 + dn, s, DEFAULT_TOL).unwrap(), f64::INFINITY);
        }
        for dn in [0.05, 0.3, 1.0, 10.0] {
            assert!(pc_exponent(n0 + dn, s, DEFAULT_TOL).unwrap().is_finite());
        }
    }
}

#[test]
fn pc_decreases_in_n() {
    let s = 2.5;
    let n0 = n0_threshold(s, DEFAULT_TOL).unwrap();
    let pcs: Vec<f64> = (1..30)
        .map(|i| pc_exponent(n0 + 0.5 * i as f64, s, DEFAULT_TOL).unwrap())
        .collect();
    assert!(pcs.windows(2).all(|w| w[1] < w[0]), "{pcs:?}");
}

#[test]
fn a_ns_round_trip_and_bounds() {
    let (n, s) = (30.0, 2.5);
    let a = a_ns(n, s, DEFAULT_TOL).unwrap();
    let pc = pc_exponent(n, s, DEFAULT_TOL).unwrap();
    assert!((pc_from_a(n, s, a) - pc).abs() < 1e-8);
    assert!(1.0 / n.sqrt() < a && a < 1.0);
    assert!(a < (n - 2.0 * s) / (2.0 * n.sqrt()) + 1.0 / n.sqrt());
    assert!(matches!(a_ns(12.0, 2.5, DEFAULT_TOL), Err(Error::Undefined(_))));
}

#[test]
fn regimes() {
    let v = |p| classify_regime(&ParamPoint::new(20.0, 2.5, p).unwrap(), CRITICAL_TOL).unwrap();
    assert_eq!(v(1.5).regime, Regime::Subcritical);
    assert!(v(1.5).criterion.is_none());
    assert_eq!(v(5.0 / 3.0).regime, Regime::Critical);
    assert_eq!(v(2.0).regime, Regime::SupercriticalLiouville);
    assert!(v(2.0).criterion.unwrap().f > 0.0);
    let pc = pc_exponent(40.0, 2.5, DEFAULT_TOL).unwrap();
    assert!(pc < 12.0);
    let far = classify_regime(&ParamPoint::new(40.0, 2.5, 12.0).unwrap(), CRITICAL_TOL).unwrap();
    assert_eq!(far.regime, Regime::SupercriticalStableSingular);
    assert!(far.statement.contains("optimal"));
}

#[test]
fn table_is_mode_independent_and_ordered() {
    let ns: Vec<f64> = (0..24).map(|i| 14.0 + 0.75 * i as f64).collect();
    let seq = exponent_table(2.5, &ns, DEFAULT_TOL, ExecMode::Sequential).unwrap();
    let par = exponent_table(2.5, &ns, DEFAULT_TOL, ExecMode::Parallel).unwrap();
    assert_eq!(seq.len(), ns.len());
    for ((a, b), n) in seq.iter().zip(&par).zip(&ns) {
        let (a, b) = (a.as_ref().unwrap(), b.as_ref().unwrap());
        assert_eq!(a, b);
        assert_eq!(a.n, *n);
    }
}

#[test]
fn profile_json_marks_infinity() {
    let n0 = n0_threshold(2.5, DEFAULT_TOL).unwrap();
    let prof = exponent_profile(13.0, 2.5, n0, DEFAULT_TOL).unwrap();
    let json = serde_json::to_value(&prof).unwrap();
    assert_eq!(json["p_c"], serde_json::json!({"value": null, "infinite": true}));
    assert_eq!(json["p_m"]["infinite"], true);
    assert!(json["p_s"].is_f64());
    assert!(json["a_ns"].is_null());
}
