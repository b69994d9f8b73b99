use lestab::coefficients::{build_delta_set, build_greek_set};
use lestab::exact_algebra::{poly, q, MultiPoly, Rational};
use lestab::scaling_identities::{
    default_k_samples, lambda_derivative, radial_identities, scaling_catalog, verify_radial, verify_radial_I,
    verify_scaling, verify_urr_form, RadialMonomial, ScaledFamily, ScalingIdentity,
};
use rand::Rng;

mod common;

/// Applies an identity to `u^lambda = lambda^k P(lambda r)` for integer `k`
/// by plain polynomial differentiation in `(lam, r)`.
fn residual_on_polynomial(id: &ScalingIdentity, u: &MultiPoly, k: i64, m: &Rational) -> MultiPoly {
    let scaled = &poly(&format!("lam^{k}")) * &u.substitute("r", &poly("lam*r"));
    let mut total = MultiPoly::zero();
    for t in &id.terms {
        let mut d = scaled.clone();
        for _ in 0..t.d_lambda {
            d = d.partial_derivative("lam");
        }
        for _ in 0..t.d_r {
            d = d.partial_derivative("r");
        }
        let c = t
            .coeff
            .substitute("k", &MultiPoly::constant(k))
            .substitute("m", &MultiPoly::constant(m.clone()));
        let weight = poly(&format!("lam^{}*r^{}", t.lam, t.r));
        total = &total + &(&(&c * &weight) * &d);
    }
    if id.on_sphere {
        total.substitute("r", &MultiPoly::one())
    } else {
        total
    }
}

fn random_degree6(seed: u64) -> MultiPoly {
    let mut rng = common::rng(seed);
    (0..=6)
        .map(|j| {
            let c = q(rng.random_range(1..=50) * if rng.random_bool(0.5) { 1 } else { -1 }, rng.random_range(1..=9));
            &MultiPoly::constant(c) * &poly(&format!("r^{j}"))
        })
        .sum()
}

#[test]
fn identities_hold_on_a_random_degree_six_polynomial() {
    let u = random_degree6(2024);
    assert_eq!(u.degree_in("r"), 6);
    let m = q(21, 2);
    let all: Vec<_> = scaling_catalog()
        .into_iter()
        .chain(radial_identities(&build_delta_set(), &build_greek_set()))
        .collect();
    for id in &all {
        for k in 0..=3 {
            let res = residual_on_polynomial(id, &u, k, &m);
            assert!(res.is_zero(), "{} at k = {k}: {res}", id.id);
        }
    }
}

#[test]
fn a_wrong_identity_is_caught_by_the_polynomial_oracle() {
    let mut id = scaling_catalog().into_iter().find(|i| i.id == "scaling.sphere-U-rr").unwrap();
    id.terms[2].coeff = poly("(1 + k)*k + 1");
    assert!(!residual_on_polynomial(&id, &random_degree6(1), 1, &q(0, 1)).is_zero());
}

#[test]
fn scaling_report_is_all_pass() {
    let report = verify_scaling(8, &default_k_samples());
    assert!(report.all_passed());
    for id in ["scaling.euler-0", "scaling.sphere-U-rr", "scaling.sphere-U-rrr", "scaling.sphere-U-rrrr"] {
        assert!(report.get(id).is_some(), "{id} missing");
    }
}

#[test]
fn radial_report_is_all_pass() {
    let k = default_k_samples();
    let m: Vec<Rational> = ["1", "10", "33/4"].iter().map(|s| s.parse().unwrap()).collect();
    let report = verify_radial(8, &k, &m);
    assert!(report.all_passed(), "{:?}", report.failures().collect::<Vec<_>>());
}

#[test]
fn spec_examples() {
    assert!(verify_radial_I(4, &q(1, 1), &q(10, 1)));
    assert!(verify_radial_I(0, &q(5, 7), &q(3, 1)));
    assert!(verify_radial_I(1, &q(0, 1), &q(3, 1)));
    assert!(verify_urr_form(2, &q(1, 1), &q(10, 1)));
    assert!(verify_urr_form(2, &q(0, 1), &q(10, 1)));
    assert!(verify_urr_form(3, &q(2, 1), &q(8, 1)));

    let one = Rational::one();
    let fam = |j, k| ScaledFamily { base: RadialMonomial { j }, k };
    assert_eq!(lambda_derivative(&fam(2, q(1, 1)), 0, &one, &one).value, Some(one.clone()));
    assert_eq!(lambda_derivative(&fam(0, q(3, 1)), 1, &one, &one).value, Some(q(3, 1)));
}

#[test]
fn lambda_derivatives_are_falling_factorials() {
    for j in 0..6 {
        for k in default_k_samples() {
            let top = &k + &Rational::from(j as i64);
            let d = lambda_derivative(&ScaledFamily { base: RadialMonomial { j }, k: k.clone() }, 3, &q(1, 1), &q(2, 1));
            let expect = &(&top * &(&top - &q(1, 1))) * &(&top - &q(2, 1));
            assert_eq!(d.coefficient, expect);
            assert_eq!(d.value, Some(&expect * &q(2, 1).pow(j as i32)));
        }
    }
}

#[test]
fn weighted_laplacian_of_monomials() {
    // d_rr r^j + (N/r) d_r r^j = j (j + N - 1) r^(j-2)
    for j in 0..8u32 {
        let nb = q(27, 2);
        let direct = &Rational::from((j * j.saturating_sub(1)) as i64) + &(&nb * &Rational::from(j as i64));
        assert_eq!(RadialMonomial { j }.weighted_laplacian_coeff(&nb), direct);
    }
}
