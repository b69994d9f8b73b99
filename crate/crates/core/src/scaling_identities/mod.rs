//! Exact checks of the identities relating `r`-derivatives and
//! `lambda`-derivatives of the scaled family `u^lambda(X) = lambda^k u(lambda X)`,
//! on the monomials `u = r^j`.
//!
//! On `u = r^j` every term `lambda^a r^b d_r^q d_lambda^i u^lambda` equals
//! `(k+j)_i (j)_q lambda^(k+j-i+a) r^(j-q+b)` with falling factorials, so an
//! identity holds for all `lambda > 0` (and all `r > 0`, unless it is stated on
//! the unit sphere only) iff the coefficients cancel within every group of
//! equal power offsets. By linearity, passing for `j <= J` certifies the
//! identity on all polynomials in `r` of degree `<= J`.

mod catalog;

pub use catalog::{radial_identities, scaling_catalog};

use std::collections::BTreeMap;

use serde::Serialize;

use crate::coefficients::{build_delta_set, build_greek_set};
use crate::exact_algebra::{poly, MultiPoly, Rational};
use crate::report::{Check, VerificationReport};

/// `u(X) = r^j` with `r = |X|`. Radial, so every angular operator vanishes on
/// it and only the radial parts of the operators act.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RadialMonomial {
    pub j: u32,
}

impl RadialMonomial {
    /// `Δ_b r^j = j (j + n + b - 1) r^(j-2)`, given `n + b`.
    pub fn weighted_laplacian_coeff(&self, n_plus_b: &Rational) -> Rational {
        let j = Rational::from(self.j as i64);
        &j * &(&(&j + n_plus_b) - &Rational::one())
    }
}

/// `u^lambda(X) = lambda^k u(lambda X) = lambda^(k+j) r^j`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScaledFamily {
    pub base: RadialMonomial,
    pub k: Rational,
}

/// Value of `d^i u^lambda / d lambda^i` at `(lambda, r)`:
/// `coefficient * lambda^lambda_power * r^r_power`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LambdaDerivative {
    pub coefficient: Rational,
    pub lambda_power: Rational,
    pub r_power: u32,
    /// The evaluated number, present when `lambda_power` is an integer or
    /// `lambda = 1`.
    pub value: Option<Rational>,
}

/// `x (x-1) ... (x-n+1)`.
pub fn falling_factorial(x: &Rational, n: u32) -> Rational {
    (0..n)
        .map(|i| x - &Rational::from(i as i64))
        .product()
}

pub fn lambda_derivative(f: &ScaledFamily, i: u32, lam: &Rational, r: &Rational) -> LambdaDerivative {
    let top = &f.k + &Rational::from(f.base.j as i64);
    let coefficient = falling_factorial(&top, i);
    let lambda_power = &top - &Rational::from(i as i64);
    let r_part = r.pow(f.base.j as i32);
    let value = if lam.is_one() {
        Some(&coefficient * &r_part)
    } else {
        lambda_power
            .to_i64()
            .map(|e| &(&coefficient * &lam.pow(e as i32)) * &r_part)
    };
    LambdaDerivative {
        coefficient,
        lambda_power,
        r_power: f.base.j,
        value,
    }
}

/// `coeff * lambda^lam * r^r * d_r^{d_r} d_lambda^{d_lambda} u^lambda`, with
/// `coeff` a polynomial in `k` and `m`.
#[derive(Clone, Debug, PartialEq)]
pub struct Term {
    pub coeff: MultiPoly,
    pub lam: i32,
    pub r: i32,
    pub d_lambda: u32,
    pub d_r: u32,
}

/// `sum(terms) = 0`, either everywhere or only on `r = 1`.
#[derive(Clone, Debug)]
pub struct ScalingIdentity {
    pub id: &'static str,
    pub anchor: &'static str,
    pub on_sphere: bool,
    pub terms: Vec<Term>,
}

impl ScalingIdentity {
    /// Groups of power offsets whose coefficients fail to cancel at
    /// `(j, k, m)`; empty iff the identity holds there.
    pub fn residuals(&self, j: u32, k: &Rational, m: &Rational) -> BTreeMap<(i64, i64), Rational> {
        let jq = Rational::from(j as i64);
        let top = k + &jq;
        let assignment = [("k", k.clone()), ("m", m.clone())];
        let mut groups: BTreeMap<(i64, i64), Rational> = BTreeMap::new();
        for t in &self.terms {
            let c = t
                .coeff
                .eval_at(&assignment)
                .expect("identity coefficients only use k and m");
            let value = &(&c * &falling_factorial(&top, t.d_lambda)) * &falling_factorial(&jq, t.d_r);
            let lam_offset = t.lam as i64 - t.d_lambda as i64;
            let r_offset = if self.on_sphere {
                0
            } else {
                t.r as i64 - t.d_r as i64
            };
            *groups.entry((lam_offset, r_offset)).or_default() += &value;
        }
        groups.retain(|_, v| !v.is_zero());
        groups
    }

    pub fn holds_at(&self, j: u32, k: &Rational, m: &Rational) -> bool {
        self.residuals(j, k, m).is_empty()
    }

    /// Checks every `j <= j_max` against every `(k, m)` sample.
    pub fn check(&self, j_max: u32, k_samples: &[Rational], m_samples: &[Rational]) -> Check {
        for j in 0..=j_max {
            for k in k_samples {
                for m in m_samples {
                    let res = self.residuals(j, k, m);
                    if !res.is_empty() {
                        return Check::new(
                            self.id,
                            self.anchor,
                            false,
                            format!("j = {j}, k = {k}, m = {m}: uncancelled {res:?}"),
                        );
                    }
                }
            }
        }
        Check::new(self.id, self.anchor, true, "")
    }
}

/// Rational `k` samples used by the default suite.
pub fn default_k_samples() -> Vec<Rational> {
    ["0", "1/2", "1", "3/2", "5/7"]
        .iter()
        .map(|s| s.parse().expect("literal"))
        .collect()
}

/// Rational `m = n - 2s` samples for the radial identities.
pub fn default_m_samples() -> Vec<Rational> {
    ["1", "8", "10", "25/3", "29/2"]
        .iter()
        .map(|s| s.parse().expect("literal"))
        .collect()
}

/// Checks every scaling identity for `j <= j_max` and each `k` sample.
pub fn verify_scaling(j_max: u32, k_samples: &[Rational]) -> VerificationReport {
    let mut report = VerificationReport::new();
    let m_dummy = [Rational::zero()];
    for identity in scaling_catalog() {
        report.push(identity.check(j_max, k_samples, &m_dummy));
    }
    report
}

/// Checks the radial operator identities, with the `delta`, `alpha`, `beta`
/// coefficients taken from [`crate::coefficients`].
pub fn verify_radial(j_max: u32, k_samples: &[Rational], m_samples: &[Rational]) -> VerificationReport {
    let mut report = VerificationReport::new();
    for identity in radial_identities(&build_delta_set(), &build_greek_set()) {
        report.push(identity.check(j_max, k_samples, m_samples));
    }

    let d = build_delta_set();
    let explicit = catalog::explicit_radial_coefficients();
    let ok = [&d.delta1, &d.delta2, &d.delta3, &d.delta4]
        .iter()
        .zip(&explicit)
        .all(|(a, b)| *a == b);
    report.push(Check::new(
        "radial.delta-transcription",
        "the lambda-derivative coefficients of I(u) written out in full equal delta_1..delta_4",
        ok,
        "",
    ));

    // I(r^j) = j (j + N - 1)(j - 2)(j + N - 3), N = n + b = m + 5.
    let closed = poly("j*(j + m + 4)*(j - 2)*(j + m + 2)");
    let direct = poly(
        "j*(j-1)*(j-2)*(j-3) + 2*(m+5)*j*(j-1)*(j-2) + (m+5)*(m+3)*j*(j-1) - (m+5)*(m+3)*j",
    );
    report.push(Check::new(
        "radial.I-on-monomials",
        "I(r^j) = j(j+n+b-1)(j-2)(j+n+b-3) on the unit sphere",
        closed == direct,
        "",
    ));
    report
}

fn find(id: &str) -> ScalingIdentity {
    radial_identities(&build_delta_set(), &build_greek_set())
        .into_iter()
        .find(|i| i.id == id)
        .expect("known identity")
}

#[allow(non_snake_case)]
/// The fourth-order radial operator equals its `delta`-combination of
/// `lambda`-derivatives on `u = r^j` at `(k, m)`.
pub fn verify_radial_I(j: u32, k: &Rational, m: &Rational) -> bool {
    find("radial.I-delta-form").holds_at(j, k, m)
}

/// `d_rr u + (n+b-2) d_r u = l^2 u'' + alpha l u' + beta u` and its
/// `lambda`-derivative, on `u = r^j` at `(k, m)`.
pub fn verify_urr_form(j: u32, k: &Rational, m: &Rational) -> bool {
    find("radial.urr").holds_at(j, k, m) && find("radial.urr-lambda").holds_at(j, k, m)
}
