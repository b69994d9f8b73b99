use serde::Serialize;

use crate::error::{domain, Result};
use crate::exact_algebra::{poly, poly_equal, MultiPoly, Rational};
use crate::report::{Check, VerificationReport};

/// `delta_1..delta_4`, the coefficients of the scaled radial operator, as
/// polynomials in `(k, m)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DeltaSet {
    pub delta1: MultiPoly,
    pub delta2: MultiPoly,
    pub delta3: MultiPoly,
    pub delta4: MultiPoly,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GreekSet {
    pub alpha: MultiPoly,
    pub beta: MultiPoly,
    pub alpha0: MultiPoly,
    pub beta0: MultiPoly,
}

/// Coefficients of the monotonicity formula.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[allow(non_snake_case)]
pub struct CoeffSet {
    pub A1: MultiPoly,
    pub A2: MultiPoly,
    pub B1: MultiPoly,
}

/// Writes an expression in `N = n + b` and `K = 2s/(p-1)` as a polynomial in
/// `(k, m)` using `N = m + 5`.
fn in_km(src: &str) -> MultiPoly {
    poly(src)
        .substitute("N", &poly("m + 5"))
        .substitute("K", &poly("k"))
}

pub fn build_delta_set() -> DeltaSet {
    DeltaSet {
        delta1: in_km("2*N - 4*K"),
        delta2: in_km("N*(N-2) - N*6*K + 6*K*(1+K)"),
        delta3: in_km("-4*K*(1+K)*(2+K) + 2*N*3*K*(1+K) - N*(N-2)*(1+2*K)"),
        delta4: in_km("(3+K)*(2+K)*(1+K)*K - 2*N*(1+K)*(2+K)*K + N*(N-2)*(2+K)*K"),
    }
}

pub fn build_greek_set() -> GreekSet {
    GreekSet {
        alpha: in_km("N - 2 - 2*K"),
        beta: in_km("K*(3 + K - N)"),
        alpha0: in_km("N - 2*K"),
        beta0: in_km("K*(1 + K - N)"),
    }
}

pub fn build_coeff_set(d: &DeltaSet, g: &GreekSet) -> CoeffSet {
    CoeffSet {
        A1: a1_from(d, g),
        A2: a2_from(d, g, 6),
        B1: b1_from(g),
    }
}

fn c(v: i64) -> MultiPoly {
    MultiPoly::constant(v)
}

fn a1_from(d: &DeltaSet, g: &GreekSet) -> MultiPoly {
    &c(10) * &d.delta1 - &c(2) * &d.delta2 - c(56) + g.alpha0.pow(2)
        - &c(2) * &g.alpha0
        - &c(2) * &g.beta0
        - c(4)
}

/// `A2` with a configurable multiplier on `delta_2`; the definition uses 6.
fn a2_from(d: &DeltaSet, g: &GreekSet, delta2_weight: i64) -> MultiPoly {
    &c(-18) * &d.delta1 + &c(delta2_weight) * &d.delta2 - &c(4) * &d.delta3
        + &c(2) * &d.delta4
        + c(72)
        - g.alpha0.pow(2)
        + g.beta0.pow(2)
        + &c(2) * &g.alpha0
        + &c(2) * &g.beta0
}

fn b1_from(g: &GreekSet) -> MultiPoly {
    &c(8) * &g.alpha - &c(4) * &g.beta - &c(2) * &g.beta0 + &c(4) * &poly("m + 5") - c(14)
}

/// Expanded closed forms in `(k, m)`.
pub mod closed_form {
    use crate::exact_algebra::{poly, MultiPoly};

    pub fn a1() -> MultiPoly {
        poly("-10*k^2 + 10*m*k - m^2 + 12*m + 25")
    }

    pub fn a2() -> MultiPoly {
        poly("3*k^4 - 6*m*k^3 + (3*m^2 - 12*m - 30)*k^2 + (12*m^2 + 30*m)*k + 9*m^2 + 36*m + 27")
    }

    pub fn a2_factored() -> MultiPoly {
        poly("3*(k+1)*(k+3)*(k-m-1)*(k-m-3)")
    }

    pub fn b1() -> MultiPoly {
        poly("-6*k^2 + 6*m*k + 12*m + 30")
    }
}

fn equality_check(id: &str, anchor: &str, lhs: &MultiPoly, rhs: &MultiPoly) -> Check {
    let diff = lhs - rhs;
    let detail = if diff.is_zero() {
        String::new()
    } else {
        format!("difference = {diff}")
    };
    Check::new(id, anchor, diff.is_zero(), detail)
}

/// Checks the coefficient set against its expanded and factored forms.
pub fn verify_km_forms(cs: &CoeffSet) -> VerificationReport {
    let mut report = VerificationReport::new();
    report.push(equality_check(
        "coeff.A1-closed-form",
        "A1 = -10k^2 + 10mk - m^2 + 12m + 25",
        &cs.A1,
        &closed_form::a1(),
    ));
    report.push(equality_check(
        "coeff.A2-closed-form",
        "A2 = 3k^4 - 6mk^3 + (3m^2-12m-30)k^2 + (12m^2+30m)k + 9m^2 + 36m + 27",
        &cs.A2,
        &closed_form::a2(),
    ));
    report.push(equality_check(
        "coeff.B1-closed-form",
        "B1 = -6k^2 + 6mk + 12m + 30",
        &cs.B1,
        &closed_form::b1(),
    ));
    report.push(equality_check(
        "coeff.A2-factorization",
        "A2 = 3(k+1)(k+3)(k-m-1)(k-m-3)",
        &cs.A2,
        &closed_form::a2_factored(),
    ));
    // Roots of B1 in k: sum m, product -(2m+5), i.e. B1 = -6(k^2 - mk - (2m+5)).
    report.push(equality_check(
        "coeff.B1-roots",
        "B1 = -6(k^2 - mk - (2m+5)); roots m/2 +- sqrt(m^2+8m+20)/2",
        &cs.B1,
        &(&c(-6) * &poly("k^2 - m*k - (2*m + 5)")),
    ));
    let disc = poly("m^2 - 4*(-(2*m+5))");
    report.push(equality_check(
        "coeff.B1-discriminant",
        "discriminant of k^2 - mk - (2m+5) is m^2 + 8m + 20",
        &disc,
        &poly("m^2 + 8*m + 20"),
    ));

    let d = build_delta_set();
    let g = build_greek_set();
    let variant = a2_from(&d, &g, 1);
    if !poly_equal(&variant, &closed_form::a2()) {
        report.note(format!(
            "A2 built with +delta2 in place of +6*delta2 does not match the closed form; \
             it differs by {}; the +6*delta2 definition is the one that matches",
            &variant - &closed_form::a2()
        ));
    }
    report.note(
        "B1 multiplies |grad_S (du/dlambda)| without a square where the parallel terms are squared; \
         treated as the coefficient of the squared term",
    );
    report
}

/// Signs of `A1 + 12`, `A2` and `B1` at a parameter point.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SignAnalysis {
    pub k: Rational,
    pub m: Rational,
    /// `0 < k < m/2`, i.e. `p > p_s(n)`.
    pub supercritical: bool,
    pub a1_plus12_pos: bool,
    pub a2_pos: bool,
    pub b1_pos: bool,
}

/// Evaluates the signs exactly: each float input is converted to the
/// rational it represents and `k = 2s/(p-1)`, `m = n - 2s` are formed in
/// rational arithmetic.
pub fn sign_analysis(n: f64, s: f64, p: f64) -> Result<SignAnalysis> {
    let to_q = |x: f64, name: &str| {
        Rational::from_f64(x).ok_or_else(|| domain(format!("{name} must be finite, got {x}")))
    };
    let (nq, sq, pq) = (to_q(n, "n")?, to_q(s, "s")?, to_q(p, "p")?);
    let two = Rational::from(2);
    let m = &nq - &(&two * &sq);
    if !m.is_positive() {
        return Err(domain(format!("sign analysis needs n > 2s (n = {n}, s = {s})")));
    }
    let pm1 = &pq - &Rational::one();
    if !pm1.is_positive() {
        return Err(domain(format!("sign analysis needs p > 1 (p = {p})")));
    }
    let k = &(&two * &sq) / &pm1;
    sign_analysis_km(k, m)
}

pub fn sign_analysis_km(k: Rational, m: Rational) -> Result<SignAnalysis> {
    let cs = build_coeff_set(&build_delta_set(), &build_greek_set());
    let at = [("k", k.clone()), ("m", m.clone())];
    let a1 = cs.A1.eval_at(&at)? + Rational::from(12);
    let a2 = cs.A2.eval_at(&at)?;
    let b1 = cs.B1.eval_at(&at)?;
    let half_m = &m / &Rational::from(2);
    Ok(SignAnalysis {
        supercritical: k.is_positive() && k < half_m,
        k,
        m,
        a1_plus12_pos: a1.is_positive(),
        a2_pos: a2.is_positive(),
        b1_pos: b1.is_positive(),
    })
}
