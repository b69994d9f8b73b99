//! The Gamma-quotient criterion for stability of the singular solution
//! `u = |x|^{-2s/(p-1)}`, evaluated in log space.

mod gamma;

pub use gamma::{gamma, log_gamma, sqrt_pi};

use serde::Serialize;

use crate::error::{domain, Result};
use gamma::log_gamma_positive;

/// A point `(n, s, p)` of the equation `(-Δ)^s u = |u|^{p-1} u`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ParamPoint {
    pub n: f64,
    pub s: f64,
    pub p: f64,
}

impl ParamPoint {
    pub fn new(n: f64, s: f64, p: f64) -> Result<Self> {
        if !(n.is_finite() && n > 0.0) {
            return Err(domain(format!("dimension n must be positive, got {n}")));
        }
        if !(s.is_finite() && s > 0.0) {
            return Err(domain(format!("order s must be positive, got {s}")));
        }
        if !(p > 1.0) || p.is_nan() {
            return Err(domain(format!("exponent p must exceed 1, got {p}")));
        }
        Ok(ParamPoint { n, s, p })
    }

    /// `k = 2s/(p-1)`.
    pub fn k(&self) -> f64 {
        2.0 * self.s / (self.p - 1.0)
    }

    /// `m = n - 2s`.
    pub fn m(&self) -> f64 {
        self.n - 2.0 * self.s
    }

    /// `b = 5 - 2s`, the weight exponent of the extension problem.
    pub fn b(&self) -> f64 {
        5.0 - 2.0 * self.s
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    /// `F > 0`: the singular solution is unstable and the Liouville
    /// classification applies.
    InstabilityHolds,
    /// `F <= 0`: the singular solution is stable.
    SingularStable,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CriterionValue {
    pub log_lhs: f64,
    pub log_rhs: f64,
    #[serde(rename = "F")]
    pub f: f64,
    pub verdict: Verdict,
    /// `F == 0` exactly.
    pub on_boundary: bool,
}

impl CriterionValue {
    fn from_logs(log_lhs: f64, log_rhs: f64) -> Self {
        let f = log_lhs - log_rhs;
        CriterionValue {
            log_lhs,
            log_rhs,
            f,
            verdict: if f > 0.0 {
                Verdict::InstabilityHolds
            } else {
                Verdict::SingularStable
            },
            on_boundary: f == 0.0,
        }
    }
}

fn require_above_2s(n: f64, s: f64) -> Result<()> {
    if n > 2.0 * s {
        Ok(())
    } else {
        Err(domain(format!("need n > 2s, got n = {n}, s = {s}")))
    }
}

fn lg(x: f64, label: &str) -> Result<f64> {
    if x > 0.0 && x.is_finite() {
        Ok(log_gamma_positive(x))
    } else {
        Err(domain(format!("Gamma argument {label} = {x} is not positive")))
    }
}

/// `2 (ln Gamma((n+2s)/4) - ln Gamma((n-2s)/4))`.
pub fn log_hardy_constant(n: f64, s: f64) -> Result<f64> {
    require_above_2s(n, s)?;
    Ok(2.0 * (lg((n + 2.0 * s) / 4.0, "(n+2s)/4")? - lg((n - 2.0 * s) / 4.0, "(n-2s)/4")?))
}

/// `Gamma((n+2s)/4)^2 / Gamma((n-2s)/4)^2`, the best constant of the
/// fractional Hardy inequality up to the factor `2^{2s}`.
pub fn hardy_constant(n: f64, s: f64) -> Result<f64> {
    log_hardy_constant(n, s).map(f64::exp)
}

/// Evaluates `F = ln(LHS) - ln(RHS)` where
/// `LHS = p Gamma(n/2 - e) Gamma(s + e) / (Gamma(e) Gamma((n-2s)/2 - e))`,
/// `e = s/(p-1)`, and `RHS` is the Hardy constant.
pub fn gamma_condition(pt: &ParamPoint) -> Result<CriterionValue> {
    let ParamPoint { n, s, p } = *pt;
    require_above_2s(n, s)?;
    let e = s / (p - 1.0);
    let log_lhs = p.ln() + lg(n / 2.0 - e, "n/2 - s/(p-1)")? + lg(s + e, "s + s/(p-1)")?
        - lg(e, "s/(p-1)")?
        - lg((n - 2.0 * s) / 2.0 - e, "(n-2s)/2 - s/(p-1)")?;
    Ok(CriterionValue::from_logs(log_lhs, log_hardy_constant(n, s)?))
}

/// `G(n, s) = lim_{p -> inf} F`, using `Gamma(e) ~ 1/e` as `e -> 0`:
/// `ln(s Gamma(n/2) Gamma(s)) - ln Gamma((n-2s)/2) - ln(hardy)`.
pub fn gamma_condition_limit(n: f64, s: f64) -> Result<f64> {
    require_above_2s(n, s)?;
    if !(s > 0.0) {
        return Err(domain(format!("order s must be positive, got {s}")));
    }
    Ok(s.ln() + lg(n / 2.0, "n/2")? + lg(s, "s")? - lg((n - 2.0 * s) / 2.0, "(n-2s)/2")?
        - log_hardy_constant(n, s)?)
}

/// `ln lambda(alpha)` for `(-Δ)^s |x|^{-alpha} = lambda(alpha) |x|^{-alpha-2s}`.
pub fn log_singular_lambda(n: f64, s: f64, alpha: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha < n - 2.0 * s) {
        return Err(domain(format!(
            "need 0 < alpha < n - 2s, got alpha = {alpha}, n - 2s = {}",
            n - 2.0 * s
        )));
    }
    Ok(2.0 * s * std::f64::consts::LN_2 + lg((alpha + 2.0 * s) / 2.0, "(alpha+2s)/2")?
        + lg((n - alpha) / 2.0, "(n-alpha)/2")?
        - lg(alpha / 2.0, "alpha/2")?
        - lg((n - alpha - 2.0 * s) / 2.0, "(n-alpha-2s)/2")?)
}

pub fn singular_lambda(n: f64, s: f64, alpha: f64) -> Result<f64> {
    log_singular_lambda(n, s, alpha).map(f64::exp)
}

/// Left side of the criterion through the `lambda(alpha)` identity:
/// `p lambda(2s/(p-1)) 2^{-2s}`, in log form.
pub fn log_lhs_via_lambda(pt: &ParamPoint) -> Result<f64> {
    let alpha = pt.k();
    Ok(pt.p.ln() + log_singular_lambda(pt.n, pt.s, alpha)? - 2.0 * pt.s * std::f64::consts::LN_2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(n: f64, s: f64, p: f64) -> ParamPoint {
        ParamPoint::new(n, s, p).unwrap()
    }

    #[test]
    fn sobolev_point_collapses() {
        let (n, s) = (20.0, 2.5);
        let ps = (n + 2.0 * s) / (n - 2.0 * s);
        let v = gamma_condition(&pt(n, s, ps)).unwrap();
        assert!((v.f - ps.ln()).abs() < 1e-12);
        assert_eq!(v.verdict, Verdict::InstabilityHolds);
    }

    #[test]
    fn hardy_special_cases() {
        let s = 2.5;
        let h = hardy_constant(2.0 * s + 4.0, s).unwrap();
        assert!((h - gamma(3.5).unwrap().powi(2)).abs() < 1e-12 * h);
        let h = hardy_constant(4.0 * s, s).unwrap();
        let expect = (gamma(1.5 * s).unwrap() / gamma(0.5 * s).unwrap()).powi(2);
        assert!((h - expect).abs() < 1e-12 * expect);
        assert!(hardy_constant(5.0, 2.5).is_err());
    }

    #[test]
    fn domain_errors_name_the_argument() {
        let err = gamma_condition(&pt(20.0, 2.5, 1.3)).unwrap_err();
        assert!(err.to_string().contains("(n-2s)/2 - s/(p-1)"), "{err}");
        assert!(ParamPoint::new(20.0, 2.5, 1.0).is_err());
    }

    #[test]
    fn lambda_identity_matches() {
        let p = pt(20.0, 2.5, 2.0);
        let v = gamma_condition(&p).unwrap();
        assert!((log_lhs_via_lambda(&p).unwrap() - v.log_lhs).abs() < 1e-12);
        let n = 20.0;
        let s = 2.5;
        let hardy = (2.0f64).powf(2.0 * s) * hardy_constant(n, s).unwrap();
        let lam = singular_lambda(n, s, (n - 2.0 * s) / 2.0).unwrap();
        assert!((lam - hardy).abs() < 1e-10 * hardy);
        assert!(singular_lambda(n, s, 1e-12).unwrap() < 1e-7);
    }

    #[test]
    fn limit_signs() {
        assert!(gamma_condition_limit(21.0, 2.5).unwrap() < 0.0);
        assert!(gamma_condition_limit(6.0, 2.5).unwrap() > 0.0);
    }
}
