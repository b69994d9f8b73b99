//! Critical exponents and dimension thresholds.

mod closed_form;

pub use closed_form::{
    closed_form_exponent, d1_poly, d2_poly, jl_biharmonic, jl_classical, jl_triharmonic, triharmonic_d,
};

use serde::{Serialize, Serializer};

use crate::criterion::{gamma_condition, gamma_condition_limit, CriterionValue, ParamPoint};
use crate::error::{domain, Error, Result};
use crate::scan::{map_ordered, ExecMode};

/// Default absolute tolerance for root finding.
pub const DEFAULT_TOL: f64 = 1e-10;
/// Largest exponent searched for a root of the criterion.
pub const P_MAX: f64 = 1e8;
/// Number of log-spaced samples used to bracket the criterion root.
pub const SCAN_SAMPLES: usize = 64;
/// Width of the dimension window `(2s, 2s + N0_WINDOW]` searched for `n0`.
pub const N0_WINDOW: f64 = 20.0;

/// `G(n, s)` values this close to zero count as zero: at the branch point
/// itself (e.g. `n = 10`, `s = 1`) `G` vanishes exactly and rounding must
/// not turn `p_c = inf` into a bracket failure near `p = 1e8`.
pub const LIMIT_ROUNDOFF: f64 = 1e-12;

/// `(n + 2s)/(n - 2s)` for `n > 2s`, infinite otherwise.
pub fn sobolev_exponent(n: f64, s: f64) -> f64 {
    if n > 2.0 * s {
        (n + 2.0 * s) / (n - 2.0 * s)
    } else {
        f64::INFINITY
    }
}

/// `6 + sqrt(73)`: `p_m` is finite exactly for `n - 2s` at or above it.
pub fn pm_threshold_m() -> f64 {
    6.0 + 73f64.sqrt()
}

/// Exponent above which `A1 + 12 > 0`:
/// `(5n + 10s - sqrt(Q)) / (5n - 10s - sqrt(Q))`, `Q = 15m^2 + 120m + 370`,
/// infinite for `m = n - 2s < 6 + sqrt(73)`.
pub fn pm_exponent(n: f64, s: f64) -> Result<f64> {
    if !(n > 2.0 * s) {
        return Err(domain(format!("p_m needs n > 2s, got n = {n}, s = {s}")));
    }
    let m = n - 2.0 * s;
    if m < pm_threshold_m() {
        return Ok(f64::INFINITY);
    }
    let root = pm_sqrt_q(m);
    let den = 5.0 * n - 10.0 * s - root;
    if den <= 0.0 {
        return Ok(f64::INFINITY);
    }
    Ok((5.0 * n + 10.0 * s - root) / den)
}

/// `sqrt(15m^2 + 120m + 370)`.
pub fn pm_sqrt_q(m: f64) -> f64 {
    (15.0 * m * m + 120.0 * m + 370.0).sqrt()
}

fn criterion_f(n: f64, s: f64, p: f64) -> Result<f64> {
    gamma_condition(&ParamPoint::new(n, s, p)?).map(|v| v.f)
}

/// Bisection on `[lo, hi]` with `f(lo) > 0 >= f(hi)` down to width `tol`.
fn bisect(mut lo: f64, mut hi: f64, tol: f64, f: impl Fn(f64) -> Result<f64>) -> Result<f64> {
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid)? > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Largest `p` at which the singular solution is unstable: the root of
/// `F(p) = 0` on `(p_s, inf)`, or infinity when `F` stays positive.
pub fn pc_exponent(n: f64, s: f64, tol: f64) -> Result<f64> {
    if !(tol > 0.0) {
        return Err(domain(format!("tolerance must be positive, got {tol}")));
    }
    if gamma_condition_limit(n, s)? >= -LIMIT_ROUNDOFF {
        return Ok(f64::INFINITY);
    }
    let p_lo = sobolev_exponent(n, s) * (1.0 + 1e-9);
    let (a, b) = (p_lo.ln(), P_MAX.ln());
    let ps: Vec<f64> = (0..SCAN_SAMPLES)
        .map(|i| (a + (b - a) * i as f64 / (SCAN_SAMPLES - 1) as f64).exp())
        .collect();
    let values = ps
        .iter()
        .map(|&p| criterion_f(n, s, p))
        .collect::<Result<Vec<_>>>()?;
    let changes: Vec<usize> = (1..values.len())
        .filter(|&i| (values[i - 1] > 0.0) != (values[i] > 0.0))
        .collect();
    match changes.as_slice() {
        [i] => bisect(ps[i - 1], ps[*i], tol, |p| criterion_f(n, s, p)),
        [] => Err(Error::BracketFailure {
            what: format!("F(n = {n}, s = {s}, p)"),
            lo: ps[0],
            hi: P_MAX,
            f_lo: values[0],
            f_hi: values[values.len() - 1],
        }),
        many => Err(Error::MultipleRoots {
            what: format!("F(n = {n}, s = {s}, p)"),
            count: many.len(),
        }),
    }
}

/// Largest dimension with `p_c = inf`: the largest root in `n` of the
/// `p -> inf` limit of the criterion, searched on `(2s, 2s + 20]`.
pub fn n0_threshold(s: f64, tol: f64) -> Result<f64> {
    if !(s > 0.0 && s.is_finite()) {
        return Err(domain(format!("order s must be positive, got {s}")));
    }
    if !(tol > 0.0) {
        return Err(domain(format!("tolerance must be positive, got {tol}")));
    }
    const STEPS: usize = 2000;
    let g = |n: f64| gamma_condition_limit(n, s);
    let lo_end = 2.0 * s;
    let grid: Vec<f64> = (1..=STEPS)
        .map(|i| lo_end + N0_WINDOW * i as f64 / STEPS as f64)
        .collect();
    let values = grid.iter().map(|&n| g(n)).collect::<Result<Vec<_>>>()?;
    let last_change = (1..values.len())
        .rev()
        .find(|&i| values[i - 1] >= 0.0 && values[i] < 0.0);
    match last_change {
        Some(i) => bisect(grid[i - 1], grid[i], tol, |n| {
            g(n).map(|v| if v >= 0.0 { 1.0 } else { -1.0 })
        }),
        None => Err(Error::BracketFailure {
            what: format!("G(n, s = {s})"),
            lo: grid[0],
            hi: grid[STEPS - 1],
            f_lo: values[0],
            f_hi: values[STEPS - 1],
        }),
    }
}

/// `(n + 2s - 2 - 2a sqrt(n)) / (n - 2s - 2 - 2a sqrt(n))`.
pub fn pc_from_a(n: f64, s: f64, a: f64) -> f64 {
    let shift = 2.0 * a * n.sqrt();
    (n + 2.0 * s - 2.0 - shift) / (n - 2.0 * s - 2.0 - shift)
}

/// The `a` for which [`pc_from_a`] reproduces a given `p_c`.
pub fn a_from_pc(n: f64, s: f64, pc: f64) -> f64 {
    (pc * (n - 2.0 * s - 2.0) - (n + 2.0 * s - 2.0)) / (2.0 * n.sqrt() * (pc - 1.0))
}

/// `a_{n,s}` defined by inverting the `p_c` parametrisation around the
/// numerically computed `p_c`.
pub fn a_ns(n: f64, s: f64, tol: f64) -> Result<f64> {
    let pc = pc_exponent(n, s, tol)?;
    if pc.is_infinite() {
        return Err(Error::Undefined(format!(
            "a_ns needs a finite p_c; p_c(n = {n}, s = {s}) is infinite"
        )));
    }
    Ok(a_from_pc(n, s, pc))
}

fn serialize_extended<S: Serializer>(x: &f64, serializer: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    if x.is_infinite() {
        let mut map = serializer.serialize_map(Some(2))?;
        map.serialize_entry("value", &Option::<f64>::None)?;
        map.serialize_entry("infinite", &true)?;
        map.end()
    } else {
        serializer.serialize_f64(*x)
    }
}

/// All exponents at one `(n, s)`. Infinite values are `f64::INFINITY` and
/// serialize as `{"value": null, "infinite": true}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExponentProfile {
    pub n: f64,
    pub s: f64,
    #[serde(serialize_with = "serialize_extended")]
    pub p_s: f64,
    #[serde(serialize_with = "serialize_extended")]
    pub p_m: f64,
    #[serde(serialize_with = "serialize_extended")]
    pub p_c: f64,
    pub n0: f64,
    /// Absent when `p_c` is infinite.
    pub a_ns: Option<f64>,
}

pub fn exponent_profile(n: f64, s: f64, n0: f64, tol: f64) -> Result<ExponentProfile> {
    let p_c = pc_exponent(n, s, tol)?;
    Ok(ExponentProfile {
        n,
        s,
        p_s: sobolev_exponent(n, s),
        p_m: pm_exponent(n, s)?,
        p_c,
        n0,
        a_ns: p_c.is_finite().then(|| a_from_pc(n, s, p_c)),
    })
}

/// Profiles for each `n`, in input order, computed per `mode`.
pub fn exponent_table(s: f64, ns: &[f64], tol: f64, mode: ExecMode) -> Result<Vec<Result<ExponentProfile>>> {
    let n0 = n0_threshold(s, tol)?;
    Ok(map_ordered(ns, mode, |&n| exponent_profile(n, s, n0, tol)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Regime {
    Subcritical,
    Critical,
    SupercriticalLiouville,
    SupercriticalStableSingular,
}

impl Regime {
    pub fn statement(self) -> &'static str {
        match self {
            Regime::Subcritical => "u ≡ 0",
            Regime::Critical => "finite energy; stable ⇒ u ≡ 0",
            Regime::SupercriticalLiouville => "u ≡ 0 (Liouville)",
            Regime::SupercriticalStableSingular => {
                "singular solution stable; classification does not apply (the criterion is optimal)"
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RegimeVerdict {
    pub regime: Regime,
    pub criterion: Option<CriterionValue>,
    pub statement: String,
}

/// Default relative tolerance for recognising `p = p_s`.
pub const CRITICAL_TOL: f64 = 1e-12;

/// Classifies a stable solution at `(n, s, p)`: subcritical, critical
/// (`|p - p_s| <= tol p_s`), or supercritical split by the sign of `F`.
pub fn classify_regime(pt: &ParamPoint, tol: f64) -> Result<RegimeVerdict> {
    if !(pt.n > 2.0 * pt.s) {
        return Err(domain(format!("need n > 2s, got n = {}, s = {}", pt.n, pt.s)));
    }
    let ps = sobolev_exponent(pt.n, pt.s);
    let (regime, criterion) = if (pt.p - ps).abs() <= tol * ps {
        (Regime::Critical, Some(gamma_condition(pt)?))
    } else if pt.p < ps {
        (Regime::Subcritical, None)
    } else {
        let value = gamma_condition(pt)?;
        let regime = if value.f > 0.0 {
            Regime::SupercriticalLiouville
        } else {
            Regime::SupercriticalStableSingular
        };
        (regime, Some(value))
    };
    Ok(RegimeVerdict {
        regime,
        criterion,
        statement: regime.statement().to_owned(),
    })
}
