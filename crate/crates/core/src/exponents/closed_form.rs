use num_complex::Complex64;

use crate::error::{domain, Error, Result};
use crate::exact_algebra::{Rational, UniPoly};

/// Relative size of the imaginary residue accepted as round-off.
const IMAG_TOL: f64 = 1e-9;

/// Joseph-Lundgren exponent for the Laplacian.
pub fn jl_classical(n: f64) -> f64 {
    if n <= 10.0 {
        return f64::INFINITY;
    }
    let num = (n - 2.0).powi(2) - 4.0 * n + 8.0 * (n - 1.0).sqrt();
    let den = (n - 2.0) * (n - 10.0);
    num / den
}

/// Numerator and denominator of the biharmonic exponent quotient.
fn biharmonic_parts(n: f64) -> (f64, f64) {
    let inner = (n * n + 4.0 - n * (n * n - 8.0 * n + 32.0).sqrt()).sqrt();
    (n + 2.0 - inner, n - 6.0 - inner)
}

/// Critical exponent for the bilaplacian.
pub fn jl_biharmonic(n: f64) -> f64 {
    if n <= 12.0 {
        return f64::INFINITY;
    }
    let (num, den) = biharmonic_parts(n);
    if den > 0.0 {
        num / den
    } else {
        f64::INFINITY
    }
}

/// `D_1(n)`, degree 6.
pub fn d1_poly() -> UniPoly {
    UniPoly::from_integers(&[-94976, 20736, 103104, -10368, -3024, 1296, -108])
}

/// `D_2(n)`, degree 12.
pub fn d2_poly() -> UniPoly {
    UniPoly::from_integers(&[
        6131712, -3039232, -16644096, 4818944, 6915840, -1936384, -690432, 251136, -30864, -4320,
        1800, -216, 9,
    ])
}

/// `D(n)` of the triharmonic formula.
///
/// `D_1` and `D_2` are evaluated exactly. The cube root in `D_0` has three
/// branches; the one giving a real `D` (up to `IMAG_TOL` relative residue)
/// is selected, and anything other than exactly one such branch is an
/// error.
pub fn triharmonic_d(n: f64) -> Result<f64> {
    let nq = Rational::from_f64(n).ok_or_else(|| domain(format!("n must be finite, got {n}")))?;
    let d1q = d1_poly().eval(&nq);
    let d2q = d2_poly().eval(&nq);
    let (d1, d2) = (d1q.to_f64(), d2q.to_f64());
    // D1 + 36 sqrt(D2) nearly cancels when D1 < 0 < D2; rewrite it as
    // (D1^2 - 1296 D2) / (D1 - 36 sqrt(D2)) with the numerator exact.
    let base = if d2 >= 0.0 && d1 < 0.0 {
        let numerator = (&d1q * &d1q - Rational::from(1296) * &d2q).to_f64();
        Complex64::new(numerator / (d1 - 36.0 * d2.sqrt()), 0.0)
    } else {
        Complex64::new(d1, 0.0) + 36.0 * Complex64::new(d2, 0.0).sqrt()
    };

    let principal = base.powf(1.0 / 3.0);
    let unity = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
    let mut candidates = Vec::new();
    let mut residues = Vec::new();
    for j in 0..3 {
        let d0 = -(principal * unity.powi(j));
        let inner = Complex64::new(9.0 * n * n + 96.0, 0.0)
            - Complex64::new(1536.0 + 1152.0 * n * n, 0.0) / d0
            - 1.5 * d0;
        let d = inner.sqrt() / 6.0;
        let residue = d.im.abs() / d.re.abs().max(f64::MIN_POSITIVE);
        residues.push(residue);
        if residue < IMAG_TOL && d.re > 0.0 {
            candidates.push(d.re);
        }
    }
    match candidates.as_slice() {
        [d] => Ok(*d),
        [] => Err(Error::BranchSelection(format!(
            "n = {n}: no cube-root branch gives a real D (relative imaginary residues {residues:?})"
        ))),
        many => Err(Error::BranchSelection(format!(
            "n = {n}: {} cube-root branches give a real D: {many:?}",
            many.len()
        ))),
    }
}

/// Critical exponent for the trilaplacian.
pub fn jl_triharmonic(n: f64) -> Result<f64> {
    if n <= 14.0 {
        return Ok(f64::INFINITY);
    }
    let d = triharmonic_d(n)?;
    let den = n - 8.0 - 2.0 * d;
    Ok(if den > 0.0 {
        (n + 4.0 - 2.0 * d) / den
    } else {
        f64::INFINITY
    })
}

/// Closed-form critical exponent for integer order `s` in {1, 2, 3}.
///
/// Each formula is stated for integer `n` above its branch point. For
/// non-integer `n` between the branch point and the next integer the
/// formula is used only while its denominator is positive; otherwise the
/// exponent is infinite.
pub fn closed_form_exponent(n: f64, s_int: u32) -> Result<f64> {
    if !(n > 0.0 && n.is_finite()) {
        return Err(domain(format!("dimension must be positive, got {n}")));
    }
    match s_int {
        1 => Ok(jl_classical(n)),
        2 => Ok(jl_biharmonic(n)),
        3 => jl_triharmonic(n),
        other => Err(domain(format!("closed forms exist for s = 1, 2, 3; got {other}"))),
    }
}
