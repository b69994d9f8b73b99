use crate::exact_algebra::{poly, q, Rational, UniPoly};
use crate::report::{Check, VerificationReport};

use super::closed_form;

/// `225 m^4 - 720 m^3 - 17244 m^2 - 29088 m + 7236`; the comparison
/// `p_c < p_m` is reduced to positivity of this quartic.
pub fn comparison_quartic() -> UniPoly {
    UniPoly::from_integers(&[7236, -29088, -17244, -720, 225])
}

/// Rational interval of width `<= 1e-9` around the largest real root.
pub fn quartic_largest_root() -> (Rational, Rational) {
    comparison_quartic()
        .largest_real_root(&q(1, 1_000_000_000))
        .expect("quartic has real roots")
}

pub fn verify_thresholds() -> VerificationReport {
    let mut report = VerificationReport::new();

    let quartic = comparison_quartic();
    let (lo, hi) = quartic_largest_root();
    let (a, b) = (q(1111, 100), q(1113, 100));
    let inside = lo >= a && hi <= b;
    let unique_above = quartic.count_roots(&a, &q(10_000, 1)) == 1;
    report.push(Check::new(
        "threshold.quartic-root",
        "largest real root of 225m^4 - 720m^3 - 17244m^2 - 29088m + 7236 lies in (11.11, 11.13)",
        inside && unique_above,
        format!("root in [{:.12}, {:.12}]", lo.to_f64(), hi.to_f64()),
    ));
    let above = quartic.eval(&q(1112, 100));
    report.push(Check::new(
        "threshold.quartic-positive-above",
        "quartic > 0 at m = 11.12 and has no root beyond it",
        above.is_positive() && quartic.count_roots(&q(1112, 100), &q(10_000, 1)) == 0,
        format!("value at 11.12 = {:.6}", above.to_f64()),
    ));

    let q_m = poly("15*m^2 + 120*m + 370");
    let denominator_gap = &poly("25*m^2") - &q_m;
    report.push(Check::new(
        "threshold.pm-denominator",
        "(5m)^2 - (15m^2 + 120m + 370) = 10(m^2 - 12m - 37), whose roots are 6 +- sqrt(73)",
        denominator_gap == poly("10*(m^2 - 12*m - 37)") && poly("(m-6)^2 - 73") == poly("m^2 - 12*m - 37"),
        "",
    ));

    let link = &(&closed_form::a1() + &poly("12")).scale(&Rational::from(10)) - &(&q_m - &poly("(10*k - 5*m)^2"));
    report.push(Check::new(
        "threshold.A1-pm-link",
        "10(A1 + 12) = 15m^2 + 120m + 370 - (10k - 5m)^2, so A1 + 12 > 0 exactly for p > p_m",
        link.is_zero(),
        if link.is_zero() { String::new() } else { format!("difference = {link}") },
    ));
    report
}
