//! The fixed, versioned verification suite behind the `verify` command.
//!
//! Check ids are grouped by prefix: `coeff.`, `ibp.`, `jordan.`, `scaling.`,
//! `radial.`, `threshold.`. Check order never depends on the execution mode.

use crate::coefficients::{
    build_coeff_set, build_delta_set, build_greek_set, closed_form, jordan_decompose, verify_ibp_catalog,
    verify_km_forms, verify_thresholds,
};
use crate::exact_algebra::{poly, q, MultiPoly, Rational};
use crate::exponents::{pm_exponent, pm_sqrt_q, pm_threshold_m};
use crate::report::{Check, VerificationReport};
use crate::scaling_identities::{default_k_samples, default_m_samples, verify_radial, verify_scaling};
use crate::scan::{map_ordered, ExecMode};

/// Bumped whenever a check is added, removed, renamed or reordered.
pub const SUITE_VERSION: &str = "1";

/// Largest monomial degree fed to the scaling identities.
pub const SCALING_J_MAX: u32 = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Group {
    Coefficients,
    Ibp,
    Jordan,
    Scaling,
    Radial,
    Thresholds,
}

const GROUPS: [Group; 6] = [
    Group::Coefficients,
    Group::Ibp,
    Group::Jordan,
    Group::Scaling,
    Group::Radial,
    Group::Thresholds,
];

impl Group {
    fn prefix(self) -> &'static str {
        match self {
            Group::Coefficients => "coeff.",
            Group::Ibp => "ibp.",
            Group::Jordan => "jordan.",
            Group::Scaling => "scaling.",
            Group::Radial => "radial.",
            Group::Thresholds => "threshold.",
        }
    }

    fn run(self) -> VerificationReport {
        match self {
            Group::Coefficients => {
                verify_km_forms(&build_coeff_set(&build_delta_set(), &build_greek_set()))
            }
            Group::Ibp => verify_ibp_catalog(),
            Group::Jordan => jordan_checks(),
            Group::Scaling => verify_scaling(SCALING_J_MAX, &default_k_samples()),
            Group::Radial => verify_radial(SCALING_J_MAX, &default_k_samples(), &default_m_samples()),
            Group::Thresholds => {
                let mut r = verify_thresholds();
                r.extend(numeric_threshold_checks());
                r
            }
        }
    }
}

/// Maps user-facing group names and aliases onto id prefixes. Anything else
/// is used verbatim.
pub fn normalize_filter(filter: &str) -> &str {
    match filter {
        "section32" | "scaling" => "scaling.",
        "radial" => "radial.",
        "coeff" | "coefficients" => "coeff.",
        "ibp" => "ibp.",
        "jordan" => "jordan.",
        "threshold" | "thresholds" => "threshold.",
        other => other,
    }
}

/// Runs the suite, skipping groups that cannot match `filter`.
pub fn run_suite(filter: Option<&str>, mode: ExecMode) -> VerificationReport {
    let prefix = filter.map(normalize_filter);
    let selected: Vec<Group> = GROUPS
        .iter()
        .copied()
        .filter(|g| match prefix {
            None => true,
            Some(p) => g.prefix().starts_with(p) || p.starts_with(g.prefix()),
        })
        .collect();
    let mut report = VerificationReport::new();
    for part in map_ordered(&selected, mode, |g| g.run()) {
        report.extend(part);
    }
    match prefix {
        Some(p) => report.filtered(p),
        None => report,
    }
}

fn jordan_checks() -> VerificationReport {
    let mut report = VerificationReport::new();
    match jordan_decompose(&q(2, 1), &q(0, 1)) {
        Ok(j) => {
            let d1_ok = j.d1 == &closed_form::a1() + &MultiPoly::constant(12);
            let d2_ok = j.d2 == closed_form::a2();
            report.push(Check::new(
                "jordan.default-shift",
                "c1 = 2, c2 = 0 completes the squares with d1 = A1 + 12, d2 = A2 and zero residual",
                j.balanced() && d1_ok && d2_ok,
                if j.balanced() {
                    format!("d1 = {}, d2 = {}", j.d1, j.d2)
                } else {
                    format!("residual {}", j.residual)
                },
            ));
            report.push(Check::new(
                "jordan.boundary-e22",
                "boundary coefficient of l^4 f''^2 is -3 c1 = -6",
                j.boundary_coeff(2, 2) == poly("-6"),
                format!("e22 = {}", j.boundary_coeff(2, 2)),
            ));
        }
        Err(e) => report.push(Check::new("jordan.default-shift", "completing the squares", false, e.to_string())),
    }

    let samples = [(q(0, 1), q(0, 1)), (q(3, 2), q(-1, 3)), (q(-1, 1), q(5, 1)), (q(7, 3), q(1, 2))];
    let mut failures = Vec::new();
    for (c1, c2) in &samples {
        match jordan_decompose(c1, c2) {
            Ok(j) if j.balanced() && j.boundary_coeff(2, 2) == MultiPoly::constant(Rational::from(-3) * c1) => {}
            Ok(j) => failures.push(format!("({c1}, {c2}): residual {}", j.residual)),
            Err(e) => failures.push(format!("({c1}, {c2}): {e}")),
        }
    }
    report.push(Check::new(
        "jordan.any-shift",
        "every (c1, c2) balances with boundary coefficient e22 = -3 c1",
        failures.is_empty(),
        failures.join("; "),
    ));
    report
}

fn numeric_threshold_checks() -> VerificationReport {
    let mut report = VerificationReport::new();
    let m_star = pm_threshold_m();
    report.push(Check::new(
        "threshold.sqrt73-constant",
        "|(6 + sqrt 73) - 14.544| < 2e-3",
        (m_star - 14.544).abs() < 2e-3,
        format!("6 + sqrt 73 = {m_star:.15}"),
    ));

    let s = 2.5;
    let gap = 5.0 * m_star - pm_sqrt_q(m_star);
    let below = pm_exponent(2.0 * s + m_star - 1e-6, s);
    let above = pm_exponent(2.0 * s + m_star + 1e-6, s);
    let switches = matches!(below, Ok(v) if v.is_infinite()) && matches!(above, Ok(v) if v.is_finite());
    report.push(Check::new(
        "threshold.pm-switch",
        "p_m's denominator 5m - sqrt(15m^2 + 120m + 370) vanishes at m = 6 + sqrt 73 and p_m turns finite there",
        gap.abs() < 1e-10 && switches,
        format!("denominator at threshold = {gap:.3e}; p_m below = {below:?}, above = {above:?}"),
    ));
    report
}
