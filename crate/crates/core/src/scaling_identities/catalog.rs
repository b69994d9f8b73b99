//! The identity list. `t(c, a, b, i, q)` is `c lambda^a r^b d_r^q d_lambda^i u^lambda`.

use crate::coefficients::{DeltaSet, GreekSet};
use crate::exact_algebra::{poly, MultiPoly, Rational};

use super::{ScalingIdentity, Term};

fn t(c: &str, lam: i32, r: i32, d_lambda: u32, d_r: u32) -> Term {
    tp(poly(c), lam, r, d_lambda, d_r)
}

fn tp(coeff: MultiPoly, lam: i32, r: i32, d_lambda: u32, d_r: u32) -> Term {
    Term {
        coeff,
        lam,
        r,
        d_lambda,
        d_r,
    }
}

/// `lhs = rhs`, stored as `lhs - rhs = 0`.
fn eq(id: &'static str, anchor: &'static str, on_sphere: bool, lhs: Vec<Term>, rhs: Vec<Term>) -> ScalingIdentity {
    let mut terms = lhs;
    terms.extend(rhs.into_iter().map(|mut x| {
        x.coeff = -x.coeff;
        x
    }));
    ScalingIdentity {
        id,
        anchor,
        on_sphere,
        terms,
    }
}

/// `U = d_lambda^0`, `Di = d_lambda^i`, `r`-derivatives as `d_r^q`.
pub fn scaling_catalog() -> Vec<ScalingIdentity> {
    let all = false;
    let sph = true;
    let mut v = vec![
        eq("scaling.euler-0", "l D1 = k U + r U_r", all,
            vec![t("1", 1, 0, 1, 0)],
            vec![t("k", 0, 0, 0, 0), t("1", 0, 1, 0, 1)]),
        eq("scaling.euler-1", "l D2 + D1 = k D1 + r (D1)_r", all,
            vec![t("1", 1, 0, 2, 0), t("1", 0, 0, 1, 0)],
            vec![t("k", 0, 0, 1, 0), t("1", 0, 1, 1, 1)]),
        eq("scaling.euler-2", "l D3 + 2 D2 = k D2 + r (D2)_r", all,
            vec![t("1", 1, 0, 3, 0), t("2", 0, 0, 2, 0)],
            vec![t("k", 0, 0, 2, 0), t("1", 0, 1, 2, 1)]),
        eq("scaling.euler-3", "l D4 + 3 D3 = k D3 + r (D3)_r", all,
            vec![t("1", 1, 0, 4, 0), t("3", 0, 0, 3, 0)],
            vec![t("k", 0, 0, 3, 0), t("1", 0, 1, 3, 1)]),
        eq("scaling.euler-r1", "l (D1)_r = (k+1) U_r + r U_rr", all,
            vec![t("1", 1, 0, 1, 1)],
            vec![t("k + 1", 0, 0, 0, 1), t("1", 0, 1, 0, 2)]),
        eq("scaling.euler-r2", "l (D1)_rr = (k+2) U_rr + r U_rrr", all,
            vec![t("1", 1, 0, 1, 2)],
            vec![t("k + 2", 0, 0, 0, 2), t("1", 0, 1, 0, 3)]),
        eq("scaling.euler-r3", "l (D1)_rrr = (k+3) U_rrr + r U_rrrr", all,
            vec![t("1", 1, 0, 1, 3)],
            vec![t("k + 3", 0, 0, 0, 3), t("1", 0, 1, 0, 4)]),
        eq("scaling.aux-D2-rr", "l (D2)_rr = (k+1)(D1)_rr + r (D1)_rrr", all,
            vec![t("1", 1, 0, 2, 2)],
            vec![t("k + 1", 0, 0, 1, 2), t("1", 0, 1, 1, 3)]),
        eq("scaling.aux-D3-r", "l (D3)_r = (k-1)(D2)_r + r (D2)_rr", all,
            vec![t("1", 1, 0, 3, 1)],
            vec![t("k - 1", 0, 0, 2, 1), t("1", 0, 1, 2, 2)]),
        eq("scaling.aux-D2-r", "l (D2)_r = k (D1)_r + r (D1)_rr", all,
            vec![t("1", 1, 0, 2, 1)],
            vec![t("k", 0, 0, 1, 1), t("1", 0, 1, 1, 2)]),
        // On the unit sphere.
        eq("scaling.sphere-U-r", "U_r = l D1 - k U on r = 1", sph,
            vec![t("1", 0, 0, 0, 1)],
            vec![t("1", 1, 0, 1, 0), t("-k", 0, 0, 0, 0)]),
        eq("scaling.sphere-D1-r", "(D1)_r = l D2 + (1-k) D1 on r = 1", sph,
            vec![t("1", 0, 0, 1, 1)],
            vec![t("1", 1, 0, 2, 0), t("1 - k", 0, 0, 1, 0)]),
        eq("scaling.sphere-U-rr-step", "U_rr = l (D1)_r - (1+k) U_r on r = 1", sph,
            vec![t("1", 0, 0, 0, 2)],
            vec![t("1", 1, 0, 1, 1), t("-(1 + k)", 0, 0, 0, 1)]),
        eq("scaling.sphere-U-rr", "U_rr = l^2 D2 - 2k l D1 + (1+k)k U on r = 1", sph,
            vec![t("1", 0, 0, 0, 2)],
            vec![t("1", 2, 0, 2, 0), t("-2*k", 1, 0, 1, 0), t("(1 + k)*k", 0, 0, 0, 0)]),
        eq("scaling.sphere-D1-rr-step", "(D1)_rr = l (D2)_r - k (D1)_r on r = 1", sph,
            vec![t("1", 0, 0, 1, 2)],
            vec![t("1", 1, 0, 2, 1), t("-k", 0, 0, 1, 1)]),
        eq("scaling.sphere-D1-rr", "(D1)_rr = l^2 D3 + (2-2k) l D2 - (1-k)k D1 on r = 1", sph,
            vec![t("1", 0, 0, 1, 2)],
            vec![t("1", 2, 0, 3, 0), t("2 - 2*k", 1, 0, 2, 0), t("-(1 - k)*k", 0, 0, 1, 0)]),
        eq("scaling.sphere-U-rrr-step", "U_rrr = l (D1)_rr - (2+k) U_rr on r = 1", sph,
            vec![t("1", 0, 0, 0, 3)],
            vec![t("1", 1, 0, 1, 2), t("-(2 + k)", 0, 0, 0, 2)]),
        eq("scaling.sphere-U-rrr", "U_rrr in lambda-derivatives on r = 1", sph,
            vec![t("1", 0, 0, 0, 3)],
            vec![
                t("1", 3, 0, 3, 0),
                t("-3*k", 2, 0, 2, 0),
                t("3*k + 3*k^2", 1, 0, 1, 0),
                t("-(2 + k)*(1 + k)*k", 0, 0, 0, 0),
            ]),
        eq("scaling.sphere-D1-rrr-step", "(D1)_rrr = l (D2)_rr - (k+1)(D1)_rr on r = 1", sph,
            vec![t("1", 0, 0, 1, 3)],
            vec![t("1", 1, 0, 2, 2), t("-(k + 1)", 0, 0, 1, 2)]),
        eq("scaling.sphere-D2-rr-step", "(D2)_rr = l (D3)_r + (1-k)(D2)_r on r = 1", sph,
            vec![t("1", 0, 0, 2, 2)],
            vec![t("1", 1, 0, 3, 1), t("1 - k", 0, 0, 2, 1)]),
        eq("scaling.sphere-D2-rr", "(D2)_rr = l^2 D4 + l(4-2k) D3 + (1-k)(2-k) D2 on r = 1", sph,
            vec![t("1", 0, 0, 2, 2)],
            vec![t("1", 2, 0, 4, 0), t("4 - 2*k", 1, 0, 3, 0), t("(1 - k)*(2 - k)", 0, 0, 2, 0)]),
        eq("scaling.sphere-D1-rrr", "(D1)_rrr in lambda-derivatives on r = 1", sph,
            vec![t("1", 0, 0, 1, 3)],
            vec![
                t("1", 3, 0, 4, 0),
                t("3 - 3*k", 2, 0, 3, 0),
                t("-(1 - k)*3*k", 1, 0, 2, 0),
                t("(1 - k)*(1 + k)*k", 0, 0, 1, 0),
            ]),
        eq("scaling.sphere-U-rrrr-step", "U_rrrr = l (D1)_rrr - (3+k) U_rrr on r = 1", sph,
            vec![t("1", 0, 0, 0, 4)],
            vec![t("1", 1, 0, 1, 3), t("-(3 + k)", 0, 0, 0, 3)]),
        eq("scaling.sphere-U-rrrr", "U_rrrr in lambda-derivatives on r = 1", sph,
            vec![t("1", 0, 0, 0, 4)],
            vec![
                t("1", 4, 0, 4, 0),
                t("-4*k", 3, 0, 3, 0),
                t("(2 + 2*k)*3*k", 2, 0, 2, 0),
                t("-(1 + k)*(1 + k/2)*8*k", 1, 0, 1, 0),
                t("(3 + k)*(2 + k)*(1 + k)*k", 0, 0, 0, 0),
            ]),
    ];

    // l^i D^i = sum_q C(i,q) (k)_{i-q} r^q d_r^q, valid everywhere.
    let expansions: [(&'static str, &'static str); 4] = [
        ("scaling.expansion-1", "l D1 as r-derivatives"),
        ("scaling.expansion-2", "l^2 D2 as r-derivatives"),
        ("scaling.expansion-3", "l^3 D3 as r-derivatives"),
        ("scaling.expansion-4", "l^4 D4 as r-derivatives"),
    ];
    for (i, (id, anchor)) in (1u32..).zip(expansions) {
        let rhs = (0..=i)
            .map(|qq| {
                let binom = (0..qq).fold(1i64, |acc, x| acc * (i - x) as i64 / (x + 1) as i64);
                let ff = (0..i - qq)
                    .map(|x| poly(&format!("k - {x}")))
                    .fold(MultiPoly::one(), |a, b| &a * &b);
                tp(ff.scale(&Rational::from(binom)), 0, qq as i32, 0, qq)
            })
            .collect();
        v.push(eq(id, anchor, all, vec![t("1", i as i32, 0, i, 0)], rhs));
    }
    v
}

/// `(n+b)` as a polynomial in `m`.
fn big_n() -> MultiPoly {
    poly("m + 5")
}

/// Operator identities on `r = 1` whose coefficients come from the
/// `delta` and `alpha`, `beta` systems.
pub fn radial_identities(d: &DeltaSet, g: &GreekSet) -> Vec<ScalingIdentity> {
    let n = big_n();
    let nn2 = &n * &poly("m + 3");
    let one = MultiPoly::one();
    let two = poly("2");
    let three = poly("3");
    let four = poly("4");

    // I(u) = U_rrrr + 2N U_rrr + N(N-2) U_rr - N(N-2) U_r on r = 1.
    let i_of = |dl: u32| {
        vec![
            tp(one.clone(), 0, 0, dl, 4),
            tp(&two * &n, 0, 0, dl, 3),
            tp(nn2.clone(), 0, 0, dl, 2),
            tp(-nn2.clone(), 0, 0, dl, 1),
        ]
    };
    let urr_of = |dl: u32| {
        vec![
            tp(one.clone(), 0, 0, dl, 2),
            tp(&n - &two, 0, 0, dl, 1),
        ]
    };

    vec![
        eq("radial.I-delta-form", "I(u) = sum delta_i l^i D^i on r = 1", true,
            i_of(0),
            vec![
                tp(one.clone(), 4, 0, 4, 0),
                tp(d.delta1.clone(), 3, 0, 3, 0),
                tp(d.delta2.clone(), 2, 0, 2, 0),
                tp(d.delta3.clone(), 1, 0, 1, 0),
                tp(d.delta4.clone(), 0, 0, 0, 0),
            ]),
        eq("radial.I-lambda", "d/dl I(u) in lambda-derivatives on r = 1", true,
            i_of(1),
            vec![
                tp(one.clone(), 4, 0, 5, 0),
                tp(&d.delta1 + &four, 3, 0, 4, 0),
                tp(&(&three * &d.delta1) + &d.delta2, 2, 0, 3, 0),
                tp(&(&two * &d.delta2) + &d.delta3, 1, 0, 2, 0),
                tp(&d.delta3 + &d.delta4, 0, 0, 1, 0),
            ]),
        eq("radial.urr", "U_rr + (N-2) U_r = l^2 D2 + alpha l D1 + beta U on r = 1", true,
            urr_of(0),
            vec![
                tp(one.clone(), 2, 0, 2, 0),
                tp(g.alpha.clone(), 1, 0, 1, 0),
                tp(g.beta.clone(), 0, 0, 0, 0),
            ]),
        eq("radial.urr-lambda", "d/dl [U_rr + (N-2) U_r] on r = 1", true,
            urr_of(1),
            vec![
                tp(one.clone(), 2, 0, 3, 0),
                tp(&g.alpha + &two, 1, 0, 2, 0),
                tp(&g.alpha + &g.beta, 0, 0, 1, 0),
            ]),
        eq("radial.weighted-laplacian", "U_rr + N U_r = l^2 D2 + alpha_0 l D1 + beta_0 U on r = 1", true,
            vec![tp(one.clone(), 0, 0, 0, 2), tp(n.clone(), 0, 0, 0, 1)],
            vec![
                tp(one.clone(), 2, 0, 2, 0),
                tp(g.alpha0.clone(), 1, 0, 1, 0),
                tp(g.beta0.clone(), 0, 0, 0, 0),
            ]),
    ]
}

/// The four coefficients of `I(u)` as written out term by term, with
/// `K = 2s/(p-1)` and `N = n + b`, before being named `delta_i`.
pub(super) fn explicit_radial_coefficients() -> [MultiPoly; 4] {
    let km = |src: &str| poly(src).substitute("N", &big_n()).substitute("K", &poly("k"));
    [
        km("2*N - 4*K"),
        km("6*K*(1 + K) - N*6*K + N*(N - 2)"),
        km("-4*K*(1 + K)*(2 + K) + 2*N*3*K*(1 + K) + N*(N - 2)*(-2*K - 1)"),
        km("(1 + K)*(2 + K)*(3 + K)*K - N*(1 + K)*(2 + K)*2*K + N*(N - 2)*(K + 2)*K"),
    ]
}
