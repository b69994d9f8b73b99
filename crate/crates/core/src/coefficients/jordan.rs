use std::collections::BTreeMap;

use serde::Serialize;

use super::systems::{build_coeff_set, build_delta_set, build_greek_set};
use crate::error::Result;
use crate::exact_algebra::{find_total_derivative, DiffExpr, MultiPoly, Rational};

/// Completing squares in the quadratic form
/// `3 l^5 f'''^2 + A1 l^3 f''^2 + A2 l f'^2` with free shifts `c1`, `c2`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct JordanDecomposition {
    pub c1: Rational,
    pub c2: Rational,
    pub d1: MultiPoly,
    pub d2: MultiPoly,
    /// Coefficient `e_ij` of `lambda^(i+j) f^(i) f^(j)` (with `i <= j`) in the
    /// total-derivative part.
    #[serde(serialize_with = "serialize_boundary")]
    pub boundary: BTreeMap<(usize, usize), MultiPoly>,
    /// Quadratic form minus squares minus `D(boundary)`; zero when balanced.
    pub residual: DiffExpr,
}

fn serialize_boundary<S: serde::Serializer>(
    map: &BTreeMap<(usize, usize), MultiPoly>,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_map(map.iter().map(|((i, j), v)| (format!("e{i}{j}"), v.to_string())))
}

impl JordanDecomposition {
    pub fn balanced(&self) -> bool {
        self.residual.is_zero()
    }

    pub fn boundary_coeff(&self, i: usize, j: usize) -> MultiPoly {
        let key = (i.min(j), i.max(j));
        self.boundary.get(&key).cloned().unwrap_or_default()
    }
}

/// `d1(c1) = A1 - 3 c1^2 + 12 c1`.
pub fn d1_of(a1: &MultiPoly, c1: &Rational) -> MultiPoly {
    let shift = &(Rational::from(12) * c1) - &(Rational::from(3) * &c1.pow(2));
    a1 + &MultiPoly::constant(shift)
}

fn ansatz() -> Vec<((usize, usize), DiffExpr)> {
    let mut out = Vec::new();
    for i in 0..=2 {
        for j in i..=2 {
            let term = DiffExpr::quadratic((i + j) as u32, i, j).expect("order within cap");
            out.push(((i, j), term));
        }
    }
    out
}

pub fn jordan_decompose(c1: &Rational, c2: &Rational) -> Result<JordanDecomposition> {
    let cs = build_coeff_set(&build_delta_set(), &build_greek_set());
    let d1 = d1_of(&cs.A1, c1);
    let d2 = &cs.A2 - &d1.scale(&(&c2.pow(2) - &(Rational::from(2) * c2)));

    let l = |p: u32| DiffExpr::lambda_pow(p);
    let f = |i: usize| DiffExpr::f(i).expect("order within cap");
    let konst = |r: &Rational| DiffExpr::constant(MultiPoly::constant(r.clone()));
    let poly = |p: &MultiPoly| DiffExpr::constant(p.clone());

    let quadratic_form = &(&l(5) * &(&f(3) * &f(3))).scale_rational(&Rational::from(3))
        + &(&poly(&cs.A1) * &(&l(3) * &(&f(2) * &f(2))))
        + &poly(&cs.A2) * &(&l(1) * &(&f(1) * &f(1)));

    let sq1 = &(&l(2) * &f(3)) + &(&konst(c1) * &(&l(1) * &f(2)));
    let sq2 = &(&l(1) * &f(2)) + &(&konst(c2) * &f(1));
    let squares = &(&(&l(1) * &(&sq1 * &sq1)).scale_rational(&Rational::from(3))
        + &(&poly(&d1) * &(&l(1) * &(&sq2 * &sq2))))
        + &poly(&d2) * &(&l(1) * &(&f(1) * &f(1)));

    let target = &quadratic_form - &squares;
    let (keys, terms): (Vec<_>, Vec<_>) = ansatz().into_iter().unzip();
    let fit = find_total_derivative(&target, &terms)?;
    let boundary = keys
        .into_iter()
        .zip(fit.coefficients)
        .filter(|(_, v)| !v.is_zero())
        .collect();
    Ok(JordanDecomposition {
        c1: c1.clone(),
        c2: c2.clone(),
        d1,
        d2,
        boundary,
        residual: fit.residual,
    })
}
