//! Exact arithmetic: rationals, sparse multivariate polynomials, and the
//! differential-polynomial ring used for integration-by-parts identities.

pub mod diff;
pub mod poly;
pub mod rational;
pub mod univariate;

pub use diff::{diff_total_derivative, find_total_derivative, verify_diff_identity, DiffExpr};
pub use poly::{poly, poly_equal, Monomial, MultiPoly};
pub use rational::{q, Rational};
pub use univariate::UniPoly;

use std::collections::BTreeMap;

use crate::error::Result;

pub fn poly_add(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    a + b
}

pub fn poly_mul(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    a * b
}

pub fn poly_eval(p: &MultiPoly, assignment: &BTreeMap<String, Rational>) -> Result<Rational> {
    p.eval(assignment)
}
