use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::poly::{Monomial, MultiPoly};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Highest derivative of `f` representable in the ring.
pub const MAX_ORDER: usize = 5;

/// Name of the independent variable.
pub const LAMBDA: &str = "lambda";

const F_NAMES: [&str; MAX_ORDER + 1] = ["f0", "f1", "f2", "f3", "f4", "f5"];

fn derivative_order(name: &str) -> Option<usize> {
    F_NAMES.iter().position(|f| *f == name)
}

fn is_ring_variable(name: &str) -> bool {
    name == LAMBDA || derivative_order(name).is_some()
}

/// Element of `P[lambda, f0, ..., f5]`, where `fi` is the i-th derivative of an
/// abstract function of `lambda` and `P` is the ring of polynomials in any
/// other named variables (treated as constants by `D`).
///
/// Written in text as an ordinary polynomial, e.g. `lambda^2*f2*f1 - 3*k*f0`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct DiffExpr(MultiPoly);

impl DiffExpr {
    pub fn zero() -> Self {
        DiffExpr(MultiPoly::zero())
    }

    pub fn lambda() -> Self {
        DiffExpr(MultiPoly::var(LAMBDA))
    }

    /// The i-th derivative `f^(i)`.
    pub fn f(order: usize) -> Result<Self> {
        F_NAMES
            .get(order)
            .map(|name| DiffExpr(MultiPoly::var(name)))
            .ok_or(Error::OrderOverflow {
                order,
                max: MAX_ORDER,
            })
    }

    /// `lambda^power * f^(i) * f^(j)`.
    pub fn quadratic(power: u32, i: usize, j: usize) -> Result<Self> {
        Ok(&(&Self::lambda_pow(power) * &Self::f(i)?) * &Self::f(j)?)
    }

    pub fn lambda_pow(power: u32) -> Self {
        DiffExpr(MultiPoly::var(LAMBDA).pow(power))
    }

    pub fn constant(c: impl Into<MultiPoly>) -> Self {
        let c = c.into();
        assert!(
            c.variables().iter().all(|v| !is_ring_variable(v)),
            "constant contains a ring variable"
        );
        DiffExpr(c)
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        DiffExpr(p)
    }

    pub fn as_poly(&self) -> &MultiPoly {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Highest `i` such that `f^(i)` occurs, if any.
    pub fn max_order(&self) -> Option<usize> {
        self.0
            .variables()
            .iter()
            .filter_map(|v| derivative_order(v))
            .max()
    }

    pub fn scale(&self, c: &MultiPoly) -> DiffExpr {
        DiffExpr(&self.0 * c)
    }

    pub fn scale_rational(&self, c: &Rational) -> DiffExpr {
        DiffExpr(self.0.scale(c))
    }

    /// Formal total derivative: `D(lambda) = 1`, `D(f^(i)) = f^(i+1)`,
    /// parameters are constants, products follow the Leibniz rule.
    pub fn total_derivative(&self) -> Result<DiffExpr> {
        if let Some(order) = self.max_order().filter(|&o| o >= MAX_ORDER) {
            return Err(Error::OrderOverflow {
                order: order + 1,
                max: MAX_ORDER,
            });
        }
        let mut out = MultiPoly::zero();
        for name in self.0.variables() {
            let inner = if name == LAMBDA {
                MultiPoly::one()
            } else if let Some(i) = derivative_order(&name) {
                MultiPoly::var(F_NAMES[i + 1])
            } else {
                continue;
            };
            out = &out + &(&self.0.partial_derivative(&name) * &inner);
        }
        Ok(DiffExpr(out))
    }

    /// Coefficients (in the parameter ring) of each monomial over
    /// `lambda, f0..f5`.
    pub fn coefficients(&self) -> std::collections::BTreeMap<Monomial, MultiPoly> {
        self.0.collect_by(is_ring_variable)
    }
}

/// Free-function form of [`DiffExpr::total_derivative`].
pub fn diff_total_derivative(e: &DiffExpr) -> Result<DiffExpr> {
    e.total_derivative()
}

/// `lhs - D(bracket) - remainder`.
pub fn identity_residual(lhs: &DiffExpr, bracket: &DiffExpr, remainder: &DiffExpr) -> Result<DiffExpr> {
    Ok(&(lhs - &bracket.total_derivative()?) - remainder)
}

/// True iff `lhs = D(bracket) + remainder` holds identically. A bracket whose
/// derivative would exceed the order cap counts as a failed identity.
pub fn verify_diff_identity(lhs: &DiffExpr, bracket: &DiffExpr, remainder: &DiffExpr) -> bool {
    identity_residual(lhs, bracket, remainder).is_ok_and(|r| r.is_zero())
}

/// Result of matching `target` against `D(sum c_a * ansatz_a)`.
#[derive(Clone, Debug)]
pub struct TotalDerivativeFit {
    pub coefficients: Vec<MultiPoly>,
    /// `target - D(sum c_a * ansatz_a)`; zero iff `target` is an exact
    /// derivative within the span of the ansatz.
    pub residual: DiffExpr,
}

impl TotalDerivativeFit {
    pub fn bracket(&self, ansatz: &[DiffExpr]) -> DiffExpr {
        ansatz
            .iter()
            .zip(&self.coefficients)
            .map(|(a, c)| a.scale(c))
            .fold(DiffExpr::zero(), |acc, t| &acc + &t)
    }
}

/// Solves for parameter-polynomial coefficients `c_a` with
/// `D(sum c_a * ansatz_a) = target`, by exact Gaussian elimination over the
/// monomials of the ring. The ansatz elements must be free of parameters so
/// that the system matrix is rational. When no exact solution exists the
/// returned fit carries the nonzero residual of a pivot-consistent solution.
pub fn find_total_derivative(target: &DiffExpr, ansatz: &[DiffExpr]) -> Result<TotalDerivativeFit> {
    let derivs = ansatz
        .iter()
        .map(DiffExpr::total_derivative)
        .collect::<Result<Vec<_>>>()?;

    let mut monomials: Vec<Monomial> = target.coefficients().into_keys().collect();
    for d in &derivs {
        monomials.extend(d.coefficients().into_keys());
    }
    monomials.sort();
    monomials.dedup();

    let columns: Vec<_> = derivs
        .iter()
        .map(|d| {
            let coeffs = d.coefficients();
            monomials
                .iter()
                .map(|m| {
                    coeffs.get(m).map_or_else(Rational::zero, |p| {
                        p.as_constant()
                            .expect("ansatz must not contain parameters")
                    })
                })
                .collect::<Vec<_>>()
        })
        .collect();
    let target_coeffs = target.coefficients();

    let n_rows = monomials.len();
    let n_cols = ansatz.len();
    let mut a: Vec<Vec<Rational>> = (0..n_rows)
        .map(|r| (0..n_cols).map(|c| columns[c][r].clone()).collect())
        .collect();
    let mut rhs: Vec<MultiPoly> = monomials
        .iter()
        .map(|m| target_coeffs.get(m).cloned().unwrap_or_default())
        .collect();

    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n_cols {
        let Some(p) = (row..n_rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        rhs.swap(row, p);
        let inv = a[row][col].recip();
        for c in col..n_cols {
            a[row][c] = &a[row][c] * &inv;
        }
        rhs[row] = rhs[row].scale(&inv);
        for r in 0..n_rows {
            if r != row && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in col..n_cols {
                    let delta = &factor * &a[row][c];
                    a[r][c] -= &delta;
                }
                rhs[r] = &rhs[r] - &rhs[row].scale(&factor);
            }
        }
        pivots.push((row, col));
        row += 1;
    }

    let mut coefficients = vec![MultiPoly::zero(); n_cols];
    for (r, c) in pivots {
        coefficients[c] = rhs[r].clone();
    }
    let mut fit = TotalDerivativeFit {
        coefficients,
        residual: DiffExpr::zero(),
    };
    fit.residual = target - &fit.bracket(ansatz).total_derivative()?;
    Ok(fit)
}

impl fmt::Display for DiffExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for DiffExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DiffExpr({})", self.0)
    }
}

impl Serialize for DiffExpr {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromStr for DiffExpr {
    type Err = Error;

    /// Same syntax as [`MultiPoly`]; `lambda` and `f0`..`f5` are the ring
    /// variables, any other identifier is a parameter.
    fn from_str(s: &str) -> Result<Self> {
        Ok(DiffExpr(s.parse()?))
    }
}

/// Parses a differential expression literal; panics on malformed input.
pub fn dexpr(src: &str) -> DiffExpr {
    src.parse()
        .unwrap_or_else(|e| panic!("bad differential expression {src:?}: {e}"))
}

impl Add<&DiffExpr> for &DiffExpr {
    type Output = DiffExpr;
    fn add(self, rhs: &DiffExpr) -> DiffExpr {
        DiffExpr(&self.0 + &rhs.0)
    }
}

impl Sub<&DiffExpr> for &DiffExpr {
    type Output = DiffExpr;
    fn sub(self, rhs: &DiffExpr) -> DiffExpr {
        DiffExpr(&self.0 - &rhs.0)
    }
}

impl Mul<&DiffExpr> for &DiffExpr {
    type Output = DiffExpr;
    fn mul(self, rhs: &DiffExpr) -> DiffExpr {
        DiffExpr(&self.0 * &rhs.0)
    }
}

impl Neg for &DiffExpr {
    type Output = DiffExpr;
    fn neg(self) -> DiffExpr {
        DiffExpr(-&self.0)
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<DiffExpr> for DiffExpr {
            type Output = DiffExpr;
            fn $method(self, rhs: DiffExpr) -> DiffExpr {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&DiffExpr> for DiffExpr {
            type Output = DiffExpr;
            fn $method(self, rhs: &DiffExpr) -> DiffExpr {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<DiffExpr> for &DiffExpr {
            type Output = DiffExpr;
            fn $method(self, rhs: DiffExpr) -> DiffExpr {
                $trait::$method(self, &rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for DiffExpr {
    type Output = DiffExpr;
    fn neg(self) -> DiffExpr {
        -&self
    }
}
