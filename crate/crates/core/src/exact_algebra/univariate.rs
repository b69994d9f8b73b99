use std::fmt;

use super::poly::MultiPoly;
use super::rational::Rational;
use crate::error::{domain, Result};

/// Dense univariate polynomial with rational coefficients, lowest degree
/// first. Used for exact real-root isolation.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    /// Converts a polynomial in the single variable `var`.
    pub fn from_multi(p: &MultiPoly, var: &str) -> Result<Self> {
        let extra: Vec<_> = p.variables().into_iter().filter(|v| v != var).collect();
        if !extra.is_empty() {
            return Err(domain(format!("polynomial is not univariate in {var}: also uses {extra:?}")));
        }
        let mut coeffs = vec![Rational::zero(); p.degree_in(var) as usize + 1];
        for (m, c) in p.terms() {
            coeffs[m.exponent(var) as usize] += c;
        }
        Ok(UniPoly::new(coeffs))
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Rational::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64())
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from(i as i64))
                .collect(),
        )
    }

    /// Remainder of Euclidean division by a nonzero divisor.
    pub fn rem(&self, divisor: &UniPoly) -> UniPoly {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let mut r = self.coeffs.clone();
        let dl = divisor.coeffs.len();
        let lead = divisor.coeffs[dl - 1].recip();
        while r.len() >= dl {
            let factor = r.last().expect("nonempty") * &lead;
            let shift = r.len() - dl;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                let delta = &factor * c;
                r[shift + i] -= &delta;
            }
            r.pop();
            while r.last().is_some_and(Rational::is_zero) {
                r.pop();
            }
        }
        UniPoly::new(r)
    }

    /// Sturm sequence `p, p', -rem(p, p'), ...`.
    pub fn sturm_sequence(&self) -> Vec<UniPoly> {
        let mut seq = vec![self.clone(), self.derivative()];
        while !seq.last().expect("nonempty").is_zero() {
            let n = seq.len();
            let r = seq[n - 2].rem(&seq[n - 1]);
            seq.push(UniPoly::new(r.coeffs.iter().map(|c| -c).collect()));
        }
        seq.pop();
        seq
    }

    fn sign_changes(seq: &[UniPoly], x: &Rational) -> usize {
        let signs: Vec<i32> = seq
            .iter()
            .map(|p| p.eval(x).signum())
            .filter(|&s| s != 0)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    pub fn count_roots(&self, a: &Rational, b: &Rational) -> usize {
        let seq = self.sturm_sequence();
        Self::sign_changes(&seq, a).saturating_sub(Self::sign_changes(&seq, b))
    }

    /// Cauchy bound: every real root lies in `[-B, B]`.
    pub fn root_bound(&self) -> Rational {
        let lead = self.coeffs.last().expect("nonzero polynomial").abs();
        let max = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| (c / &lead).abs())
            .max()
            .unwrap_or_else(Rational::zero);
        Rational::one() + max
    }

    /// Rational interval `(lo, hi]` of width at most `width` containing the
    /// largest real root, or `None` if there are no real roots.
    pub fn largest_real_root(&self, width: &Rational) -> Option<(Rational, Rational)> {
        if self.degree() == 0 {
            return None;
        }
        let seq = self.sturm_sequence();
        let count = |a: &Rational, b: &Rational| {
            Self::sign_changes(&seq, a).saturating_sub(Self::sign_changes(&seq, b))
        };
        let bound = self.root_bound();
        let (mut lo, mut hi) = (-&bound, bound);
        if count(&lo, &hi) == 0 {
            return None;
        }
        let two = Rational::from(2);
        while &hi - &lo > *width {
            let mid = (&lo + &hi) / two.clone();
            if count(&mid, &hi) > 0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Some((lo, hi))
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.coeffs.iter().enumerate().map(|(i, c)| {
            MultiPoly::term(
                c.clone(),
                super::poly::Monomial::from_powers([("x", i as u32)]),
            )
        });
        write!(f, "{}", terms.sum::<MultiPoly>())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::rational::q;

    #[test]
    fn counts_roots_of_a_product() {
        // (x-1)(x-2)(x+3)
        let p = UniPoly::from_integers(&[6, -7, 0, 1]);
        assert_eq!(p.count_roots(&q(-10, 1), &q(10, 1)), 3);
        assert_eq!(p.count_roots(&q(0, 1), &q(3, 2)), 1);
        assert_eq!(p.count_roots(&q(1, 1), &q(2, 1)), 1);
    }

    #[test]
    fn isolates_sqrt_two() {
        let p = UniPoly::from_integers(&[-2, 0, 1]);
        let (lo, hi) = p.largest_real_root(&q(1, 1_000_000)).unwrap();
        assert!(lo.to_f64() < 2f64.sqrt() && 2f64.sqrt() <= hi.to_f64());
    }

    #[test]
    fn no_real_roots() {
        assert!(UniPoly::from_integers(&[1, 0, 1]).largest_real_root(&q(1, 100)).is_none());
    }
}
