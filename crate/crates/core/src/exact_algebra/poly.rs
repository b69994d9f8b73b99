use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::rational::Rational;
use crate::error::Error;

/// Product of variables raised to positive powers, kept sorted by name so
/// that equal monomials compare equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<(String, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(name: &str) -> Self {
        Monomial(vec![(name.to_owned(), 1)])
    }

    pub fn from_powers<'a>(powers: impl IntoIterator<Item = (&'a str, u32)>) -> Self {
        let mut m = Monomial::one();
        for (name, e) in powers {
            m = m.mul(&Monomial(vec![(name.to_owned(), e)]));
        }
        m
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn exponent(&self, name: &str) -> u32 {
        self.0
            .iter()
            .find(|(v, _)| v == name)
            .map_or(0, |(_, e)| *e)
    }

    pub fn powers(&self) -> impl Iterator<Item = (&str, u32)> {
        self.0.iter().map(|(v, e)| (v.as_str(), *e))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (a, b) = (&self.0[i], &other.0[j]);
            match a.0.cmp(&b.0) {
                std::cmp::Ordering::Less => {
                    out.push(a.clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b.clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a.0.clone(), a.1 + b.1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        out.retain(|(_, e)| *e > 0);
        Monomial(out)
    }

    /// Removes one factor of `name`; returns the multiplicity it had.
    fn differentiate(&self, name: &str) -> Option<(u32, Monomial)> {
        let e = self.exponent(name);
        if e == 0 {
            return None;
        }
        let rest = self
            .0
            .iter()
            .filter_map(|(v, k)| match (v == name, *k) {
                (true, 1) => None,
                (true, k) => Some((v.clone(), k - 1)),
                (false, k) => Some((v.clone(), k)),
            })
            .collect();
        Some((e, Monomial(rest)))
    }

    /// Splits into the part over variables accepted by `keep` and the rest.
    pub fn split(&self, keep: impl Fn(&str) -> bool) -> (Monomial, Monomial) {
        let (a, b): (Vec<_>, Vec<_>) = self.0.iter().cloned().partition(|(v, _)| keep(v));
        (Monomial(a), Monomial(b))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse multivariate polynomial with exact rational coefficients over
/// named variables. No stored coefficient is ever zero, so structural
/// equality is polynomial equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(Rational::one())
    }

    pub fn constant(c: impl Into<Rational>) -> Self {
        MultiPoly::term(c.into(), Monomial::one())
    }

    pub fn var(name: &str) -> Self {
        MultiPoly::term(Rational::one(), Monomial::var(name))
    }

    pub fn term(coefficient: Rational, monomial: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !coefficient.is_zero() {
            terms.insert(monomial, coefficient);
        }
        MultiPoly { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = MultiPoly::zero();
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    fn add_term(&mut self, monomial: Monomial, coefficient: &Rational) {
        if coefficient.is_zero() {
            return;
        }
        match self.terms.entry(monomial) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coefficient.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coefficient;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, monomial: &Monomial) -> Rational {
        self.terms.get(monomial).cloned().unwrap_or_else(Rational::zero)
    }

    /// The constant value, if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn variables(&self) -> BTreeSet<String> {
        self.terms
            .keys()
            .flat_map(|m| m.powers().map(|(v, _)| v.to_owned()))
            .collect()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, name: &str) -> u32 {
        self.terms.keys().map(|m| m.exponent(name)).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, exponent: u32) -> MultiPoly {
        (0..exponent).fold(MultiPoly::one(), |acc, _| &acc * self)
    }

    /// Exact evaluation; every variable of `self` must be assigned.
    pub fn eval(&self, assignment: &BTreeMap<String, Rational>) -> Result<Rational, Error> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut value = c.clone();
            for (v, e) in m.powers() {
                let x = assignment
                    .get(v)
                    .ok_or_else(|| Error::MissingVariable(v.to_owned()))?;
                value *= &x.pow(e as i32);
            }
            total += &value;
        }
        Ok(total)
    }

    /// Convenience wrapper around [`MultiPoly::eval`] for literal assignments.
    pub fn eval_at(&self, assignment: &[(&str, Rational)]) -> Result<Rational, Error> {
        let map = assignment
            .iter()
            .map(|(v, x)| ((*v).to_owned(), x.clone()))
            .collect();
        self.eval(&map)
    }

    /// Replaces `name` by `value` everywhere.
    pub fn substitute(&self, name: &str, value: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(name);
            let (_, rest) = m.split(|v| v == name);
            let base = MultiPoly::term(c.clone(), rest);
            out = &out + &(&base * &value.pow(e));
        }
        out
    }

    pub fn partial_derivative(&self, name: &str) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            if let Some((e, rest)) = m.differentiate(name) {
                out.add_term(rest, &(c * Rational::from(e as i64)));
            }
        }
        out
    }

    /// Groups terms by their monomial over the variables accepted by `keep`;
    /// each group's coefficient is a polynomial in the remaining variables.
    pub fn collect_by(&self, keep: impl Fn(&str) -> bool) -> BTreeMap<Monomial, MultiPoly> {
        let mut out: BTreeMap<Monomial, MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (kept, rest) = m.split(&keep);
            out.entry(kept).or_default().add_term(rest, c);
        }
        out.retain(|_, p| !p.is_zero());
        out
    }

    fn display_order(&self) -> Vec<(&Monomial, &Rational)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            b.degree()
                .cmp(&a.degree())
                .then_with(|| graded_lex_tiebreak(a, b))
        });
        terms
    }
}

/// Among monomials of equal degree, larger powers of alphabetically earlier
/// variables come first.
fn graded_lex_tiebreak(a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
    let names: BTreeSet<&str> = a.powers().chain(b.powers()).map(|(v, _)| v).collect();
    names
        .into_iter()
        .map(|v| b.exponent(v).cmp(&a.exponent(v)))
        .find(|o| o.is_ne())
        .unwrap_or(std::cmp::Ordering::Equal)
}

/// True iff `a - b` is the zero polynomial.
pub fn poly_equal(a: &MultiPoly, b: &MultiPoly) -> bool {
    (a - b).is_zero()
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.display_order().into_iter().enumerate() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{m}")?;
            } else if magnitude.is_integer() {
                write!(f, "{magnitude}*{m}")?;
            } else {
                write!(f, "({magnitude})*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl From<Rational> for MultiPoly {
    fn from(c: Rational) -> Self {
        MultiPoly::constant(c)
    }
}

impl From<i64> for MultiPoly {
    fn from(c: i64) -> Self {
        MultiPoly::constant(c)
    }
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), &-c);
        }
        out
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&Rational::from(-1))
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                $trait::$method(self, &rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl std::iter::Sum for MultiPoly {
    fn sum<I: Iterator<Item = MultiPoly>>(iter: I) -> MultiPoly {
        iter.fold(MultiPoly::zero(), |acc, p| &acc + &p)
    }
}

impl FromStr for MultiPoly {
    type Err = Error;

    /// Parses expressions such as `3*(k+1)*(k-m-3)^2 - 5/2*lambda`.
    /// Division is only allowed by constants.
    fn from_str(s: &str) -> Result<Self, Error> {
        let mut parser = Parser {
            src: s.as_bytes(),
            pos: 0,
        };
        let p = parser.expr()?;
        parser.skip_ws();
        if parser.pos != parser.src.len() {
            return Err(parser.error("unexpected trailing input"));
        }
        Ok(p)
    }
}

/// Parses a polynomial literal; panics on malformed input. Intended for
/// hard-coded closed forms.
pub fn poly(src: &str) -> MultiPoly {
    src.parse()
        .unwrap_or_else(|e| panic!("bad polynomial literal {src:?}: {e}"))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse(format!(
            "{msg} at byte {} of {:?}",
            self.pos,
            String::from_utf8_lossy(self.src)
        ))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<MultiPoly, Error> {
        let mut acc = self.product()?;
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.product()?;
            acc = if op == b'+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<MultiPoly, Error> {
        let mut acc = self.unary()?;
        while let Some(op @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let rhs = self.unary()?;
            if op == b'*' {
                acc = &acc * &rhs;
            } else {
                let c = rhs
                    .as_constant()
                    .filter(|c| !c.is_zero())
                    .ok_or_else(|| self.error("division by a non-constant or zero"))?;
                acc = acc.scale(&c.recip());
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MultiPoly, Error> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MultiPoly, Error> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("");
            let e: u32 = digits
                .parse()
                .map_err(|_| self.error("expected a non-negative integer exponent"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly, Error> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() || c == b'.' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_digit() || self.src[self.pos] == b'.')
                {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("");
                let value: Rational = text.parse()?;
                Ok(MultiPoly::constant(value))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("");
                Ok(MultiPoly::var(name))
            }
            _ => Err(self.error("expected a number, variable or '('")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::rational::q;

    #[test]
    fn cancellation_and_like_terms() {
        assert_eq!(poly("(k+m) + (k-m)"), poly("2*k"));
        assert_eq!(poly("k^2") + poly("3*k^2"), poly("4*k^2"));
        let p = poly("k^3 - 2*m + 1/3");
        assert_eq!(&p + &MultiPoly::zero(), p);
        assert_eq!(&p * &MultiPoly::one(), p);
    }

    #[test]
    fn binomial_product() {
        assert_eq!(poly("(k+1)*(k+3)"), poly("k^2 + 4*k + 3"));
    }

    #[test]
    fn evaluation() {
        let a2 = poly("3*(k+1)*(k+3)*(k-m-1)*(k-m-3)");
        assert_eq!(a2.eval_at(&[("k", q(0, 1)), ("m", q(1, 1))]).unwrap(), q(72, 1));
        assert_eq!(poly("k^2").eval_at(&[("k", q(3, 2))]).unwrap(), q(9, 4));
        let err = poly("k*m").eval_at(&[("k", q(1, 1))]).unwrap_err();
        assert!(matches!(err, Error::MissingVariable(ref v) if v == "m"));
    }

    #[test]
    fn substitution_hits_root() {
        let a2 = poly("3*(k+1)*(k+3)*(k-m-1)*(k-m-3)");
        assert!(a2.substitute("k", &poly("m+1")).is_zero());
        assert!(a2.substitute("k", &poly("m+3")).is_zero());
    }

    #[test]
    fn equality_is_exact() {
        assert!(poly_equal(&poly("(k+1)^2"), &poly("k^2+2*k+1")));
        assert!(!poly_equal(&poly("k"), &poly("m")));
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(poly("25 + 12*m - m^2 + 10*m*k - 10*k^2").to_string(), "-10*k^2 + 10*k*m - m^2 + 12*m + 25");
        assert_eq!(poly("k/2 - 3").to_string(), "(1/2)*k - 3");
        assert_eq!(MultiPoly::zero().to_string(), "0");
    }

    #[test]
    fn derivative_and_collect() {
        let p = poly("3*x^2*y + y^3");
        assert_eq!(p.partial_derivative("x"), poly("6*x*y"));
        let groups = poly("a*x + b*x + a*y").collect_by(|v| v == "x" || v == "y");
        assert_eq!(groups[&Monomial::var("x")], poly("a + b"));
        assert_eq!(groups[&Monomial::var("y")], poly("a"));
    }

    #[test]
    fn parse_errors() {
        assert!("k/m".parse::<MultiPoly>().is_err());
        assert!("(k+1".parse::<MultiPoly>().is_err());
        assert!("k^-1".parse::<MultiPoly>().is_err());
        assert!("k ++".parse::<MultiPoly>().is_err());
    }
}
