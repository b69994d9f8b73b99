//! Slow, independent reference values for the numeric code.
//!
//! `ln Gamma` is computed in fixed point with 60 decimal digits: the argument
//! is shifted to at least 40, the Stirling series is summed with 30 exact
//! Bernoulli numbers, `pi` comes from Machin's formula and logarithms from
//! the `atanh` series. Nothing here shares code with the library.
#![allow(dead_code)]

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

const DIGITS: u32 = 60;

fn scale() -> BigInt {
    BigInt::from(10).pow(DIGITS)
}

fn to_fixed(r: &BigRational) -> BigInt {
    (r.numer() * scale()) / r.denom()
}

fn fixed_to_f64(x: &BigInt) -> f64 {
    BigRational::new(x.clone(), scale()).to_f64().unwrap()
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// `atanh(u)` for rational `|u| <= 1/3`, summed in fixed point.
fn atanh(u: &BigRational) -> BigInt {
    let u = to_fixed(u);
    let u2 = &u * &u / scale();
    let mut power = u;
    let mut sum = BigInt::zero();
    let mut k = 0i64;
    while !power.is_zero() {
        sum += &power / BigInt::from(2 * k + 1);
        power = &power * &u2 / scale();
        k += 1;
    }
    sum
}

/// `atan(1/n)` for integer `n >= 2`.
fn atan_inv(n: i64) -> BigInt {
    let mut sum = BigInt::zero();
    let mut k = 0u32;
    loop {
        let den = BigInt::from(2 * k as i64 + 1) * BigInt::from(n).pow(2 * k + 1);
        let term = scale() / den;
        if term.is_zero() {
            return sum;
        }
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        k += 1;
    }
}

pub fn pi_fixed() -> BigInt {
    BigInt::from(16) * atan_inv(5) - BigInt::from(4) * atan_inv(239)
}

fn ln2_fixed() -> BigInt {
    static CELL: OnceLock<BigInt> = OnceLock::new();
    CELL.get_or_init(|| BigInt::from(2) * atanh(&ratio(1, 3))).clone()
}

/// `ln y` for rational `y > 0`.
fn ln_fixed(y: &BigRational) -> BigInt {
    assert!(y.is_positive());
    // y = 2^e t with t in [2/3, 4/3]
    let mut e: i64 = y.numer().bits() as i64 - y.denom().bits() as i64;
    let two = BigRational::from_integer(2.into());
    let mut t = y / two.pow(e as i32);
    while t > ratio(4, 3) {
        t /= &two;
        e += 1;
    }
    while t < ratio(2, 3) {
        t *= &two;
        e -= 1;
    }
    let u = (&t - BigRational::one()) / (&t + BigRational::one());
    BigInt::from(e) * ln2_fixed() + BigInt::from(2) * atanh(&u)
}

/// `B_0 .. B_max` exactly.
fn bernoulli(max: usize) -> Vec<BigRational> {
    let mut b = vec![BigRational::one()];
    for m in 1..=max {
        let mut acc = BigRational::zero();
        let mut binom = BigInt::one();
        for (k, bk) in b.iter().enumerate() {
            acc += BigRational::from_integer(binom.clone()) * bk;
            binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
        }
        b.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
    }
    b
}

/// `ln Gamma(x)` for finite `x > 0`, to far better than double precision.
pub fn oracle_log_gamma(x: f64) -> f64 {
    assert!(x > 0.0 && x.is_finite());
    let x = BigRational::from_float(x).unwrap();
    let forty = BigRational::from_integer(40.into());
    let mut z = x.clone();
    let mut product = BigRational::one();
    while z < forty {
        product *= &z;
        z += BigRational::one();
    }
    let half = ratio(1, 2);
    let ln_z = ln_fixed(&z);
    let ln_2pi = ln_2pi_fixed();
    let mut acc = to_fixed(&(&z - &half)) * &ln_z / scale() - to_fixed(&z) + ln_2pi / BigInt::from(2);
    let inv_z = to_fixed(&z.recip());
    let inv_z2 = &inv_z * &inv_z / scale();
    let mut power = inv_z;
    for coeff in stirling_coeffs() {
        acc += to_fixed(coeff) * &power / scale();
        power = &power * &inv_z2 / scale();
    }
    acc -= ln_fixed(&product);
    fixed_to_f64(&acc)
}

fn ln_2pi_fixed() -> BigInt {
    static CELL: OnceLock<BigInt> = OnceLock::new();
    CELL.get_or_init(|| ln_fixed(&BigRational::new(BigInt::from(2) * pi_fixed(), scale())))
        .clone()
}

/// `B_{2j} / (2j (2j - 1))` for `j = 1..=30`.
fn stirling_coeffs() -> &'static [BigRational] {
    static CELL: OnceLock<Vec<BigRational>> = OnceLock::new();
    CELL.get_or_init(|| {
        let b = bernoulli(60);
        (1..=30usize)
            .map(|j| &b[2 * j] / BigRational::from_integer(BigInt::from(2 * j * (2 * j - 1))))
            .collect()
    })
}

/// `Gamma(x)` via the oracle.
pub fn oracle_gamma(x: f64) -> f64 {
    oracle_log_gamma(x).exp()
}

/// Seeded generator for reproducible random points.
pub fn rng(seed: u64) -> rand::rngs::StdRng {
    use rand::SeedableRng;
    rand::rngs::StdRng::seed_from_u64(seed)
}

/// `|a - b| / max(1, |b|)`.
pub fn scaled_err(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1.0)
}
