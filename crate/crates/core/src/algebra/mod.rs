//! Exact scalars, polynomials and dense matrices.
//!
//! Everything downstream computes over one of the commutative rings defined
//! here: [`Rational`], [`GaussRational`], [`UPoly`] or [`MPoly`]. The
//! [`Ring`] trait is deliberately small; it is what the generic determinant
//! and minor kernels need and nothing more.

mod charpoly;
mod gauss;
mod matrix;
mod mpoly;
mod upoly;

pub use charpoly::{
    charpoly, hankel_power_trace_det, poly_discriminant, power_traces, resultant_euclid,
    resultant_sylvester, sylvester_matrix,
};
pub use gauss::GaussRational;
pub use matrix::Mat;
pub use mpoly::MPoly;
pub use upoly::UPoly;

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};

/// Arbitrary precision rational number, always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Commutative ring with exact (possibly partial) division.
///
/// `exact_div` must return `Some(q)` with `q * d == self` whenever such a `q`
/// exists; fraction-free elimination relies on that.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn exact_div(&self, divisor: &Self) -> Option<Self>;
    fn from_rational(q: &Rational) -> Self;

    fn is_one(&self) -> bool
    where
        Self: Sized,
    {
        *self == Self::one()
    }

    fn from_int(n: i64) -> Self
    where
        Self: Sized,
    {
        Self::from_rational(&rat(n))
    }

    fn pow(&self, exp: u32) -> Self
    where
        Self: Sized,
    {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if num_traits::Zero::is_zero(divisor) {
            None
        } else {
            Some(self / divisor)
        }
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
}

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den` as a rational. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Canonical `"p/q"` text form used in every JSON document.
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Parses `"p/q"` or `"p"`. Decimal points and exponents are rejected: all
/// inputs are exact.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::Parse(format!("not an exact rational: {text:?}"));
    let int = |s: &str| -> Result<BigInt> {
        let s = s.trim();
        if s.is_empty()
            || !s
                .trim_start_matches(['-', '+'])
                .chars()
                .all(|c| c.is_ascii_digit())
        {
            return Err(bad());
        }
        s.parse::<BigInt>().map_err(|_| bad())
    };
    match text.split_once('/') {
        Some((n, d)) => {
            let d = int(d)?;
            if num_traits::Zero::is_zero(&d) {
                return Err(Error::Parse(format!("zero denominator in {text:?}")));
            }
            Ok(Rational::new(int(n)?, d))
        }
        None => Ok(Rational::from_integer(int(text)?)),
    }
}

/// Exact square root of a non-negative rational, if it is a perfect square.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let root = |n: &BigInt| {
        let r = n.sqrt();
        (&r * &r == *n).then_some(r)
    };
    Some(Rational::new(root(q.numer())?, root(q.denom())?))
}

/// Binomial coefficient as a `u64`. Panics on overflow, which no caller in
/// this crate can reach.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial coefficient overflows u64")
}
