//! Sparse multivariate polynomials over ℚ.
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors, so iteration is in
//! lexicographic monomial order (x₁ > x₂ > …) and the leading term is the
//! last entry. Zero coefficients are never stored.
//!
//! The arity is fixed when a polynomial is built. Arity-0 polynomials are
//! constants and are promoted when combined with a polynomial of larger arity;
//! that is what lets [`Ring::one`] and [`Ring::zero`] exist without knowing
//! the number of variables.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use super::{Rational, Ring};

#[derive(Clone, Debug)]
pub struct MPoly {
    arity: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl PartialEq for MPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.arity == other.arity {
            return self.terms == other.terms;
        }
        if self.arity != 0 && other.arity != 0 {
            return false;
        }
        let arity = self.arity.max(other.arity);
        self.promote(arity).terms == other.promote(arity).terms
    }
}

impl Eq for MPoly {}

impl MPoly {
    pub fn zero(arity: usize) -> Self {
        MPoly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(arity: usize, c: Rational) -> Self {
        MPoly::monomial(arity, vec![0; arity], c)
    }

    pub fn one(arity: usize) -> Self {
        MPoly::constant(arity, Rational::one())
    }

    /// The variable `x_index` (0-based).
    pub fn var(arity: usize, index: usize) -> Self {
        assert!(
            index < arity,
            "variable {index} out of range for arity {arity}"
        );
        let mut exps = vec![0; arity];
        exps[index] = 1;
        MPoly::monomial(arity, exps, Rational::one())
    }

    pub fn monomial(arity: usize, exps: Vec<u32>, c: Rational) -> Self {
        assert_eq!(exps.len(), arity, "exponent vector length must equal arity");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        MPoly { arity, terms }
    }

    /// Collects `(exponents, coefficient)` pairs, summing duplicates.
    pub fn from_terms(arity: usize, terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Self {
        let mut p = MPoly::zero(arity);
        for (e, c) in terms {
            assert_eq!(e.len(), arity, "exponent vector length must equal arity");
            p.add_term(e, c);
        }
        p
    }

    /// The linear form `Σ coeffs[i]·x_i`.
    pub fn linear_form(coeffs: &[i64]) -> Self {
        let arity = coeffs.len();
        MPoly::from_terms(
            arity,
            coeffs.iter().enumerate().map(|(i, &c)| {
                let mut e = vec![0; arity];
                e[i] = 1;
                (e, super::rat(c))
            }),
        )
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub fn leading_term(&self) -> Option<(&Vec<u32>, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return MPoly::zero(self.arity);
        }
        MPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(MPoly::one(self.arity), |acc, _| &acc * self)
    }

    /// ∂/∂x_index.
    pub fn partial(&self, index: usize) -> Self {
        assert!(
            index < self.arity,
            "variable {index} out of range for arity {}",
            self.arity
        );
        let mut out = MPoly::zero(self.arity);
        for (e, c) in &self.terms {
            if e[index] == 0 {
                continue;
            }
            let mut d = e.clone();
            d[index] -= 1;
            out.add_term(d, c * Rational::from_integer(e[index].into()));
        }
        out
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.arity, "point dimension must equal arity");
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter().zip(point).fold(c.clone(), |acc, (&k, x)| {
                    acc * num_traits::pow(x.clone(), k as usize)
                })
            })
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// If `self` is `c·other` for one rational `c`, returns `c`.
    pub fn ratio_to(&self, other: &MPoly) -> Option<Rational> {
        let arity = self.combine_arity(other);
        let (lhs, rhs) = (self.promote(arity), other.promote(arity));
        let (e, c) = rhs.leading_term()?;
        let factor = lhs.coeff(e) / c;
        (lhs == rhs.scale(&factor)).then_some(factor)
    }

    fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn promote(&self, arity: usize) -> MPoly {
        if arity == self.arity {
            return self.clone();
        }
        assert!(
            self.arity == 0,
            "cannot combine polynomials of arity {} and {arity}",
            self.arity
        );
        MPoly {
            arity,
            terms: self
                .terms
                .values()
                .map(|c| (vec![0; arity], c.clone()))
                .collect(),
        }
    }

    fn combine_arity(&self, rhs: &MPoly) -> usize {
        self.arity.max(rhs.arity)
    }

    /// Exact division in lex order; `None` when `divisor` does not divide.
    fn div_exact(&self, divisor: &MPoly) -> Option<MPoly> {
        let arity = self.combine_arity(divisor);
        let divisor = divisor.promote(arity);
        let (de, dc) = divisor.leading_term()?;
        let (de, dc) = (de.clone(), dc.clone());
        let mut rem = self.promote(arity);
        let mut quot = MPoly::zero(arity);
        while let Some((re, rc)) = rem.leading_term() {
            if re.iter().zip(&de).any(|(a, b)| a < b) {
                return None;
            }
            let qe: Vec<u32> = re.iter().zip(&de).map(|(a, b)| a - b).collect();
            let term = MPoly::monomial(arity, qe, rc / &dc);
            rem = &rem - &(&term * &divisor);
            quot = &quot + &term;
        }
        Some(quot)
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{k}", i + 1)
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{abs}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let arity = self.combine_arity(rhs);
        let mut out = self.promote(arity);
        for (e, c) in rhs.promote(arity).terms {
            out.add_term(e, c);
        }
        out
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let arity = self.combine_arity(rhs);
        let mut out = self.promote(arity);
        for (e, c) in rhs.promote(arity).terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        let arity = self.combine_arity(rhs);
        let (a, b) = (self.promote(arity), rhs.promote(arity));
        let mut out = MPoly::zero(arity);
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                #[allow(clippy::suspicious_arithmetic_impl)]
                let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Ring for MPoly {
    fn zero() -> Self {
        MPoly::zero(0)
    }
    fn one() -> Self {
        MPoly::one(0)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
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
        self.div_exact(divisor)
    }
    fn from_rational(q: &Rational) -> Self {
        MPoly::constant(0, q.clone())
    }
}
