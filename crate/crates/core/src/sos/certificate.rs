//! The certificate data model and its verifier.
//!
//! The verifier recomputes `Σ weight·witness²` from scratch and shares no
//! code with the constructions in the parent module.

use std::fmt;
use std::str::FromStr;

use num_traits::Signed;
use serde_json::{Map, Value};

use crate::algebra::{MPoly, Rational, Ring};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Ilyushechkin,
    SymmetricBasis,
    Pk,
    Rudin,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Ilyushechkin => "ilyushechkin",
            Kind::SymmetricBasis => "symmetric-basis",
            Kind::Pk => "pk",
            Kind::Rudin => "rudin",
        }
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            Kind::Ilyushechkin,
            Kind::SymmetricBasis,
            Kind::Pk,
            Kind::Rudin,
        ]
        .into_iter()
        .find(|k| k.name() == s)
        .ok_or_else(|| Error::Parse(format!("unknown certificate kind {s:?}")))
    }
}

/// What is being squared.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// A rational whose square enters the sum.
    Scalar(Rational),
    /// `|w|²` of a complex witness `w`, stored directly.
    ModulusSq(Rational),
    /// A polynomial whose square enters the sum.
    Poly(MPoly),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Target {
    Scalar(Rational),
    Poly(MPoly),
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Scalar(q) => write!(f, "{q}"),
            Target::Poly(p) => write!(f, "{p}"),
        }
    }
}

/// One summand `weight · witness²`; `index` records where it came from
/// (a minor's row and column sets, or a monomial's exponents).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub weight: Rational,
    pub witness: Witness,
    pub index: Vec<usize>,
}

/// The claim `Σ weight·witness² = target`.
#[derive(Clone, Debug, PartialEq)]
pub struct SosCertificate {
    pub kind: Kind,
    pub params: Map<String, Value>,
    pub target: Target,
    pub terms: Vec<Term>,
    pub convention: Map<String, Value>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid(String),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

/// Re-checks a certificate by exact expansion.
pub fn verify(cert: &SosCertificate) -> Verdict {
    for (i, t) in cert.terms.iter().enumerate() {
        if !t.weight.is_positive() {
            return Verdict::Invalid(format!("term {i} has non-positive weight {}", t.weight));
        }
        if let Witness::ModulusSq(m) = &t.witness {
            if m.is_negative() {
                return Verdict::Invalid(format!("term {i} has a negative modulus square"));
            }
        }
    }
    match &cert.target {
        Target::Scalar(target) => {
            let mut total = Rational::zero();
            for (i, t) in cert.terms.iter().enumerate() {
                let sq = match &t.witness {
                    Witness::Scalar(w) => w * w,
                    Witness::ModulusSq(m) => m.clone(),
                    Witness::Poly(_) => {
                        return Verdict::Invalid(format!(
                            "term {i} is a polynomial but the target is a number"
                        ));
                    }
                };
                total += &t.weight * sq;
            }
            if total == *target {
                Verdict::Valid
            } else {
                Verdict::Invalid(format!(
                    "weighted squares sum to {total}, target is {target}"
                ))
            }
        }
        Target::Poly(target) => {
            let mut total = MPoly::zero(target.arity());
            for (i, t) in cert.terms.iter().enumerate() {
                let Witness::Poly(w) = &t.witness else {
                    return Verdict::Invalid(format!(
                        "term {i} is a number but the target is a polynomial"
                    ));
                };
                if w.arity() != target.arity() {
                    return Verdict::Invalid(format!(
                        "term {i} has arity {}, target has {}",
                        w.arity(),
                        target.arity()
                    ));
                }
                total = &total + &(w * w).scale(&t.weight);
            }
            if total == *target {
                Verdict::Valid
            } else {
                Verdict::Invalid(format!(
                    "weighted squares sum to {total}, target is {target}"
                ))
            }
        }
    }
}
