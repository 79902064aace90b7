//! Sum-of-squares certificates for discriminants, for the characteristic
//! coefficients `P_k`, and for powers of `Σ x_i²`.
//!
//! Every construction returns an [`SosCertificate`] whose target is computed
//! independently of the terms, so [`verify`] is a real check.

mod certificate;
pub mod json;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::algebra::{
    binomial, hankel_power_trace_det, rat, rational_sqrt, GaussRational, MPoly, Mat, Rational, Ring,
};
use crate::error::{Error, Result};
use crate::exterior::WedgeIndex;
use crate::sympair::{PElement, PairData};

pub use certificate::{verify, Kind, SosCertificate, Target, Term, Verdict, Witness};

/// The `n² × n` matrix whose column `k` is `z^k` flattened row-major, so row
/// `i·n + j` holds the `(i, j)` entries of `I, z, …, z^{n−1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ZStar<S> {
    pub matrix: Mat<S>,
    pub source: Mat<S>,
}

pub fn zstar<S: Ring>(z: &Mat<S>) -> Result<ZStar<S>> {
    z.require_square()?;
    let n = z.rows();
    if n < 2 {
        return Err(Error::Dimension(
            "Z_* needs a matrix of size at least 2".into(),
        ));
    }
    let mut matrix = Mat::zeros(n * n, n);
    let mut power = Mat::<S>::identity(n);
    for k in 0..n {
        for (e, v) in power.entries().iter().enumerate() {
            matrix[(e, k)] = v.clone();
        }
        power = power.dot(z);
    }
    Ok(ZStar {
        matrix,
        source: z.clone(),
    })
}

/// Maximal minors of a tall matrix, one per row subset, in lexicographic
/// order. Computed in parallel; the collected order is the sequential one.
fn maximal_minors<S: Ring + Send + Sync>(m: &Mat<S>) -> Vec<(WedgeIndex, S)> {
    let cols: Vec<usize> = (0..m.cols()).collect();
    let subsets: Vec<WedgeIndex> = WedgeIndex::all(m.rows(), m.cols()).collect();
    subsets
        .into_par_iter()
        .map(|rows| {
            let v = m.submatrix(rows.as_slice(), &cols).det().expect("square");
            (rows, v)
        })
        .collect()
}

fn object(pairs: &[(&str, Value)]) -> Map<String, Value> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

fn matrix_json<S>(m: &Mat<S>, show: impl Fn(&S) -> Value) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(&show).collect()))
            .collect(),
    )
}

fn zstar_convention() -> Map<String, Value> {
    object(&[
        ("rows", json!("entry (i, j) of Z^k sits in row i*n + j")),
        ("columns", json!("k = 0..n-1")),
        ("index", json!("row subset of the maximal minor")),
        ("order", json!("lexicographic")),
    ])
}

/// `|D(z)| = Σ_α M_α²` over the maximal minors of `Z_*`, for a real normal
/// matrix `z`. The target is `|det H|` with `H` the power-trace Hankel matrix.
pub fn ilyushechkin_certificate(z: &Mat<Rational>) -> Result<SosCertificate> {
    z.require_square()?;
    let zt = z.transpose();
    if z.dot(&zt) != zt.dot(z) {
        return Err(Error::Precondition("matrix is not normal".into()));
    }
    let star = zstar(z)?;
    let d = hankel_power_trace_det(z)?;
    let terms = maximal_minors(&star.matrix)
        .into_iter()
        .map(|(rows, v)| Term {
            weight: rat(1),
            witness: Witness::Scalar(v),
            index: rows.into_vec(),
        })
        .collect();
    Ok(SosCertificate {
        kind: Kind::Ilyushechkin,
        params: object(&[
            ("n", json!(z.rows())),
            (
                "matrix",
                matrix_json(z, |q| json!(crate::algebra::format_rational(q))),
            ),
        ]),
        target: Target::Scalar(num_traits::Signed::abs(&d)),
        terms,
        convention: zstar_convention(),
    })
}

/// The complex form: witnesses are stored as `|M_α|²` and the target is
/// `|D(z)|`, which must be rational (it is for hermitian and for diagonal
/// Gaussian-rational `z`).
pub fn ilyushechkin_certificate_gauss(z: &Mat<GaussRational>) -> Result<SosCertificate> {
    z.require_square()?;
    if !z.is_normal() {
        return Err(Error::Precondition("matrix is not normal".into()));
    }
    let star = zstar(z)?;
    let d = hankel_power_trace_det(z)?;
    let abs = rational_sqrt(&d.norm_sq())
        .ok_or_else(|| Error::Precondition(format!("|D| = |{d}| is irrational")))?;
    let terms = maximal_minors(&star.matrix)
        .into_iter()
        .map(|(rows, v)| Term {
            weight: rat(1),
            witness: Witness::ModulusSq(v.norm_sq()),
            index: rows.into_vec(),
        })
        .collect();
    let mut convention = zstar_convention();
    convention.insert(
        "witness".into(),
        json!("modulus square of the complex minor"),
    );
    Ok(SosCertificate {
        kind: Kind::Ilyushechkin,
        params: object(&[
            ("n", json!(z.rows())),
            (
                "matrix",
                matrix_json(z, |g| {
                    json!([
                        crate::algebra::format_rational(&g.re),
                        crate::algebra::format_rational(&g.im)
                    ])
                }),
            ),
        ]),
        target: Target::Scalar(abs),
        terms,
        convention,
    })
}

/// Number of maximal minors over the symmetric basis: `C(n(n+1)/2, n)`.
pub fn symmetric_minor_count(n: usize) -> u64 {
    binomial(n * (n + 1) / 2, n)
}

/// `D(x)` as a weighted sum of squared maximal minors of the matrix of
/// coordinates of `I, x, …, x^{n−1}` in the basis `{E_ii, E_ij + E_ji}`.
/// A row set's weight is the product of its basis vectors' squared norms.
pub fn symmetric_basis_certificate(x: &Mat<Rational>) -> Result<SosCertificate> {
    x.require_square()?;
    if !x.is_symmetric() {
        return Err(Error::Precondition("matrix is not symmetric".into()));
    }
    let n = x.rows();
    if n < 2 {
        return Err(Error::Dimension("need a matrix of size at least 2".into()));
    }
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let mut coords = Mat::zeros(slots.len(), n);
    let mut power = Mat::<Rational>::identity(n);
    for k in 0..n {
        for (row, &(i, j)) in slots.iter().enumerate() {
            coords[(row, k)] = power[(i, j)].clone();
        }
        power = power.dot(x);
    }
    let slot_weight = |row: usize| if slots[row].0 == slots[row].1 { 1 } else { 2 };
    let terms = maximal_minors(&coords)
        .into_iter()
        .map(|(rows, v)| {
            let weight = rows
                .as_slice()
                .iter()
                .fold(1i64, |acc, &r| acc * slot_weight(r));
            Term {
                weight: rat(weight),
                witness: Witness::Scalar(v),
                index: rows.into_vec(),
            }
        })
        .collect();
    Ok(SosCertificate {
        kind: Kind::SymmetricBasis,
        params: object(&[
            ("n", json!(n)),
            (
                "matrix",
                matrix_json(x, |q| json!(crate::algebra::format_rational(q))),
            ),
        ]),
        target: Target::Scalar(hankel_power_trace_det(x)?),
        terms,
        convention: object(&[
            (
                "basis",
                json!("E_ii (weight 1) and E_ij + E_ji (weight 2), i <= j, row-major"),
            ),
            ("columns", json!("coordinates of x^k, k = 0..n-1")),
            ("index", json!("row subset of the maximal minor")),
            ("order", json!("lexicographic")),
        ]),
    })
}

/// `P_k(x) = Σ (∏ w_𝔨(I) / ∏ w_𝔭(J)) · det A(x)[I, J]²` over the `k`-minors
/// of `A(x)`; the target is read off the characteristic polynomial of `f(x)`.
pub fn pk_certificate(pair: &PairData, x: &PElement, k: usize) -> Result<SosCertificate> {
    let top = pair.r() - pair.l();
    if k == 0 || k > top {
        return Err(Error::Dimension(format!(
            "k = {k} outside 1..={top} for {}",
            pair.id()
        )));
    }
    let a = pair.operators(x)?.a;
    let target = pair.charpolys(x)?.p(k);
    let (kw, pw) = (pair.k_weights(), pair.p_weights());
    let row_sets: Vec<WedgeIndex> = WedgeIndex::all(a.rows(), k).collect();
    let terms: Vec<Vec<Term>> = row_sets
        .into_par_iter()
        .map(|rows| {
            let rw = rows
                .as_slice()
                .iter()
                .fold(Rational::one(), |acc, &i| acc * &kw[i]);
            WedgeIndex::all(a.cols(), k)
                .map(|cols| {
                    let v = a
                        .submatrix(rows.as_slice(), cols.as_slice())
                        .det()
                        .expect("square");
                    let cw = cols
                        .as_slice()
                        .iter()
                        .fold(Rational::one(), |acc, &j| acc * &pw[j]);
                    let mut index = rows.as_slice().to_vec();
                    index.extend_from_slice(cols.as_slice());
                    Term {
                        weight: &rw / cw,
                        witness: Witness::Scalar(v),
                        index,
                    }
                })
                .collect()
        })
        .collect();
    let fmt = crate::algebra::format_rational;
    Ok(SosCertificate {
        kind: Kind::Pk,
        params: object(&[
            ("pair", json!(pair.id().to_string())),
            ("k", json!(k)),
            ("x", Value::Array(x.coords().iter().map(|c| json!(fmt(c))).collect())),
        ]),
        target: Target::Scalar(target),
        terms: terms.into_iter().flatten().collect(),
        convention: object(&[
            ("matrix", json!("A(x): rows are k-basis coordinates, columns p-basis coordinates")),
            ("weight", json!("product of k-basis weights of the rows over product of p-basis weights of the columns")),
            ("index", json!("row subset followed by column subset")),
            ("order", json!("lexicographic in (rows, columns)")),
        ]),
    })
}

/// Exponent vectors with `|α| = k` in `n` variables, in descending
/// lexicographic order.
fn compositions(k: usize, n: usize) -> Vec<Vec<u32>> {
    if n == 1 {
        return vec![vec![k as u32]];
    }
    let mut out = Vec::new();
    for first in (0..=k).rev() {
        for mut rest in compositions(k - first, n - 1) {
            rest.insert(0, first as u32);
            out.push(rest);
        }
    }
    out
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, i| acc * i)
}

fn sum_of_squares(n: usize) -> MPoly {
    (0..n).fold(MPoly::zero(n), |acc, i| &acc + &MPoly::var(n, i).pow(2))
}

/// `(Σ x_i²)^k = Σ_{|α|=k} (k!/α!) (x^α)²`.
pub fn rudin_certificate(k: usize, n: usize) -> Result<SosCertificate> {
    if k < 1 || n < 2 {
        return Err(Error::Dimension(format!(
            "need k >= 1 and n >= 2, got k = {k}, n = {n}"
        )));
    }
    let kf = factorial(k);
    let terms = compositions(k, n)
        .into_iter()
        .map(|alpha| {
            let den = alpha
                .iter()
                .fold(BigInt::from(1), |acc, &a| acc * factorial(a as usize));
            Term {
                weight: Rational::new(kf.clone(), den),
                witness: Witness::Poly(MPoly::monomial(n, alpha.clone(), rat(1))),
                index: alpha.iter().map(|&a| a as usize).collect(),
            }
        })
        .collect();
    Ok(SosCertificate {
        kind: Kind::Rudin,
        params: object(&[
            ("k", json!(k)),
            ("n", json!(n)),
            ("arity", json!(n)),
            ("lifts", json!(0)),
        ]),
        target: Target::Poly(sum_of_squares(n).pow(k as u32)),
        terms,
        convention: object(&[
            ("witness", json!("monomial x^alpha")),
            ("weight", json!("multinomial k!/alpha!")),
            ("index", json!("exponent vector alpha")),
            ("order", json!("descending lexicographic in alpha")),
        ]),
    })
}

/// `dim P(k, n) = C(k + n − 1, n − 1)`.
pub fn dim_p(k: usize, n: usize) -> u64 {
    binomial(k + n - 1, n - 1)
}

/// `dim H(k, n) = (2k + n − 2)(n + k − 3)! / ((n − 2)! k!)`, for `n ≥ 2`,
/// `k ≥ 1`.
pub fn dim_h(k: usize, n: usize) -> u64 {
    assert!(n >= 2 && k >= 1, "dim_h needs n >= 2 and k >= 1");
    let num = BigInt::from(2 * k + n - 2) * factorial(n + k - 3);
    let den = factorial(n - 2) * factorial(k);
    u64::try_from(num / den).expect("dimension fits in u64")
}

/// Multiplies every witness by `Σ x_i²`, so the target gains a factor
/// `(Σ x_i²)²`.
pub fn lift(cert: &SosCertificate) -> Result<SosCertificate> {
    let Target::Poly(target) = &cert.target else {
        return Err(Error::Precondition(
            "only polynomial certificates can be lifted".into(),
        ));
    };
    let q = sum_of_squares(target.arity());
    let terms = cert
        .terms
        .iter()
        .map(|t| match &t.witness {
            Witness::Poly(w) => Ok(Term {
                witness: Witness::Poly(w * &q),
                ..t.clone()
            }),
            _ => Err(Error::Precondition(
                "only polynomial witnesses can be lifted".into(),
            )),
        })
        .collect::<Result<_>>()?;
    let mut params = cert.params.clone();
    let lifts = params.get("lifts").and_then(Value::as_u64).unwrap_or(0);
    params.insert("lifts".into(), json!(lifts + 1));
    Ok(SosCertificate {
        kind: cert.kind,
        params,
        target: Target::Poly(&(target * &q) * &q),
        terms,
        convention: cert.convention.clone(),
    })
}
