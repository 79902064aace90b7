//! Exterior powers through minors and Gram determinants.
//!
//! The squared norm of `v₁∧…∧v_k` under a diagonal inner product is the
//! determinant of the Gram matrix of the `v_i`, and by Cauchy–Binet also the
//! weighted sum of squared `k×k` minors of the matrix with columns `v_i`.
//! Both routes are provided so they can check each other.

use itertools::Itertools;
use rayon::prelude::*;

use crate::algebra::{Mat, Rational, Ring};
use crate::error::{Error, Result};

/// Strictly increasing positions `i₁ < … < i_k`, ordered lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WedgeIndex(Vec<usize>);

impl WedgeIndex {
    pub fn new(indices: Vec<usize>, ambient: usize) -> Result<Self> {
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Dimension(format!(
                "wedge index {indices:?} is not strictly increasing"
            )));
        }
        if indices.last().is_some_and(|&i| i >= ambient) {
            return Err(Error::Dimension(format!(
                "wedge index {indices:?} exceeds dimension {ambient}"
            )));
        }
        Ok(WedgeIndex(indices))
    }

    /// All `k`-subsets of `0..ambient` in lexicographic order.
    pub fn all(ambient: usize, k: usize) -> impl Iterator<Item = WedgeIndex> + Clone {
        (0..ambient).combinations(k).map(WedgeIndex)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

/// `‖v₁∧…∧v_k‖²` for the inner product `⟨u, v⟩ = Σ_j w_j u_j v_j`.
///
/// More vectors than dimensions gives a degenerate wedge and returns zero.
pub fn wedge_norm_sq(vectors: &[Vec<Rational>], weights: &[Rational]) -> Result<Rational> {
    let d = weights.len();
    if let Some(v) = vectors.iter().find(|v| v.len() != d) {
        return Err(Error::Dimension(format!(
            "vector of length {} in a space of dimension {d}",
            v.len()
        )));
    }
    if vectors.len() > d {
        return Ok(Rational::zero());
    }
    let gram = Mat::from_fn(vectors.len(), vectors.len(), |a, b| {
        weights
            .iter()
            .zip(&vectors[a])
            .zip(&vectors[b])
            .fold(Rational::zero(), |acc, ((w, x), y)| acc + w * x * y)
    });
    gram.det()
}

fn check_order<S>(m: &Mat<S>, k: usize) -> Result<()> {
    if k == 0 || k > m.rows().min(m.cols()) {
        return Err(Error::Dimension(format!(
            "minor order {k} out of range for a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

fn minor<S: Ring>(m: &Mat<S>, rows: &WedgeIndex, cols: &WedgeIndex) -> S {
    m.submatrix(rows.as_slice(), cols.as_slice())
        .det()
        .expect("square submatrix")
}

/// Streams every `k×k` minor as `(rows, cols, value)`, lexicographic in
/// `(rows, cols)`.
pub fn k_minors<S: Ring>(
    m: &Mat<S>,
    k: usize,
) -> Result<impl Iterator<Item = (WedgeIndex, WedgeIndex, S)> + '_> {
    check_order(m, k)?;
    let cols = WedgeIndex::all(m.cols(), k);
    Ok(WedgeIndex::all(m.rows(), k)
        .cartesian_product(cols)
        .map(move |(r, c)| {
            let v = minor(m, &r, &c);
            (r, c, v)
        }))
}

fn product(weights: &[Rational], index: &WedgeIndex) -> Rational {
    index
        .as_slice()
        .iter()
        .fold(Rational::one(), |acc, &i| acc * &weights[i])
}

fn check_weights(len: usize, weights: &[Rational], what: &str) -> Result<()> {
    if weights.len() != len {
        return Err(Error::Dimension(format!(
            "{} {what} weights for {len} {what}s",
            weights.len()
        )));
    }
    Ok(())
}

/// `Σ_{I,J} (∏_{i∈I} w_i)·det(m[I,J])²` over all `k`-minors.
pub fn weighted_minor_square_sum(
    m: &Mat<Rational>,
    row_weights: &[Rational],
    k: usize,
) -> Result<Rational> {
    let ones = vec![Rational::one(); m.cols()];
    metric_minor_square_sum(m, row_weights, &ones, k)
}

/// `Σ_{I,J} (∏_{i∈I} r_i / ∏_{j∈J} c_j)·det(m[I,J])²`.
///
/// This is `e_k` of the spectrum of `C⁻¹·mᵀ·R·m`, i.e. the `k`-th
/// characteristic coefficient of `mᵀ R m` measured in the column metric `C`.
pub fn metric_minor_square_sum(
    m: &Mat<Rational>,
    row_weights: &[Rational],
    col_weights: &[Rational],
    k: usize,
) -> Result<Rational> {
    check_order(m, k)?;
    check_weights(m.rows(), row_weights, "row")?;
    check_weights(m.cols(), col_weights, "column")?;
    let mut total = Rational::zero();
    for (r, c, v) in k_minors(m, k)? {
        if !v.is_zero() {
            total += product(row_weights, &r) / product(col_weights, &c) * &v * &v;
        }
    }
    Ok(total)
}

/// Parallel [`metric_minor_square_sum`]: the row subsets are partitioned by
/// their leading index and the partial sums are added in index order.
pub fn par_metric_minor_square_sum(
    m: &Mat<Rational>,
    row_weights: &[Rational],
    col_weights: &[Rational],
    k: usize,
) -> Result<Rational> {
    check_order(m, k)?;
    check_weights(m.rows(), row_weights, "row")?;
    check_weights(m.cols(), col_weights, "column")?;
    let partials: Vec<Rational> = (0..=m.rows() - k)
        .into_par_iter()
        .map(|lead| {
            let mut sum = Rational::zero();
            for tail in (lead + 1..m.rows()).combinations(k - 1) {
                let mut rows = vec![lead];
                rows.extend(tail);
                let rows = WedgeIndex(rows);
                let rw = product(row_weights, &rows);
                for cols in WedgeIndex::all(m.cols(), k) {
                    let v = minor(m, &rows, &cols);
                    if !v.is_zero() {
                        sum += &rw / product(col_weights, &cols) * &v * &v;
                    }
                }
            }
            sum
        })
        .collect();
    Ok(partials.into_iter().fold(Rational::zero(), |a, b| a + b))
}

/// The Cauchy–Binet side: `Σ_J ‖∧ columns J‖²` with the row weights as the
/// inner product.
pub fn column_wedge_sum(m: &Mat<Rational>, row_weights: &[Rational], k: usize) -> Result<Rational> {
    check_order(m, k)?;
    check_weights(m.rows(), row_weights, "row")?;
    let columns: Vec<Vec<Rational>> = (0..m.cols())
        .map(|j| (0..m.rows()).map(|i| m[(i, j)].clone()).collect())
        .collect();
    let mut total = Rational::zero();
    for cols in WedgeIndex::all(m.cols(), k) {
        let vs: Vec<Vec<Rational>> = cols
            .as_slice()
            .iter()
            .map(|&j| columns[j].clone())
            .collect();
        total += wedge_norm_sq(&vs, row_weights)?;
    }
    Ok(total)
}
