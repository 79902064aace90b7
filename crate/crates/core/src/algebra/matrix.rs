use std::fmt;
use std::ops::{Index, IndexMut};

use super::{GaussRational, Ring};
use crate::error::{Error, Result};

/// Dense row-major matrix over a [`Ring`].
#[derive(Clone, PartialEq, Debug)]
pub struct Mat<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S> Mat<S> {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[S] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<T>(&self, f: impl FnMut(&S) -> T) -> Mat<T> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<S: Ring> Mat<S> {
    pub fn new(rows: usize, cols: usize, data: Vec<S>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Mat { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Mat::from_fn(n, n, |i, j| if i == j { S::one() } else { S::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    /// Builds from a list of equally long rows.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Mat::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn diag(entries: &[S]) -> Self {
        let n = entries.len();
        Mat::from_fn(n, n, |i, j| {
            if i == j {
                entries[i].clone()
            } else {
                S::zero()
            }
        })
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(S::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn mul(&self, rhs: &Mat<S>) -> Result<Mat<S>> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Mat::<S>::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].add(&a.mul(b));
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self * rhs` for operands whose shapes are known to agree.
    pub fn dot(&self, rhs: &Mat<S>) -> Mat<S> {
        self.mul(rhs).expect("shape mismatch in matrix product")
    }

    pub fn add(&self, rhs: &Mat<S>) -> Result<Mat<S>> {
        self.zip_with(rhs, S::add)
    }

    pub fn sub(&self, rhs: &Mat<S>) -> Result<Mat<S>> {
        self.zip_with(rhs, S::sub)
    }

    fn zip_with(&self, rhs: &Mat<S>, f: impl Fn(&S, &S) -> S) -> Result<Mat<S>> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::Dimension(format!(
                "shape {}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn scale(&self, s: &S) -> Mat<S> {
        self.map(|x| x.mul(s))
    }

    pub fn neg(&self) -> Mat<S> {
        self.map(S::neg)
    }

    /// `[self, rhs] = self·rhs − rhs·self`.
    pub fn commutator(&self, rhs: &Mat<S>) -> Mat<S> {
        self.dot(rhs)
            .sub(&rhs.dot(self))
            .expect("commutator of square matrices")
    }

    pub fn trace(&self) -> Result<S> {
        self.require_square()?;
        Ok((0..self.rows).fold(S::zero(), |acc, i| acc.add(&self[(i, i)])))
    }

    pub fn pow(&self, exp: u32) -> Result<Mat<S>> {
        self.require_square()?;
        let mut acc = Mat::identity(self.rows);
        for _ in 0..exp {
            acc = acc.dot(self);
        }
        Ok(acc)
    }

    /// Frobenius pairing `Σ self_ij · rhs_ij = Tr(self · rhsᵀ)`.
    pub fn frobenius(&self, rhs: &Mat<S>) -> S {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "frobenius shape mismatch"
        );
        self.data
            .iter()
            .zip(&rhs.data)
            .filter(|(a, b)| !a.is_zero() && !b.is_zero())
            .fold(S::zero(), |acc, (a, b)| acc.add(&a.mul(b)))
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Mat<S> {
        Mat::from_fn(rows.len(), cols.len(), |i, j| {
            self[(rows[i], cols[j])].clone()
        })
    }

    pub fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::Dimension(format!(
                "expected a square matrix, got {}x{}",
                self.rows, self.cols
            )))
        }
    }

    /// Determinant by Bareiss fraction-free elimination.
    ///
    /// Every intermediate entry is a minor of the input, so the divisions by
    /// the previous pivot are exact in any integral domain.
    pub fn det(&self) -> Result<S> {
        self.require_square()?;
        let n = self.rows;
        if n == 0 {
            return Ok(S::one());
        }
        let mut a = self.data.clone();
        let mut negate = false;
        let mut prev = S::one();
        for k in 0..n - 1 {
            let Some(p) = (k..n).find(|&r| !a[r * n + k].is_zero()) else {
                return Ok(S::zero());
            };
            if p != k {
                for j in 0..n {
                    a.swap(k * n + j, p * n + j);
                }
                negate = !negate;
            }
            let pivot = a[k * n + k].clone();
            for i in k + 1..n {
                let lead = a[i * n + k].clone();
                for j in k + 1..n {
                    let num = a[i * n + j].mul(&pivot).sub(&lead.mul(&a[k * n + j]));
                    a[i * n + j] = exact(&num, &prev);
                }
                a[i * n + k] = S::zero();
            }
            prev = pivot;
        }
        let d = a[n * n - 1].clone();
        Ok(if negate { d.neg() } else { d })
    }

    /// Rank by fraction-free row echelon reduction.
    pub fn rank(&self) -> usize {
        let (m, n) = (self.rows, self.cols);
        let mut a = self.data.clone();
        let mut prev = S::one();
        let mut rank = 0;
        for c in 0..n {
            if rank == m {
                break;
            }
            let Some(p) = (rank..m).find(|&r| !a[r * n + c].is_zero()) else {
                continue;
            };
            if p != rank {
                for j in 0..n {
                    a.swap(rank * n + j, p * n + j);
                }
            }
            let pivot = a[rank * n + c].clone();
            for i in rank + 1..m {
                let lead = a[i * n + c].clone();
                for j in c + 1..n {
                    let num = a[i * n + j].mul(&pivot).sub(&lead.mul(&a[rank * n + j]));
                    a[i * n + j] = exact(&num, &prev);
                }
                a[i * n + c] = S::zero();
            }
            prev = pivot;
            rank += 1;
        }
        rank
    }
}

fn exact<S: Ring>(num: &S, den: &S) -> S {
    num.exact_div(den)
        .unwrap_or_else(|| panic!("fraction-free step is not exact: {num:?} / {den:?}"))
}

impl Mat<GaussRational> {
    pub fn conj_transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square() && *self == self.conj_transpose()
    }

    /// Exact test of `Z·Z* = Z*·Z`.
    pub fn is_normal(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let adj = self.conj_transpose();
        self.dot(&adj) == adj.dot(self)
    }
}

impl<S> Index<(usize, usize)> for Mat<S> {
    type Output = S;
    fn index(&self, (i, j): (usize, usize)) -> &S {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i},{j}) out of bounds"
        );
        &self.data[i * self.cols + j]
    }
}

impl<S> IndexMut<(usize, usize)> for Mat<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i},{j}) out of bounds"
        );
        &mut self.data[i * self.cols + j]
    }
}

impl<S: fmt::Display> fmt::Display for Mat<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.data[i * self.cols..(i + 1) * self.cols]
                .iter()
                .map(|x| x.to_string())
                .collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
