//! Characteristic polynomials, resultants and the two classical routes to a
//! matrix discriminant (Sylvester resultant and power-trace Hankel Gram).

use super::{rat, Mat, Rational, Ring, UPoly};
use crate::error::{Error, Result};

/// Monic characteristic polynomial `det(tI − m)` by Faddeev–LeVerrier.
///
/// The only divisions are by the integers `1..=n`.
pub fn charpoly(m: &Mat<Rational>) -> Result<UPoly> {
    m.require_square()?;
    let n = m.rows();
    // coeffs[i] is the coefficient of t^i.
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut aux = Mat::<Rational>::zeros(n, n);
    for k in 1..=n {
        // aux_k = m·aux_{k-1} + c_{n-k+1}·I
        aux = m.dot(&aux);
        for i in 0..n {
            aux[(i, i)] += &coeffs[n - k + 1];
        }
        let trace = m.dot(&aux).trace()?;
        coeffs[n - k] = -trace / rat(k as i64);
    }
    Ok(UPoly::from_coeffs(coeffs))
}

/// `[Tr(m⁰), Tr(m¹), …, Tr(m^{count-1})]`, generic over the scalar ring.
pub fn power_traces<S: Ring>(m: &Mat<S>, count: usize) -> Result<Vec<S>> {
    m.require_square()?;
    let mut out = Vec::with_capacity(count);
    let mut power = Mat::<S>::identity(m.rows());
    for _ in 0..count {
        out.push(power.trace()?);
        power = power.dot(m);
    }
    Ok(out)
}

/// Sylvester matrix of `f` (degree m) and `g` (degree n): `n` shifted rows of
/// `f` followed by `m` shifted rows of `g`, coefficients in descending order.
pub fn sylvester_matrix(f: &UPoly, g: &UPoly) -> Result<Mat<Rational>> {
    let (Some(m), Some(n)) = (f.degree(), g.degree()) else {
        return Err(Error::Dimension(
            "sylvester matrix of the zero polynomial".into(),
        ));
    };
    let size = m + n;
    let mut out = Mat::<Rational>::zeros(size, size);
    for row in 0..n {
        for k in 0..=m {
            out[(row, row + k)] = f.coeff(m - k);
        }
    }
    for row in 0..m {
        for k in 0..=n {
            out[(n + row, row + k)] = g.coeff(n - k);
        }
    }
    Ok(out)
}

/// `Res(f, g)` as the determinant of the Sylvester matrix.
pub fn resultant_sylvester(f: &UPoly, g: &UPoly) -> Result<Rational> {
    match (f.degree(), g.degree()) {
        (None, _) | (_, None) => Ok(Rational::zero()),
        (Some(0), Some(n)) => Ok(num_traits::pow(f.coeff(0), n)),
        (Some(m), Some(0)) => Ok(num_traits::pow(g.coeff(0), m)),
        _ => sylvester_matrix(f, g)?.det(),
    }
}

/// `Res(f, g)` by the Euclidean remainder sequence:
/// `Res(f, g) = (−1)^{mn} · lc(g)^{m − deg r} · Res(g, r)` with `r = f mod g`.
pub fn resultant_euclid(f: &UPoly, g: &UPoly) -> Rational {
    let (mut f, mut g) = (f.clone(), g.clone());
    let mut acc = Rational::one();
    loop {
        let (Some(m), Some(n)) = (f.degree(), g.degree()) else {
            return Rational::zero();
        };
        if n == 0 {
            return acc * num_traits::pow(g.coeff(0), m);
        }
        if m == 0 {
            return acc * num_traits::pow(f.coeff(0), n);
        }
        let (_, r) = f.div_rem(&g);
        let Some(k) = r.degree() else {
            return Rational::zero();
        };
        if (m * n) % 2 == 1 {
            acc = -acc;
        }
        acc *= num_traits::pow(g.leading().unwrap().clone(), m - k);
        f = g;
        g = r;
    }
}

/// `(−1)^{n(n−1)/2} · Res(p, p′)` for monic `p` of degree `n ≥ 1`; for a
/// real-rooted `p` this is `∏_{i<j} (λ_i − λ_j)² ≥ 0`.
pub fn poly_discriminant(p: &UPoly) -> Result<Rational> {
    let Some(n) = p.degree() else {
        return Err(Error::Dimension(
            "discriminant of the zero polynomial".into(),
        ));
    };
    if n == 0 {
        return Err(Error::Dimension(
            "discriminant needs degree at least 1".into(),
        ));
    }
    if !p.is_monic() {
        return Err(Error::NotMonic(p.leading().unwrap().to_string()));
    }
    if n == 1 {
        return Ok(Rational::one());
    }
    let res = resultant_sylvester(p, &p.derivative())?;
    Ok(if (n * (n - 1) / 2) % 2 == 1 {
        -res
    } else {
        res
    })
}

/// `det H` with `H_ij = Tr(m^{i+j})`, `0 ≤ i, j < n`.
///
/// `H = VᵀV` for the Vandermonde matrix of the eigenvalues, so this is the
/// discriminant `∏_{i<j}(λ_i − λ_j)²` over any field containing the entries.
pub fn hankel_power_trace_det<S: Ring>(m: &Mat<S>) -> Result<S> {
    m.require_square()?;
    let n = m.rows();
    if n == 0 {
        return Ok(S::one());
    }
    let traces = power_traces(m, 2 * n - 1)?;
    Mat::from_fn(n, n, |i, j| traces[i + j].clone()).det()
}
