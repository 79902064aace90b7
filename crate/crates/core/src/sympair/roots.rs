//! Restricted root data and the root-factored characteristic polynomials.

use serde::Serialize;

use crate::algebra::{rat, Rational, Ring, UPoly};
use crate::error::{Error, Result};

use super::{PairData, PairId};

/// A positive restricted root: an integer linear form on the Cartan
/// coordinates, with the dimension of its root space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Root {
    pub form: Vec<i64>,
    pub multiplicity: usize,
}

impl Root {
    pub fn eval(&self, x: &[Rational]) -> Rational {
        self.form
            .iter()
            .zip(x)
            .fold(Rational::zero(), |acc, (&c, xi)| acc + rat(c) * xi)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootDatum {
    pub positive_roots: Vec<Root>,
    /// Dimension of the centralizer of 𝔞 in 𝔨.
    pub centralizer_dim: usize,
    /// Degrees of the basic invariants minus one, ascending.
    pub exponents: Vec<u32>,
    pub weyl_order: u64,
    /// True when the multiplicities were read off a characteristic polynomial
    /// rather than taken from the classical tables.
    pub derived: bool,
}

impl RootDatum {
    /// `Σ μ(λ)` over the positive roots.
    pub fn multiplicity_sum(&self) -> usize {
        self.positive_roots.iter().map(|r| r.multiplicity).sum()
    }

    /// Number of reflections in the Weyl group, `Σ (d_j − 1)`.
    pub fn reflections(&self) -> u32 {
        self.exponents.iter().sum()
    }
}

/// Degrees of the basic invariants, ascending.
pub fn generator_degrees(id: PairId) -> Vec<u32> {
    let mut d: Vec<u32> = match id {
        PairId::GlnR(n) | PairId::GlnC(n) => (1..=n as u32).collect(),
        PairId::SOpq(_, 1) => vec![2],
        PairId::SOpq(p, q) if p == q => {
            let mut d: Vec<u32> = (1..p as u32).map(|j| 2 * j).collect();
            d.push(p as u32);
            d
        }
        PairId::SOpq(_, q) => (1..=q as u32).map(|j| 2 * j).collect(),
    };
    d.sort_unstable();
    d
}

fn unit_form(l: usize, entries: &[(usize, i64)]) -> Vec<i64> {
    let mut f = vec![0; l];
    for &(i, c) in entries {
        f[i] += c;
    }
    f
}

/// Candidate root forms: `e_i − e_j` (and for `so(p, q)` also `e_i + e_j`
/// and `e_i`), in a fixed order.
fn candidate_forms(id: PairId) -> Vec<Vec<i64>> {
    let l = id.rank();
    let mut out = Vec::new();
    for i in 0..l {
        for j in i + 1..l {
            out.push(unit_form(l, &[(i, 1), (j, -1)]));
            if matches!(id, PairId::SOpq(..)) {
                out.push(unit_form(l, &[(i, 1), (j, 1)]));
            }
        }
    }
    if matches!(id, PairId::SOpq(..)) {
        out.extend((0..l).map(|i| unit_form(l, &[(i, 1)])));
    }
    out
}

fn assemble(id: PairId, roots: Vec<Root>, derived: bool) -> RootDatum {
    let degrees = generator_degrees(id);
    let roots: Vec<Root> = roots.into_iter().filter(|r| r.multiplicity > 0).collect();
    let sum: usize = roots.iter().map(|r| r.multiplicity).sum();
    RootDatum {
        positive_roots: roots,
        centralizer_dim: id.dims().1 - sum,
        exponents: degrees.iter().map(|d| d - 1).collect(),
        weyl_order: degrees.iter().map(|&d| d as u64).product(),
        derived,
    }
}

/// The classical root data, available for `gl(n, ℝ)`, `gl(n, ℂ)`,
/// `so(p, 1)` and `so(p, p)`.
pub fn tabulated_root_datum(id: PairId) -> Option<RootDatum> {
    let mult = |form: &Vec<i64>| -> usize {
        match id {
            PairId::GlnR(_) => 1,
            PairId::GlnC(_) => 2,
            PairId::SOpq(p, q) => {
                if form.iter().filter(|&&c| c != 0).count() == 1 {
                    p - q
                } else {
                    1
                }
            }
        }
    };
    match id {
        PairId::SOpq(p, q) if q != 1 && q != p => None,
        _ => {
            let roots = candidate_forms(id)
                .into_iter()
                .map(|form| Root {
                    multiplicity: mult(&form),
                    form,
                })
                .collect();
            Some(assemble(id, roots, false))
        }
    }
}

/// Reads the multiplicities off `det(t − f(x))` at the Cartan point
/// `x_i = 3^{i+1}`, where every candidate `λ(x)²` is distinct and nonzero.
pub fn derive_root_datum(pair: &PairData) -> Result<RootDatum> {
    let id = pair.id();
    let l = id.rank();
    let point: Vec<Rational> = (0..l).map(|i| rat(3i64.pow(i as u32 + 1))).collect();
    let x = pair.cartan_element(&point)?;
    let cf = pair.charpolys(&x)?.cf;
    let mut roots = Vec::new();
    for form in candidate_forms(id) {
        let root = Root {
            form,
            multiplicity: 0,
        };
        let v = root.eval(&point);
        let multiplicity = cf.root_multiplicity(&(&v * &v)).unwrap_or(0);
        roots.push(Root {
            multiplicity,
            ..root
        });
    }
    let datum = assemble(id, roots, true);
    let (r, _) = id.dims();
    if cf.t_valuation() != Some(l) || datum.multiplicity_sum() != r - l {
        return Err(Error::Precondition(format!(
            "characteristic polynomial {cf} at {point:?} does not split over the candidate roots"
        )));
    }
    Ok(datum)
}

/// The root datum of a pair: tabulated where available, derived otherwise.
pub fn root_datum(pair: &PairData) -> Result<RootDatum> {
    match tabulated_root_datum(pair.id()) {
        Some(d) => Ok(d),
        None => derive_root_datum(pair),
    }
}

/// `(cf, cg, cad)` assembled from linear factors:
/// `t^l ∏ (t − λ²)^μ`, `t^m ∏ (t − λ²)^μ` and `t^{m+l} ∏ (t² − λ²)^μ`.
pub fn root_factored_charpoly(datum: &RootDatum, l: usize, x: &[Rational]) -> Result<[UPoly; 3]> {
    if x.len() != l {
        return Err(Error::Dimension(format!(
            "{} Cartan coordinates for rank {l}",
            x.len()
        )));
    }
    let mut product = UPoly::one();
    let mut ad_product = UPoly::one();
    for root in &datum.positive_roots {
        let v = root.eval(x);
        let sq = &v * &v;
        product = &product * &UPoly::linear_factor(sq.clone()).pow(root.multiplicity as u32);
        let pair = &UPoly::linear_factor(v.clone()) * &UPoly::linear_factor(-v);
        ad_product = &ad_product * &pair.pow(root.multiplicity as u32);
    }
    let m = datum.centralizer_dim;
    Ok([product.shift(l), product.shift(m), ad_product.shift(m + l)])
}

/// `∏ λ(x)^{2μ(λ)}`.
pub fn root_product(datum: &RootDatum, x: &[Rational]) -> Rational {
    datum
        .positive_roots
        .iter()
        .fold(Rational::one(), |acc, root| {
            let v = root.eval(x);
            acc * Ring::pow(&(&v * &v), root.multiplicity as u32)
        })
}
