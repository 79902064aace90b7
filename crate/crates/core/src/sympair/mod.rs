//! The four families of symmetric pairs, realized by explicit matrix bases.
//!
//! A pair is identified by a [`PairId`] and built into [`PairData`], which
//! holds orthogonal bases of 𝔭 and 𝔨 with their squared norms. Elements of
//! 𝔭 are coordinate vectors in that basis ([`PElement`]); the first `l`
//! basis vectors always span the Cartan subspace 𝔞.
//!
//! For `x ∈ 𝔭` the operators are `A(x) = ad x : 𝔭 → 𝔨`,
//! `B(x) = ad x : 𝔨 → 𝔭`, `f = B·A` on 𝔭 and `g = A·B` on 𝔨.

mod basis;
mod roots;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::algebra::{charpoly, rat, GaussRational, Mat, Rational, Ring, UPoly};
use crate::error::{Error, Result};

pub use roots::{
    derive_root_datum, generator_degrees, root_factored_charpoly, root_product,
    tabulated_root_datum, Root, RootDatum,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PairId {
    /// `(gl(n, ℝ), so(n))`: 𝔭 is the real symmetric matrices.
    GlnR(usize),
    /// `(gl(n, ℂ), u(n))`: 𝔭 is the hermitian matrices.
    GlnC(usize),
    /// `(so(p, q), so(p) × so(q))`: 𝔭 is the `p × q` blocks.
    SOpq(usize, usize),
}

impl PairId {
    pub fn validate(self) -> Result<Self> {
        let ok = match self {
            PairId::GlnR(n) | PairId::GlnC(n) => n >= 2,
            PairId::SOpq(p, q) => p >= q && q >= 1 && p >= 2,
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::InvalidPair(format!(
                "{self} is outside the supported parameter range"
            )))
        }
    }

    /// `l = dim 𝔞`.
    pub fn rank(self) -> usize {
        match self {
            PairId::GlnR(n) | PairId::GlnC(n) => n,
            PairId::SOpq(_, q) => q,
        }
    }

    /// `(r, s) = (dim 𝔭, dim 𝔨)`.
    pub fn dims(self) -> (usize, usize) {
        match self {
            PairId::GlnR(n) => (n * (n + 1) / 2, n * (n - 1) / 2),
            PairId::GlnC(n) => (n * n, n * n),
            PairId::SOpq(p, q) => (p * q, p * (p - 1) / 2 + q * (q - 1) / 2),
        }
    }
}

impl fmt::Display for PairId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairId::GlnR(n) => write!(f, "glnr:{n}"),
            PairId::GlnC(n) => write!(f, "glnc:{n}"),
            PairId::SOpq(p, q) => write!(f, "sopq:{p},{q}"),
        }
    }
}

impl FromStr for PairId {
    type Err = Error;

    /// Parses `glnr:3`, `glnc:2` or `sopq:3,1`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidPair(format!("cannot parse pair name {s:?}"));
        let (family, params) = s.trim().split_once(':').ok_or_else(bad)?;
        let nums: Vec<usize> = params
            .split(',')
            .map(|p| p.trim().parse().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        let id = match (family.to_ascii_lowercase().as_str(), nums.as_slice()) {
            ("glnr", &[n]) => PairId::GlnR(n),
            ("glnc", &[n]) => PairId::GlnC(n),
            ("sopq", &[p, q]) => PairId::SOpq(p, q),
            _ => return Err(bad()),
        };
        id.validate()
    }
}

/// A point of 𝔭, as coordinates in the pair's 𝔭-basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PElement {
    pair: PairId,
    coords: Vec<Rational>,
}

impl PElement {
    pub fn pair(&self) -> PairId {
        self.pair
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn scale(&self, c: &Rational) -> PElement {
        PElement {
            pair: self.pair,
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }
}

/// Matrices of `A(x)` (s×r), `B(x)` (r×s), `f(x)` (r×r) and `g(x)` (s×s).
#[derive(Clone, Debug)]
pub struct Operators {
    pub a: Mat<Rational>,
    pub b: Mat<Rational>,
    pub f: Mat<Rational>,
    pub g: Mat<Rational>,
}

impl Operators {
    /// `ad x` on `𝔤 = 𝔭 ⊕ 𝔨` in the concatenated basis: `[[0, B], [A, 0]]`.
    pub fn ad(&self) -> Mat<Rational> {
        let (r, s) = (self.b.rows(), self.a.rows());
        Mat::from_fn(r + s, r + s, |i, j| match (i < r, j < r) {
            (true, false) => self.b[(i, j - r)].clone(),
            (false, true) => self.a[(i - r, j)].clone(),
            _ => Rational::zero(),
        })
    }
}

/// `(−1)^k` times the coefficient of `t^{deg − k}`, so that
/// `det(t − f) = Σ (−1)^k P_k t^{r−k}` gives `P_k`.
pub fn char_coefficient(poly: &UPoly, k: usize) -> Rational {
    let deg = poly.degree().unwrap_or(0);
    if k > deg {
        return Rational::zero();
    }
    let c = poly.coeff(deg - k);
    if k % 2 == 1 {
        -c
    } else {
        c
    }
}

/// `cf = det(t − f(x))` on 𝔭 and `cg = det(t − g(x))` on 𝔨.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPolys {
    pub cf: UPoly,
    pub cg: UPoly,
}

impl CharPolys {
    pub fn p(&self, k: usize) -> Rational {
        char_coefficient(&self.cf, k)
    }

    pub fn q(&self, k: usize) -> Rational {
        char_coefficient(&self.cg, k)
    }

    /// `t^s · cf = t^r · cg`.
    pub fn bridge_holds(&self) -> bool {
        let (r, s) = (self.cf.degree().unwrap_or(0), self.cg.degree().unwrap_or(0));
        self.cf.shift(s) == self.cg.shift(r)
    }
}

/// The ways of computing `D(x)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Route {
    /// `P_{r−l}` from the characteristic polynomial of `f`.
    CoeffF,
    /// `Q_{s−α}` with `α = s − r + l`, from the characteristic polynomial of `g`.
    CoeffG,
    /// `det g(x)`; only for rank-maximal pairs.
    DetG,
    /// `∏ λ(x)^{2μ(λ)}`; only for `x ∈ 𝔞`.
    RootProduct,
}

impl Route {
    pub const ALL: [Route; 4] = [
        Route::CoeffF,
        Route::CoeffG,
        Route::DetG,
        Route::RootProduct,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Route::CoeffF => "coeff-f",
            Route::CoeffG => "coeff-g",
            Route::DetG => "det-g",
            Route::RootProduct => "root-product",
        }
    }
}

impl FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Route::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown route {s:?}")))
    }
}

/// Sparse dual functional: `coord(z) = Σ c·z[i][j]`.
type Dual = Vec<(usize, usize, Rational)>;

fn dual_of(m: &Mat<Rational>, scale: &Rational, weight: &Rational) -> Dual {
    let mut out = Vec::new();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let v = &m[(i, j)];
            if !v.is_zero() {
                out.push((i, j, v * scale / weight));
            }
        }
    }
    out
}

fn apply(duals: &[Dual], z: &Mat<Rational>) -> Vec<Rational> {
    duals
        .iter()
        .map(|d| {
            d.iter()
                .fold(Rational::zero(), |acc, (i, j, c)| acc + c * &z[(*i, *j)])
        })
        .collect()
}

/// A realized symmetric pair.
#[derive(Clone, Debug)]
pub struct PairData {
    id: PairId,
    size: usize,
    scale: Rational,
    p_basis: Vec<Mat<Rational>>,
    k_basis: Vec<Mat<Rational>>,
    p_weights: Vec<Rational>,
    k_weights: Vec<Rational>,
    p_dual: Vec<Dual>,
    k_dual: Vec<Dual>,
    root_datum: Option<RootDatum>,
    rank_maximal: bool,
}

impl PairData {
    pub fn build(id: PairId) -> Result<Self> {
        let id = id.validate()?;
        let real = basis::realize(id);
        let (p_basis, p_weights): (Vec<_>, Vec<_>) =
            real.p.into_iter().map(|w| (w.matrix, w.weight)).unzip();
        let (k_basis, k_weights): (Vec<_>, Vec<_>) =
            real.k.into_iter().map(|w| (w.matrix, w.weight)).unzip();
        let p_dual = p_basis
            .iter()
            .zip(&p_weights)
            .map(|(m, w)| dual_of(m, &real.scale, w))
            .collect();
        let k_dual = k_basis
            .iter()
            .zip(&k_weights)
            .map(|(m, w)| dual_of(m, &real.scale, w))
            .collect();
        let mut pair = PairData {
            id,
            size: real.size,
            scale: real.scale,
            p_basis,
            k_basis,
            p_weights,
            k_weights,
            p_dual,
            k_dual,
            root_datum: None,
            rank_maximal: false,
        };
        let regular: Vec<Rational> = (1..=pair.l() as i64).map(rat).collect();
        let g = pair.operators(&pair.cartan_element(&regular)?)?.g;
        pair.rank_maximal = !g.det()?.is_zero();
        pair.root_datum = Some(roots::root_datum(&pair)?);
        Ok(pair)
    }

    pub fn id(&self) -> PairId {
        self.id
    }

    /// `dim 𝔭`.
    pub fn r(&self) -> usize {
        self.p_basis.len()
    }

    /// `dim 𝔨`.
    pub fn s(&self) -> usize {
        self.k_basis.len()
    }

    /// `dim 𝔞`.
    pub fn l(&self) -> usize {
        self.id.rank()
    }

    /// `α = s − r + l`, the guaranteed power of `t` dividing `cg`.
    pub fn alpha(&self) -> usize {
        self.s() + self.l() - self.r()
    }

    /// Side of the square matrices realizing 𝔤.
    pub fn size(&self) -> usize {
        self.size
    }

    /// The inner product is `form_scale · Tr(x yᵀ)` on realizing matrices.
    pub fn form_scale(&self) -> &Rational {
        &self.scale
    }

    pub fn p_basis(&self) -> &[Mat<Rational>] {
        &self.p_basis
    }

    pub fn k_basis(&self) -> &[Mat<Rational>] {
        &self.k_basis
    }

    pub fn p_weights(&self) -> &[Rational] {
        &self.p_weights
    }

    pub fn k_weights(&self) -> &[Rational] {
        &self.k_weights
    }

    /// The basis of 𝔞: the first `l` vectors of the 𝔭-basis.
    pub fn cartan(&self) -> &[Mat<Rational>] {
        &self.p_basis[..self.l()]
    }

    pub fn root_datum(&self) -> Option<&RootDatum> {
        self.root_datum.as_ref()
    }

    pub fn is_rank_maximal(&self) -> bool {
        self.rank_maximal
    }

    pub fn inner(&self, x: &Mat<Rational>, y: &Mat<Rational>) -> Rational {
        x.frobenius(y) * &self.scale
    }

    pub fn element(&self, coords: Vec<Rational>) -> Result<PElement> {
        if coords.len() != self.r() {
            return Err(Error::Dimension(format!(
                "{} coordinates for {} with dim 𝔭 = {}",
                coords.len(),
                self.id,
                self.r()
            )));
        }
        Ok(PElement {
            pair: self.id,
            coords,
        })
    }

    pub fn zero_element(&self) -> PElement {
        PElement {
            pair: self.id,
            coords: vec![Rational::zero(); self.r()],
        }
    }

    /// The point `Σ x_i a_i` of 𝔞.
    pub fn cartan_element(&self, x: &[Rational]) -> Result<PElement> {
        if x.len() != self.l() {
            return Err(Error::Dimension(format!(
                "{} Cartan coordinates for rank {}",
                x.len(),
                self.l()
            )));
        }
        let mut coords = x.to_vec();
        coords.resize(self.r(), Rational::zero());
        Ok(PElement {
            pair: self.id,
            coords,
        })
    }

    /// Cartan coordinates of `x`, or `None` when `x ∉ 𝔞`.
    pub fn cartan_coords(&self, x: &PElement) -> Option<Vec<Rational>> {
        let l = self.l();
        x.coords[l..]
            .iter()
            .all(Ring::is_zero)
            .then(|| x.coords[..l].to_vec())
    }

    fn check(&self, x: &PElement) -> Result<()> {
        if x.pair != self.id {
            return Err(Error::InvalidPair(format!(
                "element of {} used with {}",
                x.pair, self.id
            )));
        }
        Ok(())
    }

    /// `Σ c_i b_i` over any scalar ring.
    pub fn realize<S: Ring>(&self, coords: &[S]) -> Mat<S> {
        let mut out = Mat::<S>::zeros(self.size, self.size);
        for (c, b) in coords.iter().zip(&self.p_basis) {
            if c.is_zero() {
                continue;
            }
            for i in 0..self.size {
                for j in 0..self.size {
                    let v = &b[(i, j)];
                    if !v.is_zero() {
                        out[(i, j)] = out[(i, j)].add(&c.mul(&S::from_rational(v)));
                    }
                }
            }
        }
        out
    }

    /// The realizing matrix of `x`.
    pub fn matrix(&self, x: &PElement) -> Mat<Rational> {
        self.realize(&x.coords)
    }

    /// Coordinates of `z` against the 𝔭-basis: `⟨z, b_i⟩ / ⟨b_i, b_i⟩`.
    pub fn p_coords(&self, z: &Mat<Rational>) -> Vec<Rational> {
        apply(&self.p_dual, z)
    }

    /// Coordinates of `z` against the 𝔨-basis.
    pub fn k_coords(&self, z: &Mat<Rational>) -> Vec<Rational> {
        apply(&self.k_dual, z)
    }

    /// Reads an element from its natural matrix: a real symmetric `n × n`
    /// matrix, a hermitian `n × n` matrix, or the `p × q` block.
    pub fn element_from_matrix(&self, m: &Mat<GaussRational>) -> Result<PElement> {
        let real_part = || -> Result<Mat<Rational>> {
            if m.entries().iter().all(GaussRational::is_real) {
                Ok(m.map(|z| z.re.clone()))
            } else {
                Err(Error::Domain(format!("{} needs real entries", self.id)))
            }
        };
        let shape = |rows: usize, cols: usize| -> Result<()> {
            if m.rows() == rows && m.cols() == cols {
                Ok(())
            } else {
                Err(Error::Dimension(format!(
                    "{} expects a {rows}x{cols} matrix, got {}x{}",
                    self.id,
                    m.rows(),
                    m.cols()
                )))
            }
        };
        let realized = match self.id {
            PairId::GlnR(n) => {
                shape(n, n)?;
                real_part()?
            }
            PairId::GlnC(n) => {
                shape(n, n)?;
                Mat::from_fn(2 * n, 2 * n, |i, j| {
                    let z = &m[(i % n, j % n)];
                    match (i < n, j < n) {
                        (true, true) | (false, false) => z.re.clone(),
                        (false, true) => z.im.clone(),
                        (true, false) => -&z.im,
                    }
                })
            }
            PairId::SOpq(p, q) => {
                shape(p, q)?;
                let b = real_part()?;
                Mat::from_fn(p + q, p + q, |i, j| match (i < p, j < p) {
                    (true, false) => b[(i, j - p)].clone(),
                    (false, true) => b[(j, i - p)].clone(),
                    _ => Rational::zero(),
                })
            }
        };
        let x = self.element(self.p_coords(&realized))?;
        if self.matrix(&x) != realized {
            return Err(Error::Domain(format!(
                "matrix does not lie in 𝔭 for {}",
                self.id
            )));
        }
        Ok(x)
    }

    pub fn operators(&self, x: &PElement) -> Result<Operators> {
        self.check(x)?;
        let xm = self.matrix(x);
        let (r, s) = (self.r(), self.s());
        let mut a = Mat::zeros(s, r);
        for (i, b) in self.p_basis.iter().enumerate() {
            for (j, c) in self.k_coords(&xm.commutator(b)).into_iter().enumerate() {
                a[(j, i)] = c;
            }
        }
        let mut bm = Mat::zeros(r, s);
        for (j, b) in self.k_basis.iter().enumerate() {
            for (i, c) in self.p_coords(&xm.commutator(b)).into_iter().enumerate() {
                bm[(i, j)] = c;
            }
        }
        let f = bm.dot(&a);
        let g = a.dot(&bm);
        Ok(Operators { a, b: bm, f, g })
    }

    pub fn charpolys(&self, x: &PElement) -> Result<CharPolys> {
        let ops = self.operators(x)?;
        Ok(CharPolys {
            cf: charpoly(&ops.f)?,
            cg: charpoly(&ops.g)?,
        })
    }

    pub fn discriminant(&self, x: &PElement, route: Route) -> Result<Rational> {
        self.check(x)?;
        let top = self.r() - self.l();
        match route {
            Route::CoeffF => Ok(self.charpolys(x)?.p(top)),
            Route::CoeffG => Ok(self.charpolys(x)?.q(self.s() - self.alpha())),
            Route::DetG => {
                if !self.rank_maximal {
                    return Err(Error::RouteUnavailable(format!(
                        "{} on {}",
                        route.name(),
                        self.id
                    )));
                }
                self.operators(x)?.g.det()
            }
            Route::RootProduct => {
                let datum = self.root_datum.as_ref().ok_or(Error::MissingRootDatum)?;
                let a = self.cartan_coords(x).ok_or_else(|| {
                    Error::Domain("root product needs a point of the Cartan subspace".into())
                })?;
                Ok(root_product(datum, &a))
            }
        }
    }

    /// Every route that applies to `x`.
    pub fn discriminants(&self, x: &PElement) -> Result<BTreeMap<Route, Rational>> {
        let mut out = BTreeMap::new();
        for route in Route::ALL {
            match self.discriminant(x, route) {
                Ok(v) => {
                    out.insert(route, v);
                }
                Err(Error::RouteUnavailable(_) | Error::Domain(_) | Error::MissingRootDatum) => {}
                Err(e) => return Err(e),
            }
        }
        Ok(out)
    }

    /// `dim K·x = rank A(x)`.
    pub fn orbit_dim(&self, x: &PElement) -> Result<usize> {
        Ok(self.operators(x)?.a.rank())
    }

    /// `(cf, cg, cad)` from the root datum at Cartan coordinates `x`.
    pub fn root_factored_charpoly(&self, x: &[Rational]) -> Result<[UPoly; 3]> {
        let datum = self.root_datum.as_ref().ok_or(Error::MissingRootDatum)?;
        root_factored_charpoly(datum, self.l(), x)
    }

    /// Random element with coordinates `a/b`, `|a| ≤ bound`, `1 ≤ b ≤ 3`.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R, bound: i64) -> PElement {
        let coords = (0..self.r()).map(|_| random_rational(rng, bound)).collect();
        PElement {
            pair: self.id,
            coords,
        }
    }

    /// Random point of 𝔞, as Cartan coordinates.
    pub fn random_cartan<R: Rng + ?Sized>(&self, rng: &mut R, bound: i64) -> Vec<Rational> {
        (0..self.l()).map(|_| random_rational(rng, bound)).collect()
    }
}

pub fn random_rational<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Rational {
    crate::algebra::ratio(rng.gen_range(-bound..=bound), rng.gen_range(1..=3))
}
