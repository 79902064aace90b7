//! Basic invariants of each pair, their gradients and the Gram determinant
//! `det Ω`, the wedge covariant `φ = ‖∇p₁ ∧ … ∧ ∇p_l‖²`, the Jacobian on the
//! Cartan subspace, and the comparison of `D` with `φ`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{ratio, MPoly, Mat, Rational, Ring, UPoly};
use crate::error::{Error, Result};
use crate::exterior::weighted_minor_square_sum;
use crate::sympair::{generator_degrees, root_product, PElement, PairData, PairId, Root, Route};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    /// `Tr(x^j)/j`, real-valued on hermitian matrices.
    TracePower(u32),
    /// `Tr((B Bᵀ)^j)/(2j)` on the `p × q` block `B`.
    GramTrace(u32),
    /// `det B` for a square block.
    BlockDet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantGenerator {
    pair: PairId,
    kind: GeneratorKind,
    degree: u32,
}

impl InvariantGenerator {
    pub fn pair(&self) -> PairId {
        self.pair
    }

    pub fn kind(&self) -> GeneratorKind {
        self.kind
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Evaluates on a realizing matrix, over any scalar ring.
    pub fn eval_matrix<S: Ring>(&self, m: &Mat<S>) -> S {
        let block = |p: usize, q: usize| Mat::from_fn(p, q, |i, j| m[(i, p + j)].clone());
        match (self.kind, self.pair) {
            (GeneratorKind::TracePower(j), pair) => {
                let tr = m
                    .pow(j)
                    .and_then(|x| x.trace())
                    .expect("square realization");
                // the complex embedding doubles every trace
                let den = if matches!(pair, PairId::GlnC(_)) {
                    2 * j
                } else {
                    j
                };
                tr.mul(&S::from_rational(&ratio(1, den.into())))
            }
            (GeneratorKind::GramTrace(j), PairId::SOpq(p, q)) => {
                let b = block(p, q);
                let bbt = b.dot(&b.transpose());
                let tr = bbt.pow(j).and_then(|x| x.trace()).expect("square");
                tr.mul(&S::from_rational(&ratio(1, 2 * i64::from(j))))
            }
            (GeneratorKind::BlockDet, PairId::SOpq(p, q)) => {
                block(p, q).det().expect("square block")
            }
            (kind, pair) => unreachable!("{kind:?} is never generated for {pair}"),
        }
    }

    pub fn eval(&self, pair: &PairData, x: &PElement) -> Rational {
        self.eval_matrix(&pair.matrix(x))
    }
}

/// Basic invariants, ascending by degree.
pub fn generators(id: PairId) -> Vec<InvariantGenerator> {
    let make = |kind, degree| InvariantGenerator {
        pair: id,
        kind,
        degree,
    };
    let mut gens: Vec<_> = match id {
        PairId::GlnR(n) | PairId::GlnC(n) => (1..=n as u32)
            .map(|j| make(GeneratorKind::TracePower(j), j))
            .collect(),
        PairId::SOpq(p, q) if p == q && q > 1 => {
            let mut g: Vec<_> = (1..p as u32)
                .map(|j| make(GeneratorKind::GramTrace(j), 2 * j))
                .collect();
            g.push(make(GeneratorKind::BlockDet, p as u32));
            g
        }
        PairId::SOpq(_, q) => (1..=q as u32)
            .map(|j| make(GeneratorKind::GramTrace(j), 2 * j))
            .collect(),
    };
    gens.sort_by_key(|g| g.degree);
    debug_assert_eq!(
        gens.iter().map(|g| g.degree).collect::<Vec<_>>(),
        generator_degrees(id)
    );
    gens
}

/// Coordinates of `∇p(x)`: the linear coefficient of `p(x + t·b_i)` is
/// `⟨∇p(x), b_i⟩`, which is divided by `⟨b_i, b_i⟩`.
pub fn gradient(pair: &PairData, gen: &InvariantGenerator, x: &PElement) -> Vec<Rational> {
    let base: Vec<UPoly> = x
        .coords()
        .iter()
        .map(|c| UPoly::constant(c.clone()))
        .collect();
    pair.p_weights()
        .iter()
        .enumerate()
        .map(|(i, w)| {
            let mut line = base.clone();
            line[i] = &line[i] + &UPoly::t();
            gen.eval_matrix(&pair.realize(&line)).coeff(1) / w
        })
        .collect()
}

pub fn gradients(pair: &PairData, x: &PElement) -> Vec<Vec<Rational>> {
    generators(pair.id())
        .iter()
        .map(|g| gradient(pair, g, x))
        .collect()
}

/// `Ω_{ij} = ⟨∇p_i(x), ∇p_j(x)⟩`.
pub fn omega(pair: &PairData, x: &PElement) -> Mat<Rational> {
    let grads = gradients(pair, x);
    let w = pair.p_weights();
    Mat::from_fn(grads.len(), grads.len(), |i, j| {
        (0..w.len()).fold(Rational::zero(), |acc, k| {
            acc + &w[k] * &grads[i][k] * &grads[j][k]
        })
    })
}

pub fn omega_det(pair: &PairData, x: &PElement) -> Rational {
    omega(pair, x).det().expect("square Gram matrix")
}

/// `‖∇p₁ ∧ … ∧ ∇p_l‖²`, summed over the maximal minors of the matrix whose
/// columns are the gradients.
pub fn phi(pair: &PairData, x: &PElement) -> Rational {
    let grads = gradients(pair, x);
    let m = Mat::from_fn(pair.r(), grads.len(), |i, j| grads[j][i].clone());
    weighted_minor_square_sum(&m, pair.p_weights(), grads.len()).expect("l ≤ r")
}

/// The generators restricted to 𝔞, as polynomials in the Cartan coordinates.
pub fn restricted_generators(pair: &PairData) -> Vec<MPoly> {
    let l = pair.l();
    let mut coords: Vec<MPoly> = (0..l).map(|i| MPoly::var(l, i)).collect();
    coords.resize(pair.r(), MPoly::zero(l));
    let m = pair.realize(&coords);
    generators(pair.id())
        .iter()
        .map(|g| g.eval_matrix(&m))
        .collect()
}

/// `J = det(∂q_j/∂x_i)` on 𝔞, generators in ascending degree order.
pub fn jacobian_on_a(pair: &PairData) -> MPoly {
    let qs = restricted_generators(pair);
    let l = pair.l();
    Mat::from_fn(l, l, |j, i| qs[j].partial(i))
        .det()
        .expect("square Jacobian")
}

/// `(|W|, number of reflections) = (∏ d_j, Σ (d_j − 1))`.
pub fn weyl_arithmetic(id: PairId) -> (u64, u32) {
    let d = generator_degrees(id);
    (
        d.iter().map(|&x| u64::from(x)).product(),
        d.iter().map(|x| x - 1).sum(),
    )
}

/// One evaluation of `D` and `φ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sample {
    pub coords: Vec<Rational>,
    pub d: Rational,
    pub phi: Rational,
}

/// Restriction of `D` and `φ` to 𝔞 as products over the positive roots:
/// `φ = c·∏ λ²` and `D = ∏ λ^{2μ}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factored {
    pub roots: Vec<Root>,
    pub phi_constant: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub pair: PairId,
    pub rank_maximal: bool,
    /// `D/φ` when it is the same at every sample.
    pub ratio: Option<Rational>,
    /// Regular points of 𝔞, in Cartan coordinates.
    pub cartan_samples: Vec<Sample>,
    /// Points of all of 𝔭; only drawn for rank-maximal pairs.
    pub full_samples: Vec<Sample>,
    pub factored: Option<Factored>,
}

/// `∏ λ(x)²`, each root counted once.
fn squared_roots(roots: &[Root], x: &[Rational]) -> Rational {
    roots.iter().fold(Rational::one(), |acc, r| {
        let v = r.eval(x);
        acc * &v * &v
    })
}

fn constant_ratio(samples: &[Sample]) -> Option<Rational> {
    let first = &samples.first()?.d / &samples[0].phi;
    samples
        .iter()
        .all(|s| s.d == &first * &s.phi)
        .then_some(first)
}

/// Evaluates `D` and `φ` at `count` regular Cartan points (and, for
/// rank-maximal pairs, `count` points of 𝔭) drawn from a seeded stream.
/// Points where `φ` vanishes are redrawn.
pub fn compare_d_phi(pair: &PairData, seed: u64, count: usize) -> Result<Comparison> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draw =
        |rng: &mut ChaCha8Rng, x: &dyn Fn(&mut ChaCha8Rng) -> Result<PElement>| -> Result<Sample> {
            for _ in 0..1000 {
                let x = x(rng)?;
                let phi = phi(pair, &x);
                if !phi.is_zero() {
                    let d = pair.discriminant(&x, Route::CoeffF)?;
                    return Ok(Sample {
                        coords: x.coords().to_vec(),
                        d,
                        phi,
                    });
                }
            }
            Err(Error::Precondition(
                "could not draw a regular sample".into(),
            ))
        };
    // Distinct values of D keep coincidences such as x = ±1 from making a
    // varying ratio look constant.
    let mut cartan_samples: Vec<Sample> = Vec::with_capacity(count);
    let mut attempts = 0;
    while cartan_samples.len() < count {
        let s = draw(&mut rng, &|rng| {
            pair.cartan_element(&pair.random_cartan(rng, 6))
        })?;
        attempts += 1;
        if cartan_samples.iter().any(|t| t.d == s.d) {
            if attempts > 1000 * count {
                return Err(Error::Precondition(
                    "could not draw distinct regular samples".into(),
                ));
            }
            continue;
        }
        cartan_samples.push(Sample {
            coords: s.coords[..pair.l()].to_vec(),
            ..s
        });
    }
    let full_samples = if pair.is_rank_maximal() {
        (0..count)
            .map(|_| draw(&mut rng, &|rng| Ok(pair.random_element(rng, 4))))
            .collect::<Result<Vec<_>>>()?
    } else {
        Vec::new()
    };
    let all: Vec<Sample> = cartan_samples
        .iter()
        .chain(&full_samples)
        .cloned()
        .collect();
    let ratio = constant_ratio(&all);
    let factored = match (pair.is_rank_maximal(), pair.root_datum()) {
        (false, Some(datum)) => {
            let c = &cartan_samples[0].phi
                / squared_roots(&datum.positive_roots, &cartan_samples[0].coords);
            let fits = cartan_samples.iter().all(|s| {
                s.phi == &c * squared_roots(&datum.positive_roots, &s.coords)
                    && s.d == root_product(datum, &s.coords)
            });
            if !fits {
                return Err(Error::Precondition(format!(
                    "root factorization of D and φ fails on {}",
                    pair.id()
                )));
            }
            Some(Factored {
                roots: datum.positive_roots.clone(),
                phi_constant: c,
            })
        }
        _ => None,
    };
    Ok(Comparison {
        pair: pair.id(),
        rank_maximal: pair.is_rank_maximal(),
        ratio,
        cartan_samples,
        full_samples,
        factored,
    })
}
