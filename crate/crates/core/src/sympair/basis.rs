//! Matrix realizations of 𝔭 and 𝔨 for each family.
//!
//! Everything is realized by real matrices: `gl(n, ℂ)` is embedded through
//! `X + iY ↦ [[X, −Y], [Y, X]]`. The inner product is `scale · Tr(x yᵀ)`,
//! where the scale is 1 for `gl(n, ℝ)`. For the other two families it is ½:
//! that makes the complex embedding compute `Re Tr(x y*)`, and for `so(p, q)`
//! it matches the block `B` with ℝ^{p×q}.

use crate::algebra::{rat, ratio, Mat, Rational};

use super::PairId;

/// A basis matrix with its squared norm.
pub(crate) struct Weighted {
    pub matrix: Mat<Rational>,
    pub weight: Rational,
}

pub(crate) struct Realization {
    pub size: usize,
    pub scale: Rational,
    pub p: Vec<Weighted>,
    pub k: Vec<Weighted>,
}

fn unit(size: usize, entries: &[(usize, usize, i64)]) -> Mat<Rational> {
    let mut m = Mat::zeros(size, size);
    for &(i, j, v) in entries {
        m[(i, j)] += rat(v);
    }
    m
}

fn weighted(size: usize, scale: &Rational, entries: &[(usize, usize, i64)]) -> Weighted {
    let weight = entries
        .iter()
        .fold(rat(0), |acc, &(_, _, v)| acc + rat(v * v))
        * scale;
    Weighted {
        matrix: unit(size, entries),
        weight,
    }
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

pub(crate) fn realize(id: PairId) -> Realization {
    match id {
        PairId::GlnR(n) => {
            let scale = rat(1);
            let mut p: Vec<_> = (0..n).map(|i| weighted(n, &scale, &[(i, i, 1)])).collect();
            p.extend(pairs(n).map(|(i, j)| weighted(n, &scale, &[(i, j, 1), (j, i, 1)])));
            let k = pairs(n)
                .map(|(i, j)| weighted(n, &scale, &[(i, j, 1), (j, i, -1)]))
                .collect();
            Realization {
                size: n,
                scale,
                p,
                k,
            }
        }
        PairId::GlnC(n) => {
            let size = 2 * n;
            let scale = ratio(1, 2);
            // real part at (i, j) and (n+i, n+j); imaginary part y at
            // (n+i, j) and −y at (i, n+j)
            let re = |i: usize, j: usize, v: i64| [(i, j, v), (n + i, n + j, v)];
            let im = |i: usize, j: usize, v: i64| [(n + i, j, v), (i, n + j, -v)];
            let cat =
                |a: [(usize, usize, i64); 2], b: [(usize, usize, i64); 2]| [a[0], a[1], b[0], b[1]];
            let mut p: Vec<_> = (0..n)
                .map(|i| weighted(size, &scale, &re(i, i, 1)))
                .collect();
            let mut k: Vec<_> = (0..n)
                .map(|i| weighted(size, &scale, &im(i, i, 1)))
                .collect();
            for (i, j) in pairs(n) {
                p.push(weighted(size, &scale, &cat(re(i, j, 1), re(j, i, 1))));
                p.push(weighted(size, &scale, &cat(im(i, j, 1), im(j, i, -1))));
                k.push(weighted(size, &scale, &cat(re(i, j, 1), re(j, i, -1))));
                k.push(weighted(size, &scale, &cat(im(i, j, 1), im(j, i, 1))));
            }
            Realization { size, scale, p, k }
        }
        PairId::SOpq(pp, q) => {
            let size = pp + q;
            let scale = ratio(1, 2);
            let block =
                |a: usize, b: usize| weighted(size, &scale, &[(a, pp + b, 1), (pp + b, a, 1)]);
            let mut p: Vec<_> = (0..q).map(|c| block(c, c)).collect();
            for a in 0..pp {
                for b in 0..q {
                    if a != b {
                        p.push(block(a, b));
                    }
                }
            }
            let mut k: Vec<_> = pairs(pp)
                .map(|(a, b)| weighted(size, &scale, &[(a, b, 1), (b, a, -1)]))
                .collect();
            k.extend(pairs(q).map(|(a, b)| {
                weighted(size, &scale, &[(pp + a, pp + b, 1), (pp + b, pp + a, -1)])
            }));
            Realization { size, scale, p, k }
        }
    }
}
