//! Property tests for the algebraic identities every module relies on.

use proptest::prelude::*;

use symdisc::algebra::{
    charpoly, hankel_power_trace_det, poly_discriminant, rat, ratio, resultant_euclid,
    resultant_sylvester, GaussRational, MPoly, Mat, Rational, Ring, UPoly,
};
use symdisc::exterior::{
    column_wedge_sum, metric_minor_square_sum, par_metric_minor_square_sum,
    weighted_minor_square_sum,
};
use symdisc::invariants::{
    generators, gradient, gradients, jacobian_on_a, omega_det, phi, restricted_generators,
};
use symdisc::sos::{self, json, verify, Target, Witness};
use symdisc::sympair::{PElement, PairData, Route};

const PAIRS: &[&str] = &[
    "glnr:2", "glnr:3", "glnc:2", "sopq:2,1", "sopq:3,1", "sopq:4,1", "sopq:2,2", "sopq:3,2",
    "sopq:3,3",
];

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        ..ProptestConfig::default()
    }
}

fn rational() -> impl Strategy<Value = Rational> {
    (-5i64..=5, 1i64..=3).prop_map(|(n, d)| ratio(n, d))
}

fn square_matrix(n: usize) -> impl Strategy<Value = Mat<Rational>> {
    prop::collection::vec(rational(), n * n)
        .prop_map(move |v| Mat::from_fn(n, n, |i, j| v[i * n + j].clone()))
}

fn symmetric_matrix(n: usize) -> impl Strategy<Value = Mat<Rational>> {
    square_matrix(n).prop_map(|m| {
        let t = m.transpose();
        m.add(&t).unwrap()
    })
}

/// A pair together with a point of 𝔭 in basis coordinates.
fn pair_point() -> impl Strategy<Value = (PairData, PElement)> {
    (0..PAIRS.len()).prop_flat_map(|i| {
        let pair = PairData::build(PAIRS[i].parse().unwrap()).unwrap();
        prop::collection::vec(rational(), pair.r()).prop_map(move |c| {
            let x = pair.element(c).unwrap();
            (pair.clone(), x)
        })
    })
}

/// A pair together with a point of its Cartan subspace.
fn pair_cartan_point() -> impl Strategy<Value = (PairData, Vec<Rational>)> {
    (0..PAIRS.len()).prop_flat_map(|i| {
        let pair = PairData::build(PAIRS[i].parse().unwrap()).unwrap();
        prop::collection::vec(rational(), pair.l()).prop_map(move |a| (pair.clone(), a))
    })
}

fn lagrange_derivative_at_zero(values: &[Rational]) -> Rational {
    // Derivative at t = 0 of the interpolant through (j, values[j]), j = 0..=d.
    let d = values.len() - 1;
    let mut total = Rational::zero();
    for (j, v) in values.iter().enumerate() {
        let mut denom = Rational::one();
        for m in 0..=d {
            if m != j {
                denom *= rat(j as i64 - m as i64);
            }
        }
        // d/dt ∏_{m≠j}(t − m) at t = 0
        let mut slope = Rational::zero();
        for skip in 0..=d {
            if skip == j {
                continue;
            }
            let mut prod = Rational::one();
            for m in 0..=d {
                if m != j && m != skip {
                    prod *= rat(-(m as i64));
                }
            }
            slope += prod;
        }
        total += v * slope / denom;
    }
    total
}

proptest! {
    #![proptest_config(config(48))]

    #[test]
    fn charpoly_is_monic_of_full_degree(m in square_matrix(3)) {
        let p = charpoly(&m).unwrap();
        prop_assert!(p.is_monic());
        prop_assert_eq!(p.degree(), Some(3));
        prop_assert_eq!(-p.coeff(2), m.trace().unwrap());
        prop_assert_eq!(p.coeff(0), -m.det().unwrap());
    }

    #[test]
    fn discriminant_routes_agree_on_any_matrix(m in square_matrix(3)) {
        let p = charpoly(&m).unwrap();
        prop_assert_eq!(poly_discriminant(&p).unwrap(), hankel_power_trace_det(&m).unwrap());
    }

    #[test]
    fn resultants_agree(f in prop::collection::vec(-4i64..=4, 1..5), g in prop::collection::vec(-4i64..=4, 1..5)) {
        let (f, g) = (UPoly::from_ints(&f), UPoly::from_ints(&g));
        prop_assume!(!f.is_zero() && !g.is_zero());
        prop_assert_eq!(resultant_sylvester(&f, &g).unwrap(), resultant_euclid(&f, &g));
    }

    #[test]
    fn determinant_is_multiplicative(a in square_matrix(3), b in square_matrix(3)) {
        let ab = a.dot(&b);
        prop_assert_eq!(ab.det().unwrap(), a.det().unwrap() * b.det().unwrap());
    }

    #[test]
    fn symmetric_discriminant_is_non_negative(m in symmetric_matrix(4)) {
        prop_assert!(hankel_power_trace_det(&m).unwrap() >= rat(0));
    }

    #[test]
    fn cauchy_binet_matches_minor_sum(
        m in prop::collection::vec(rational(), 12),
        w in prop::collection::vec((1i64..=4).prop_map(rat), 4),
        k in 1usize..=3,
    ) {
        let m = Mat::from_fn(4, 3, |i, j| m[i * 3 + j].clone());
        let minors = weighted_minor_square_sum(&m, &w, k).unwrap();
        prop_assert_eq!(&minors, &column_wedge_sum(&m, &w, k).unwrap());
        let ones = vec![rat(1); 3];
        prop_assert_eq!(&minors, &metric_minor_square_sum(&m, &w, &ones, k).unwrap());
        prop_assert!(minors >= rat(0));
    }

    #[test]
    fn parallel_minor_sum_matches_serial(
        m in prop::collection::vec(rational(), 15),
        k in 1usize..=3,
    ) {
        let m = Mat::from_fn(5, 3, |i, j| m[i * 3 + j].clone());
        let rw: Vec<Rational> = (1..=5).map(rat).collect();
        let cw: Vec<Rational> = (1..=3).map(|c| ratio(1, c)).collect();
        prop_assert_eq!(
            metric_minor_square_sum(&m, &rw, &cw, k).unwrap(),
            par_metric_minor_square_sum(&m, &rw, &cw, k).unwrap()
        );
    }
}

proptest! {
    #![proptest_config(config(32))]

    #[test]
    fn bridge_holds((pair, x) in pair_point()) {
        prop_assert!(pair.charpolys(&x).unwrap().bridge_holds());
    }

    #[test]
    fn coefficients_are_minor_square_sums((pair, x) in pair_point()) {
        let cp = pair.charpolys(&x).unwrap();
        let a = pair.operators(&x).unwrap().a;
        for k in 1..=pair.r() {
            if k > a.rows().min(a.cols()) {
                prop_assert!(cp.p(k).is_zero());
                continue;
            }
            let sum = metric_minor_square_sum(&a, pair.k_weights(), pair.p_weights(), k).unwrap();
            prop_assert_eq!(cp.p(k), sum, "k = {}", k);
        }
    }

    #[test]
    fn coefficients_are_homogeneous((pair, x) in pair_point(), c in rational()) {
        let cx = x.scale(&c);
        let (cp, cpx) = (pair.charpolys(&x).unwrap(), pair.charpolys(&cx).unwrap());
        for k in 1..=pair.r() {
            prop_assert_eq!(cpx.p(k), cp.p(k) * Ring::pow(&c, 2 * k as u32));
        }
    }

    #[test]
    fn routes_agree_on_rank_maximal_pairs((pair, x) in pair_point()) {
        let d = pair.discriminants(&x).unwrap();
        let first = d.values().next().unwrap();
        prop_assert!(d.values().all(|v| v == first), "{:?}", d);
        prop_assert!(*first >= rat(0));
        if pair.is_rank_maximal() {
            prop_assert!(d.contains_key(&Route::DetG));
            prop_assert_eq!(first, &omega_det(&pair, &x));
        }
    }

    #[test]
    fn orbit_dimension_bounds((pair, x) in pair_point()) {
        let dim = pair.orbit_dim(&x).unwrap();
        prop_assert!(dim <= pair.r() - pair.l());
        let vanishes = pair.discriminant(&x, Route::CoeffF).unwrap().is_zero();
        prop_assert_eq!(vanishes, dim < pair.r() - pair.l());
    }

    #[test]
    fn cartan_points_factor_through_roots((pair, a) in pair_cartan_point()) {
        let x = pair.cartan_element(&a).unwrap();
        prop_assert_eq!(pair.cartan_coords(&x), Some(a.clone()));
        let [cf, cg, _] = pair.root_factored_charpoly(&a).unwrap();
        let cp = pair.charpolys(&x).unwrap();
        prop_assert_eq!(cp.cf, cf);
        prop_assert_eq!(cp.cg, cg);
    }

    #[test]
    fn gradient_matches_lagrange_oracle(
        (pair, x) in pair_point(),
        dir in prop::collection::vec(-3i64..=3, 1..=16),
    ) {
        let y: Vec<Rational> = (0..pair.r()).map(|i| rat(dir[i % dir.len()])).collect();
        for gen in generators(pair.id()) {
            let grad = gradient(&pair, &gen, &x);
            let analytic = (0..pair.r())
                .fold(Rational::zero(), |acc, i| acc + &pair.p_weights()[i] * &grad[i] * &y[i]);
            let samples: Vec<Rational> = (0..=gen.degree() as i64)
                .map(|t| {
                    let coords = x.coords().iter().zip(&y).map(|(c, d)| c + rat(t) * d).collect();
                    gen.eval(&pair, &pair.element(coords).unwrap())
                })
                .collect();
            prop_assert_eq!(analytic, lagrange_derivative_at_zero(&samples), "{:?}", gen.kind());
        }
    }

    #[test]
    fn generators_are_homogeneous((pair, x) in pair_point(), c in rational()) {
        let cx = x.scale(&c);
        for gen in generators(pair.id()) {
            prop_assert_eq!(gen.eval(&pair, &cx), gen.eval(&pair, &x) * Ring::pow(&c, gen.degree()));
        }
    }

    #[test]
    fn cartan_gradients_stay_in_cartan((pair, a) in pair_cartan_point()) {
        let x = pair.cartan_element(&a).unwrap();
        for grad in gradients(&pair, &x) {
            prop_assert!(grad[pair.l()..].iter().all(Ring::is_zero));
        }
    }

    #[test]
    fn phi_on_cartan_is_jacobian_squared((pair, a) in pair_cartan_point()) {
        let x = pair.cartan_element(&a).unwrap();
        let j = jacobian_on_a(&pair).eval(&a);
        let cartan_weight = pair.p_weights()[..pair.l()].iter().fold(Rational::one(), |acc, w| acc * w);
        prop_assert_eq!(phi(&pair, &x), &j * &j / cartan_weight);
        prop_assert_eq!(phi(&pair, &x), omega_det(&pair, &x));
    }

    #[test]
    fn pk_certificates_verify((pair, x) in pair_point(), k in 1usize..=16) {
        let k = 1 + (k - 1) % (pair.r() - pair.l());
        let cert = sos::pk_certificate(&pair, &x, k).unwrap();
        prop_assert!(verify(&cert).is_valid());
        prop_assert_eq!(&cert.target, &Target::Scalar(pair.charpolys(&x).unwrap().p(k)));
        let back = json::from_str(&json::to_string(&cert)).unwrap();
        prop_assert_eq!(back, cert);
    }
}

fn gaussian() -> impl Strategy<Value = GaussRational> {
    (rational(), rational()).prop_map(|(re, im)| GaussRational::new(re, im))
}

proptest! {
    #![proptest_config(config(32))]

    #[test]
    fn ilyushechkin_certificates_verify(m in symmetric_matrix(3)) {
        let cert = sos::ilyushechkin_certificate(&m).unwrap();
        prop_assert!(verify(&cert).is_valid());
        prop_assert_eq!(cert.target, Target::Scalar(hankel_power_trace_det(&m).unwrap()));
        let basis = sos::symmetric_basis_certificate(&m).unwrap();
        prop_assert!(verify(&basis).is_valid());
        prop_assert_eq!(basis.terms.len() as u64, sos::symmetric_minor_count(3));
    }

    #[test]
    fn hermitian_certificates_verify(entries in prop::collection::vec(gaussian(), 3), diag in prop::collection::vec(rational(), 2)) {
        let z = Mat::from_fn(2, 2, |i, j| match (i, j) {
            (0, 0) => GaussRational::real(diag[0].clone()),
            (1, 1) => GaussRational::real(diag[1].clone()),
            (0, 1) => entries[0].clone(),
            _ => entries[0].conj(),
        });
        let cert = sos::ilyushechkin_certificate_gauss(&z).unwrap();
        prop_assert!(verify(&cert).is_valid());
        let d = hankel_power_trace_det(&z).unwrap();
        prop_assert_eq!(cert.target, Target::Scalar(d.re.clone()));
    }

    #[test]
    fn mutated_certificates_are_rejected(m in symmetric_matrix(3), pick in 0usize..64) {
        let mut cert = sos::ilyushechkin_certificate(&m).unwrap();
        let nonzero: Vec<usize> = cert.terms.iter().enumerate()
            .filter(|(_, t)| !matches!(&t.witness, Witness::Scalar(w) if w.is_zero()))
            .map(|(i, _)| i)
            .collect();
        prop_assume!(!nonzero.is_empty());
        let i = nonzero[pick % nonzero.len()];
        cert.terms[i].weight += rat(1);
        prop_assert!(!verify(&cert).is_valid());
    }
}

#[test]
fn rudin_expansions_verify() {
    for k in 1..=5 {
        for n in 2..=4 {
            let cert = sos::rudin_certificate(k, n).unwrap();
            assert!(verify(&cert).is_valid(), "k = {k}, n = {n}");
            assert_eq!(cert.terms.len() as u64, sos::dim_p(k, n));
            let total: Rational = cert.terms.iter().map(|t| t.weight.clone()).sum();
            assert_eq!(
                total,
                Ring::pow(&rat(n as i64), k as u32),
                "multinomial weights sum to n^k"
            );
        }
    }
}

#[test]
fn lifted_rudin_certificates_verify() {
    for k in 1..=3 {
        for n in 2..=3 {
            let lifted = sos::lift(&sos::rudin_certificate(k, n).unwrap()).unwrap();
            assert!(verify(&lifted).is_valid(), "k = {k}, n = {n}");
            let Target::Poly(t) = &lifted.target else {
                panic!("polynomial target")
            };
            assert_eq!(t.total_degree(), Some(2 * k as u32 + 4));
            let twice = sos::lift(&lifted).unwrap();
            assert!(verify(&twice).is_valid());
            assert_eq!(twice.params["lifts"], 2);
        }
    }
}

#[test]
fn harmonic_dimension_matches_difference_of_polynomial_dimensions() {
    for k in 1..=6 {
        for n in 2..=5 {
            let below = if k >= 2 { sos::dim_p(k - 2, n) } else { 0 };
            assert_eq!(
                sos::dim_h(k, n),
                sos::dim_p(k, n) - below,
                "k = {k}, n = {n}"
            );
        }
    }
}

#[test]
fn jacobian_degree_and_squared_root_product() {
    for name in PAIRS {
        let pair = PairData::build(name.parse().unwrap()).unwrap();
        let j = jacobian_on_a(&pair);
        let l = pair.l();
        let datum = pair.root_datum().unwrap();
        let roots = datum
            .positive_roots
            .iter()
            .fold(MPoly::one(l), |acc, r| &acc * &MPoly::linear_form(&r.form));
        let jj = &j * &j;
        let rr = &roots * &roots;
        let c = jj.ratio_to(&rr);
        assert!(
            c.as_ref().is_some_and(|c| *c > rat(0)),
            "{name}: J² / ∏α² = {c:?}"
        );
        assert_eq!(restricted_generators(&pair).len(), l);
    }
}
