//! Acceptance suite. Prints one line per criterion and exits non-zero if any
//! criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::Command;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use symdisc::algebra::{
    charpoly, hankel_power_trace_det, poly_discriminant, rat, ratio, GaussRational, MPoly, Mat,
    Rational, Ring, UPoly,
};
use symdisc::invariants::{compare_d_phi, jacobian_on_a, omega_det, phi, weyl_arithmetic};
use symdisc::sos::{self, dim_h, dim_p, symmetric_minor_count, Witness};
use symdisc::sympair::{PElement, PairData, Route};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn pair(name: &str) -> PairData {
    PairData::build(name.parse().unwrap()).unwrap()
}

fn random_symmetric(rng: &mut ChaCha8Rng, n: usize) -> Mat<Rational> {
    let mut m = Mat::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = ratio(rng.gen_range(-6..=6), rng.gen_range(1..=3));
            m[(i, j)] = v.clone();
            m[(j, i)] = v;
        }
    }
    m
}

fn scalar_total(cert: &sos::SosCertificate) -> Rational {
    cert.terms
        .iter()
        .fold(Rational::zero(), |acc, t| match &t.witness {
            Witness::Scalar(w) => acc + &t.weight * w * w,
            Witness::ModulusSq(m) => acc + &t.weight * m,
            Witness::Poly(_) => panic!("scalar certificate expected"),
        })
}

fn criterion_1() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut count = 0;
    for n in 2..=4 {
        let p = pair(&format!("glnr:{n}"));
        for _ in 0..20 {
            let x = random_symmetric(&mut rng, n);
            let xe = p
                .element_from_matrix(&x.map(|v| GaussRational::real(v.clone())))
                .unwrap();
            let values = [
                (
                    "resultant",
                    poly_discriminant(&charpoly(&x).unwrap()).unwrap(),
                ),
                ("hankel", hankel_power_trace_det(&x).unwrap()),
                ("coeff-g", p.discriminant(&xe, Route::CoeffG).unwrap()),
                ("det-g", p.discriminant(&xe, Route::DetG).unwrap()),
                ("omega", omega_det(&p, &xe)),
                ("phi", phi(&p, &xe)),
                (
                    "ilyushechkin",
                    scalar_total(&sos::ilyushechkin_certificate(&x).unwrap()),
                ),
            ];
            for (name, v) in &values[1..] {
                ensure!(
                    *v == values[0].1,
                    "n={n}, x={x}: {name} = {v} but resultant = {}",
                    values[0].1
                );
            }
            count += 1;
        }
    }
    Ok(format!(
        "7 routes agree exactly on {count} random symmetric matrices (n = 2, 3, 4)"
    ))
}

fn sampled_pairs() -> Vec<&'static str> {
    vec![
        "glnr:2", "glnr:3", "glnr:4", "glnc:2", "glnc:3", "sopq:3,1", "sopq:4,1", "sopq:2,2",
        "sopq:3,3", "sopq:3,2",
    ]
}

fn criterion_2() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let pairs = sampled_pairs();
    for name in &pairs {
        let p = pair(name);
        for _ in 0..20 {
            let x = p.random_element(&mut rng, 5);
            let cp = p.charpolys(&x).unwrap();
            ensure!(
                cp.bridge_holds(),
                "{name}: t^s cf != t^r cg at {:?}",
                x.coords()
            );
        }
    }
    Ok(format!(
        "t^s·cf = t^r·cg on 20 random points of each of {} pairs",
        pairs.len()
    ))
}

fn norm_sq(x: &PElement) -> Rational {
    x.coords()
        .iter()
        .fold(Rational::zero(), |acc, c| acc + c * c)
}

fn criterion_3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for p_dim in [3usize, 4] {
        let p = pair(&format!("sopq:{p_dim},1"));
        for _ in 0..20 {
            let x = p.random_element(&mut rng, 5);
            let n2 = norm_sq(&x);
            let want = UPoly::linear_factor(n2.clone())
                .pow(p_dim as u32 - 1)
                .shift(1);
            ensure!(
                p.charpolys(&x).unwrap().cf == want,
                "sopq:{p_dim},1 cf at {:?}",
                x.coords()
            );
            let d = p.discriminant(&x, Route::CoeffF).unwrap();
            ensure!(
                d == Ring::pow(&n2, p_dim as u32 - 1),
                "sopq:{p_dim},1 D at {:?}",
                x.coords()
            );
        }
    }
    for q in [2usize, 3] {
        let p = pair(&format!("sopq:{q},{q}"));
        for _ in 0..10 {
            let a = p.random_cartan(&mut rng, 5);
            let mut want = UPoly::one();
            for i in 0..q {
                for j in i + 1..q {
                    let (d, s) = (&a[i] - &a[j], &a[i] + &a[j]);
                    want = &want * &UPoly::linear_factor(&d * &d);
                    want = &want * &UPoly::linear_factor(&s * &s);
                }
            }
            let x = p.cartan_element(&a).unwrap();
            ensure!(
                p.charpolys(&x).unwrap().cg == want,
                "sopq:{q},{q} cg at {a:?}"
            );
        }
    }
    for n in [2, 3] {
        let p = pair(&format!("glnc:{n}"));
        for _ in 0..10 {
            let cp = p.charpolys(&p.random_element(&mut rng, 5)).unwrap();
            ensure!(cp.cf == cp.cg, "glnc:{n}: cf != cg");
        }
    }
    Ok("so(3,1), so(4,1) on all of 𝔭; so(2,2), so(3,3) on 𝔞; gl(2,ℂ), gl(3,ℂ) cf = cg".into())
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let specs = [
        "glnr:2", "glnr:3", "glnr:4", "glnc:2", "glnc:3", "sopq:3,1", "sopq:4,1", "sopq:2,2",
        "sopq:3,3",
    ];
    for name in specs {
        let p = pair(name);
        let datum = p.root_datum().unwrap();
        ensure!(!datum.derived, "{name}: root datum should be tabulated");
        let mut done = 0;
        while done < 10 {
            let a = p.random_cartan(&mut rng, 6);
            if datum.positive_roots.iter().any(|r| r.eval(&a).is_zero()) {
                continue;
            }
            let x = p.cartan_element(&a).unwrap();
            let cp = p.charpolys(&x).unwrap();
            let [cf, cg, cad] = p.root_factored_charpoly(&a).unwrap();
            ensure!(
                cp.cf == cf && cp.cg == cg,
                "{name}: charpolys differ from root factorization at {a:?}"
            );
            ensure!(
                charpoly(&p.operators(&x).unwrap().ad()).unwrap() == cad,
                "{name}: ad x at {a:?}"
            );
            done += 1;
        }
    }
    Ok(format!(
        "cf, cg and det(t − ad x) match the root products at 10 regular points of {} pairs",
        specs.len()
    ))
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut checked = 0;
    for name in sampled_pairs() {
        let p = pair(name);
        let mut points: Vec<PElement> = (0..8).map(|_| p.random_element(&mut rng, 4)).collect();
        points.push(p.zero_element());
        // singular Cartan points: repeated, zero and opposite coordinates
        let l = p.l();
        let mut repeated = vec![rat(2); l];
        repeated[0] = rat(1);
        points.push(p.cartan_element(&repeated).unwrap());
        let mut single = vec![rat(0); l];
        single[0] = rat(3);
        points.push(p.cartan_element(&single).unwrap());
        let mut opposite: Vec<Rational> = (1..=l as i64).map(rat).collect();
        opposite[0] = -&opposite[l - 1];
        points.push(p.cartan_element(&opposite).unwrap());
        for x in &points {
            let cp = p.charpolys(x).unwrap();
            let rank = p.orbit_dim(x).unwrap();
            for k in 1..=p.r() {
                let pk = cp.p(k);
                ensure!(
                    pk.is_zero() == (rank < k),
                    "{name}: P_{k} = {pk} but rank A = {rank} at {:?}",
                    x.coords()
                );
            }
            checked += 1;
        }
    }
    Ok(format!(
        "P_k = 0 exactly when rank A(x) < k at {checked} points, including singular ones"
    ))
}

fn binary() -> PathBuf {
    PathBuf::from(env!("CARGO_BIN_EXE_symdisc"))
}

fn cli(args: &[&str]) -> (i32, String) {
    let out = Command::new(binary())
        .args(args)
        .output()
        .expect("run symdisc");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
    )
}

fn criterion_6() -> Outcome {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("acceptance-certs");
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let emit: Vec<(&str, Vec<&str>)> = vec![
        (
            "ilyushechkin-real",
            vec![
                "sos",
                "--kind",
                "ilyushechkin",
                "--matrix",
                r#"[[2,1,0],[1,"-1/2",3],[0,3,1]]"#,
            ],
        ),
        (
            "ilyushechkin-complex",
            vec![
                "sos",
                "--kind",
                "ilyushechkin",
                "--matrix",
                r#"[[1,[2,1]],[[2,-1],3]]"#,
            ],
        ),
        (
            "symmetric-basis",
            vec![
                "sos",
                "--kind",
                "symmetric-basis",
                "--matrix",
                r#"[[2,1,0],[1,"-1/2",3],[0,3,1]]"#,
            ],
        ),
        (
            "pk-glnr",
            vec![
                "sos",
                "--kind",
                "pk",
                "--pair",
                "glnr:3",
                "--x",
                r#"[1,2,"1/2",3,-1,2]"#,
                "--k",
                "3",
            ],
        ),
        (
            "pk-sopq",
            vec![
                "sos",
                "--kind",
                "pk",
                "--pair",
                "sopq:3,2",
                "--x",
                "[1,2,3,-1,0,2]",
                "--k",
                "2",
            ],
        ),
        (
            "pk-glnc",
            vec![
                "sos",
                "--kind",
                "pk",
                "--pair",
                "glnc:2",
                "--x",
                "[1,2,3,-1]",
                "--k",
                "2",
            ],
        ),
        ("rudin", vec!["rudin", "--k", "3", "--n", "3"]),
        (
            "rudin-lifted",
            vec!["rudin", "--k", "2", "--n", "2", "--lift", "2"],
        ),
    ];
    for (name, args) in &emit {
        let (code, text) = cli(args);
        ensure!(code == 0, "{name}: emitting exited {code}");
        let (_, again) = cli(args);
        ensure!(text == again, "{name}: output is not byte-stable");
        let path = dir.join(format!("{name}.json"));
        std::fs::write(&path, &text).map_err(|e| e.to_string())?;
        let (code, _) = cli(&["verify", path.to_str().unwrap()]);
        ensure!(code == 0, "{name}: verify exited {code}");

        let mut doc: serde_json::Value = serde_json::from_str(&text).unwrap();
        let terms = doc["terms"].as_array_mut().unwrap();
        let victim = terms
            .iter()
            .position(|t| {
                t["witness"] != "0/1" && t["witness"] != serde_json::json!({"modsq": "0/1"})
            })
            .ok_or(format!("{name}: no nonzero witness to perturb"))?;
        let w = symdisc::algebra::parse_rational(terms[victim]["weight"].as_str().unwrap())
            .unwrap()
            + rat(1);
        terms[victim]["weight"] = serde_json::json!(symdisc::algebra::format_rational(&w));
        let bad = dir.join(format!("{name}-mutated.json"));
        std::fs::write(&bad, serde_json::to_string_pretty(&doc).unwrap())
            .map_err(|e| e.to_string())?;
        let (code, _) = cli(&["verify", bad.to_str().unwrap()]);
        ensure!(
            code == 1,
            "{name}: mutated certificate gave exit {code}, expected 1"
        );
    }
    Ok(format!(
        "{} emitted certificates verify in a separate process; each weight+1 mutation exits 1",
        emit.len()
    ))
}

fn criterion_7() -> Outcome {
    let counts: Vec<u64> = (2..=4).map(symmetric_minor_count).collect();
    ensure!(counts == [3, 20, 210], "symmetric minor counts {counts:?}");
    ensure!(dim_h(3, 3) == 7, "dim H(3,3) = {}", dim_h(3, 3));
    ensure!(dim_p(3, 3) == 10, "dim P(3,3) = {}", dim_p(3, 3));
    let cert = sos::rudin_certificate(2, 2).unwrap();
    let weights: Vec<Rational> = cert.terms.iter().map(|t| t.weight.clone()).collect();
    ensure!(
        weights == [rat(1), rat(2), rat(1)],
        "rudin(2,2) weights {weights:?}"
    );
    Ok("counts 3, 20, 210; dim H(3,3) = 7; dim P(3,3) = 10; rudin(2,2) weights 1, 2, 1".into())
}

fn product_of_differences(l: usize, square: bool) -> MPoly {
    let mut acc = MPoly::one(l);
    for i in 0..l {
        for j in i + 1..l {
            let (a, b) = (MPoly::var(l, i), MPoly::var(l, j));
            let factor = if square {
                &(&a * &a) - &(&b * &b)
            } else {
                &a - &b
            };
            acc = &acc * &factor;
        }
    }
    acc
}

fn criterion_8() -> Outcome {
    for (name, want) in [
        ("glnr:3", product_of_differences(3, false)),
        ("glnr:4", product_of_differences(4, false)),
        ("sopq:3,3", product_of_differences(3, true)),
    ] {
        let j = jacobian_on_a(&pair(name));
        ensure!(j == want || j == -&want, "{name}: J = {j}");
    }
    let specs = [
        "glnr:2", "glnr:3", "glnr:4", "glnc:2", "glnc:3", "sopq:2,1", "sopq:3,1", "sopq:4,1",
        "sopq:2,2", "sopq:3,3", "sopq:3,2", "sopq:4,2",
    ];
    for name in specs {
        let p = pair(name);
        let j = jacobian_on_a(&p);
        let (_, reflections) = weyl_arithmetic(p.id());
        ensure!(
            j.total_degree() == Some(reflections),
            "{name}: deg J = {:?}, Σ(d_j − 1) = {reflections}",
            j.total_degree()
        );
    }
    Ok(format!("J = ±Vandermonde for gl(3,ℝ), gl(4,ℝ); J = ±∏(x_i² − x_j²) for so(3,3); deg J = Σ(d_j − 1) on {} pairs", specs.len()))
}

fn criterion_9() -> Outcome {
    let maximal = [
        "glnr:2", "glnr:3", "glnr:4", "sopq:2,2", "sopq:3,3", "sopq:4,4", "sopq:2,1", "sopq:3,2",
        "sopq:4,3",
    ];
    let not_maximal = ["glnc:2", "glnc:3", "sopq:3,1", "sopq:4,1", "sopq:5,1"];
    for name in maximal {
        ensure!(
            pair(name).is_rank_maximal(),
            "{name} should be rank-maximal"
        );
    }
    for name in not_maximal {
        ensure!(
            !pair(name).is_rank_maximal(),
            "{name} should not be rank-maximal"
        );
    }
    let mut constants = Vec::new();
    for name in [
        "glnr:2", "glnr:3", "glnr:4", "sopq:2,2", "sopq:3,3", "sopq:2,1", "sopq:3,2",
    ] {
        let c = compare_d_phi(&pair(name), 9, 10).unwrap();
        ensure!(
            c.full_samples.len() == 10,
            "{name}: expected 10 samples in 𝔭"
        );
        let ratio = c.ratio.ok_or(format!("{name}: D/φ is not constant"))?;
        ensure!(ratio > rat(0), "{name}: D/φ = {ratio} is not positive");
        constants.push(format!("{name}: {ratio}"));
    }
    for name in not_maximal {
        let c = compare_d_phi(&pair(name), 9, 5).unwrap();
        ensure!(c.ratio.is_none(), "{name}: D/φ unexpectedly constant");
        ensure!(c.factored.is_some(), "{name}: missing factored report");
    }
    Ok(format!(
        "classification matches; D/φ constant ({}); non-constant with root report on the rest",
        constants.join(", ")
    ))
}

fn criterion_10() -> String {
    format!(
        "minimal square count for n = 3 is not searched for; only the bound dim H(3,3) = {} is reproduced",
        dim_h(3, 3)
    )
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("cross-route discriminant agreement", criterion_1),
        ("char-poly bridge", criterion_2),
        ("closed-form oracles", criterion_3),
        ("root factorization", criterion_4),
        ("orbit/vanishing law", criterion_5),
        ("certificate validity", criterion_6),
        ("minor counts and dimensions", criterion_7),
        ("Jacobian identities", criterion_8),
        ("rank-maximality and D vs φ", criterion_9),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            Err(e
                .downcast_ref::<String>()
                .cloned()
                .or(e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default())
        });
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "criterion 10 EXCLUDED  minimal SOS length: {}",
        criterion_10()
    );
    if failures > 0 {
        println!("{failures} criteria failed");
        std::process::exit(1);
    }
}
