//! The `symdisc` command line.
//!
//! Every command prints one JSON document on stdout. Exit status 0 means
//! success, 1 a failed verification or a disagreement between routes, 2 a
//! usage or input error; in the last case stderr gets one JSON line
//! `{"error": kind, "message": text}`.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::algebra::{
    charpoly, format_rational, hankel_power_trace_det, parse_rational, poly_discriminant,
    GaussRational, Mat, Rational, UPoly,
};
use crate::error::{Error, Result};
use crate::invariants::{compare_d_phi, weyl_arithmetic, Comparison, Sample};
use crate::sos::{self, Verdict};
use crate::sympair::{generator_degrees, PElement, PairData, PairId, Route};

#[derive(Parser, Debug)]
#[command(
    name = "symdisc",
    version,
    about = "Exact discriminants of symmetric pairs and their SOS certificates"
)]
struct Cli {
    /// Worker threads for minor enumeration (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Discriminant of x by every applicable route, checked for agreement.
    Disc {
        #[arg(long)]
        pair: PairId,
        /// Coordinates: a JSON array, a JSON matrix, or diag(a,b,...) on 𝔞.
        #[arg(long)]
        x: String,
        /// `all` or one of coeff-f, coeff-g, det-g, root-product.
        #[arg(long, default_value = "all")]
        route: String,
    },
    /// Characteristic polynomials of f(x) and g(x).
    Charpoly {
        #[arg(long)]
        pair: PairId,
        #[arg(long)]
        x: String,
    },
    /// Dimensions, rank-maximality and root datum of a pair.
    Pair {
        #[arg(long)]
        pair: PairId,
    },
    /// Emit a sum-of-squares certificate.
    Sos {
        #[arg(long, value_enum)]
        kind: SosKind,
        /// JSON matrix (ilyushechkin, symmetric-basis).
        #[arg(long)]
        matrix: Option<String>,
        /// Pair and point (pk).
        #[arg(long)]
        pair: Option<PairId>,
        #[arg(long)]
        x: Option<String>,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Certificate for (x₁² + … + x_n²)^k.
    Rudin {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        /// Apply the lifting step this many times.
        #[arg(long, default_value_t = 0)]
        lift: usize,
    },
    /// Re-check a certificate file (`-` reads stdin).
    Verify { file: PathBuf },
    /// Compare D with φ = ‖∇p₁ ∧ … ∧ ∇p_l‖².
    Compare {
        #[arg(long)]
        pair: PairId,
        #[arg(long, default_value_t = 5)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SosKind {
    Ilyushechkin,
    SymmetricBasis,
    Pk,
}

/// Output of a command: the JSON document and whether its check passed.
struct Outcome {
    doc: Value,
    ok: bool,
}

fn passed(doc: Value) -> Outcome {
    Outcome { doc, ok: true }
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(
        args,
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    )
}

pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(out, "{e}");
            return 0;
        }
        Err(e) => {
            let message = e.to_string();
            let first = message
                .lines()
                .next()
                .unwrap_or_default()
                .trim_start_matches("error: ");
            return fail(err, "usage", first);
        }
    };
    let result = match cli.threads {
        Some(n) => match rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
        {
            Ok(pool) => pool.install(|| dispatch(cli.command)),
            Err(e) => return fail(err, "usage", &e.to_string()),
        },
        None => dispatch(cli.command),
    };
    match result {
        Ok(outcome) => {
            let text = serde_json::to_string_pretty(&outcome.doc).expect("serializable output");
            let _ = writeln!(out, "{text}");
            if outcome.ok {
                0
            } else {
                1
            }
        }
        Err(e) => fail(err, e.kind(), &e.to_string()),
    }
}

fn fail(err: &mut dyn Write, kind: &str, message: &str) -> i32 {
    let _ = writeln!(err, "{}", json!({ "error": kind, "message": message }));
    2
}

fn dispatch(command: Command) -> Result<Outcome> {
    match command {
        Command::Disc { pair, x, route } => disc(pair, &x, &route),
        Command::Charpoly { pair, x } => charpolys(pair, &x),
        Command::Pair { pair } => pair_info(pair).map(passed),
        Command::Sos {
            kind,
            matrix,
            pair,
            x,
            k,
        } => sos_cert(kind, matrix, pair, x, k).map(passed),
        Command::Rudin { k, n, lift } => {
            let mut cert = sos::rudin_certificate(k, n)?;
            for _ in 0..lift {
                cert = sos::lift(&cert)?;
            }
            Ok(passed(sos::json::to_json(&cert)))
        }
        Command::Verify { file } => verify(&file),
        Command::Compare {
            pair,
            samples,
            seed,
        } => {
            let pair = PairData::build(pair)?;
            Ok(passed(comparison_json(&compare_d_phi(
                &pair,
                seed,
                samples.max(1),
            )?)))
        }
    }
}

fn q(r: &Rational) -> Value {
    json!(format_rational(r))
}

fn qs(rs: &[Rational]) -> Value {
    Value::Array(rs.iter().map(q).collect())
}

fn scalar(v: &Value) -> Result<Rational> {
    match v {
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(crate::algebra::rat(i)),
            None if n.is_u64() => parse_rational(&n.to_string()),
            None => Err(Error::Parse(format!(
                "floating-point value {n} is not accepted; use \"p/q\""
            ))),
        },
        Value::String(s) => parse_rational(s),
        other => Err(Error::Parse(format!(
            "expected an integer or \"p/q\", got {other}"
        ))),
    }
}

fn gaussian(v: &Value) -> Result<GaussRational> {
    match v {
        Value::Array(parts) if parts.len() == 2 => {
            Ok(GaussRational::new(scalar(&parts[0])?, scalar(&parts[1])?))
        }
        other => Ok(GaussRational::real(scalar(other)?)),
    }
}

fn matrix_from_json(v: &Value) -> Result<Mat<GaussRational>> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::Parse("matrix must be a JSON array of rows".into()))?;
    let rows = rows
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| Error::Parse("matrix rows must be arrays".into()))?
                .iter()
                .map(gaussian)
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Mat::from_rows(rows)
}

fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("malformed JSON: {e}")))
}

/// `diag(a, b, …)`, a flat JSON array of 𝔭-coordinates, or a JSON matrix.
fn parse_element(pair: &PairData, text: &str) -> Result<PElement> {
    let text = text.trim();
    if let Some(inner) = text.strip_prefix("diag(").and_then(|s| s.strip_suffix(')')) {
        let coords = inner
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()?;
        return pair.cartan_element(&coords);
    }
    let v = parse_json(text)?;
    match v.as_array() {
        Some(items) if items.iter().all(|i| !i.is_array()) => {
            pair.element(items.iter().map(scalar).collect::<Result<_>>()?)
        }
        Some(_) => pair.element_from_matrix(&matrix_from_json(&v)?),
        None => Err(Error::Parse("--x must be a JSON array or diag(...)".into())),
    }
}

fn classical_routes(pair: &PairData, x: &PElement) -> Result<Vec<(&'static str, Rational)>> {
    if !matches!(pair.id(), PairId::GlnR(_)) {
        return Ok(Vec::new());
    }
    let m = pair.matrix(x);
    Ok(vec![
        ("resultant", poly_discriminant(&charpoly(&m)?)?),
        ("hankel", hankel_power_trace_det(&m)?),
    ])
}

fn disc(id: PairId, x: &str, route: &str) -> Result<Outcome> {
    let pair = PairData::build(id)?;
    let x = parse_element(&pair, x)?;
    let mut values: Vec<(&str, Rational)> = if route == "all" {
        let mut v: Vec<_> = pair
            .discriminants(&x)?
            .into_iter()
            .map(|(r, d)| (r.name(), d))
            .collect();
        v.extend(classical_routes(&pair, &x)?);
        v
    } else {
        let r: Route = route.parse()?;
        vec![(r.name(), pair.discriminant(&x, r)?)]
    };
    values.sort_by(|a, b| a.0.cmp(b.0));
    let agree = values.windows(2).all(|w| w[0].1 == w[1].1);
    let routes: Map<String, Value> = values.iter().map(|(k, v)| (k.to_string(), q(v))).collect();
    Ok(Outcome {
        doc: json!({
            "pair": id.to_string(),
            "x": qs(x.coords()),
            "routes": routes,
            "agree": agree,
        }),
        ok: agree,
    })
}

fn poly_json(p: &UPoly) -> Value {
    json!({ "text": p.to_string(), "coeffs": qs(p.coeffs()) })
}

fn charpolys(id: PairId, x: &str) -> Result<Outcome> {
    let pair = PairData::build(id)?;
    let x = parse_element(&pair, x)?;
    let cp = pair.charpolys(&x)?;
    let bridge = cp.bridge_holds();
    let p: Vec<Rational> = (1..=pair.r()).map(|k| cp.p(k)).collect();
    let qv: Vec<Rational> = (1..=pair.s()).map(|k| cp.q(k)).collect();
    Ok(Outcome {
        doc: json!({
            "pair": id.to_string(),
            "x": qs(x.coords()),
            "cf": poly_json(&cp.cf),
            "cg": poly_json(&cp.cg),
            "P": qs(&p),
            "Q": qs(&qv),
            "orbit_dim": pair.orbit_dim(&x)?,
            "bridge": bridge,
        }),
        ok: bridge,
    })
}

fn pair_info(id: PairId) -> Result<Value> {
    let pair = PairData::build(id)?;
    let (order, reflections) = weyl_arithmetic(id);
    let datum = pair.root_datum().map(|d| {
        json!({
            "derived": d.derived,
            "positive_roots": d.positive_roots.iter().map(|r| json!({
                "form": r.form,
                "multiplicity": r.multiplicity,
            })).collect::<Vec<_>>(),
            "centralizer_dim": d.centralizer_dim,
            "exponents": d.exponents,
            "weyl_order": d.weyl_order,
        })
    });
    Ok(json!({
        "pair": id.to_string(),
        "r": pair.r(),
        "s": pair.s(),
        "l": pair.l(),
        "alpha": pair.alpha(),
        "rank_maximal": pair.is_rank_maximal(),
        "inner_product_scale": q(pair.form_scale()),
        "p_weights": qs(pair.p_weights()),
        "k_weights": qs(pair.k_weights()),
        "generator_degrees": generator_degrees(id),
        "weyl_order": order,
        "reflections": reflections,
        "root_datum": datum,
    }))
}

fn require<T>(v: Option<T>, flag: &str, kind: &str) -> Result<T> {
    v.ok_or_else(|| Error::Parse(format!("--{flag} is required for --kind {kind}")))
}

fn sos_cert(
    kind: SosKind,
    matrix: Option<String>,
    pair: Option<PairId>,
    x: Option<String>,
    k: Option<usize>,
) -> Result<Value> {
    let cert = match kind {
        SosKind::Ilyushechkin | SosKind::SymmetricBasis => {
            let name = if matches!(kind, SosKind::Ilyushechkin) {
                "ilyushechkin"
            } else {
                "symmetric-basis"
            };
            let m = matrix_from_json(&parse_json(&require(matrix, "matrix", name)?)?)?;
            let real = m.entries().iter().all(GaussRational::is_real);
            match (kind, real) {
                (SosKind::Ilyushechkin, true) => {
                    sos::ilyushechkin_certificate(&m.map(|z| z.re.clone()))?
                }
                (SosKind::Ilyushechkin, false) => sos::ilyushechkin_certificate_gauss(&m)?,
                (_, true) => sos::symmetric_basis_certificate(&m.map(|z| z.re.clone()))?,
                (_, false) => {
                    return Err(Error::Precondition(
                        "symmetric-basis needs a real matrix".into(),
                    ))
                }
            }
        }
        SosKind::Pk => {
            let pair = PairData::build(require(pair, "pair", "pk")?)?;
            let x = parse_element(&pair, &require(x, "x", "pk")?)?;
            sos::pk_certificate(&pair, &x, require(k, "k", "pk")?)?
        }
    };
    Ok(sos::json::to_json(&cert))
}

fn verify(file: &PathBuf) -> Result<Outcome> {
    let text = if file.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(file)
    }
    .map_err(|e| Error::Parse(format!("cannot read {}: {e}", file.display())))?;
    let cert = sos::json::from_str(&text)?;
    let verdict = sos::verify(&cert);
    let mut doc = json!({
        "kind": cert.kind.name(),
        "terms": cert.terms.len(),
        "valid": verdict.is_valid(),
    });
    if let Verdict::Invalid(reason) = &verdict {
        doc["reason"] = json!(reason);
    }
    Ok(Outcome {
        doc,
        ok: verdict.is_valid(),
    })
}

fn sample_json(s: &Sample) -> Value {
    json!({ "x": qs(&s.coords), "D": q(&s.d), "phi": q(&s.phi) })
}

fn comparison_json(c: &Comparison) -> Value {
    let mut doc = json!({
        "pair": c.pair.to_string(),
        "rank_maximal": c.rank_maximal,
        "ratio": c.ratio.as_ref().map_or(json!("non-constant"), q),
        "cartan_samples": c.cartan_samples.iter().map(sample_json).collect::<Vec<_>>(),
        "full_samples": c.full_samples.iter().map(sample_json).collect::<Vec<_>>(),
    });
    if let Some(f) = &c.factored {
        doc["factored"] = json!({
            "phi_on_a": format!("{} * prod lambda(x)^2", format_rational(&f.phi_constant)),
            "D_on_a": "prod lambda(x)^(2 mu)",
            "roots": f.roots.iter().map(|r| json!({
                "form": r.form,
                "multiplicity": r.multiplicity,
                "exponent_in_phi": 2,
                "exponent_in_D": 2 * r.multiplicity,
            })).collect::<Vec<_>>(),
        });
    }
    doc
}
