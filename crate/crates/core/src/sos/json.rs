//! `sos-cert/1` JSON documents.
//!
//! Rationals are strings `"p/q"`; a polynomial is a list of
//! `[exponents, "p/q"]` pairs in ascending lexicographic order, with its
//! arity in `params.arity`; a complex witness is `{"modsq": "p/q"}`.

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use super::certificate::{Kind, SosCertificate, Target, Term, Witness};
use crate::algebra::{format_rational, parse_rational, MPoly, Rational};
use crate::error::{Error, Result};

pub const SCHEMA: &str = "sos-cert/1";

#[derive(Serialize, Deserialize)]
struct Document {
    schema: String,
    kind: String,
    params: Map<String, Value>,
    target: Value,
    terms: Vec<TermDoc>,
    convention: Map<String, Value>,
}

#[derive(Serialize, Deserialize)]
struct TermDoc {
    weight: String,
    witness: Value,
    index: Vec<usize>,
}

fn poly_to_json(p: &MPoly) -> Value {
    Value::Array(
        p.terms()
            .map(|(e, c)| json!([e, format_rational(c)]))
            .collect(),
    )
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Certificate(msg.into())
}

fn rational_from_json(v: &Value) -> Result<Rational> {
    let s = v
        .as_str()
        .ok_or_else(|| bad(format!("expected a \"p/q\" string, got {v}")))?;
    parse_rational(s).map_err(|e| bad(e.to_string()))
}

fn poly_from_json(v: &Value, arity: usize) -> Result<MPoly> {
    let terms = v
        .as_array()
        .ok_or_else(|| bad("polynomial must be a list of terms"))?;
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let pair: (Vec<u32>, Value) = serde_json::from_value(t.clone())
            .map_err(|_| bad(format!("bad polynomial term {t}")))?;
        if pair.0.len() != arity {
            return Err(bad(format!(
                "exponent vector {:?} does not have arity {arity}",
                pair.0
            )));
        }
        out.push((pair.0, rational_from_json(&pair.1)?));
    }
    Ok(MPoly::from_terms(arity, out))
}

fn document(cert: &SosCertificate) -> Document {
    let target = match &cert.target {
        Target::Scalar(q) => json!(format_rational(q)),
        Target::Poly(p) => poly_to_json(p),
    };
    let terms = cert
        .terms
        .iter()
        .map(|t| TermDoc {
            weight: format_rational(&t.weight),
            witness: match &t.witness {
                Witness::Scalar(q) => json!(format_rational(q)),
                Witness::ModulusSq(q) => json!({ "modsq": format_rational(q) }),
                Witness::Poly(p) => poly_to_json(p),
            },
            index: t.index.clone(),
        })
        .collect();
    Document {
        schema: SCHEMA.into(),
        kind: cert.kind.name().into(),
        params: cert.params.clone(),
        target,
        terms,
        convention: cert.convention.clone(),
    }
}

/// The document as a JSON value, fields in schema order.
pub fn to_json(cert: &SosCertificate) -> Value {
    serde_json::to_value(document(cert)).expect("certificate serializes")
}

/// Pretty-printed document with a trailing newline.
pub fn to_string(cert: &SosCertificate) -> String {
    let mut s = serde_json::to_string_pretty(&document(cert)).expect("certificate serializes");
    s.push('\n');
    s
}

pub fn from_str(text: &str) -> Result<SosCertificate> {
    let doc: Document = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    if doc.schema != SCHEMA {
        return Err(bad(format!("unsupported schema {:?}", doc.schema)));
    }
    let kind: Kind = doc.kind.parse().map_err(|e: Error| bad(e.to_string()))?;
    let arity = match doc.params.get("arity") {
        Some(a) => Some(
            a.as_u64()
                .ok_or_else(|| bad("params.arity must be an integer"))? as usize,
        ),
        None => None,
    };
    let poly = |v: &Value| -> Result<MPoly> {
        poly_from_json(
            v,
            arity.ok_or_else(|| bad("polynomial certificate without params.arity"))?,
        )
    };
    let target = match &doc.target {
        Value::String(_) => Target::Scalar(rational_from_json(&doc.target)?),
        Value::Array(_) => Target::Poly(poly(&doc.target)?),
        other => return Err(bad(format!("bad target {other}"))),
    };
    let terms = doc
        .terms
        .iter()
        .map(|t| {
            let witness = match &t.witness {
                Value::String(_) => Witness::Scalar(rational_from_json(&t.witness)?),
                Value::Array(_) => Witness::Poly(poly(&t.witness)?),
                Value::Object(o) if o.len() == 1 && o.contains_key("modsq") => {
                    Witness::ModulusSq(rational_from_json(&o["modsq"])?)
                }
                other => return Err(bad(format!("bad witness {other}"))),
            };
            Ok(Term {
                weight: parse_rational(&t.weight).map_err(|e| bad(e.to_string()))?,
                witness,
                index: t.index.clone(),
            })
        })
        .collect::<Result<_>>()?;
    Ok(SosCertificate {
        kind,
        params: doc.params,
        target,
        terms,
        convention: doc.convention,
    })
}
