//! JSON encodings, all tagged `"schema": "palinform/1"`.
//!
//! Exact coefficients are `[re, im]` pairs of decimal strings such as
//! `"21/20"`; float coefficients are pairs of numbers. On input a bare
//! number or string is read as a real coefficient.

use num_complex::Complex64;
use serde_json::{json, Map, Value};

use crate::codes::WeightEnumerator;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::reduction::BinaryForm;
use crate::scalar::{format_rational, parse_rational, ImagQuad, Scalar};

pub const SCHEMA: &str = "palinform/1";

/// A scalar with a JSON encoding.
pub trait JsonScalar: Scalar {
    const MODE: &'static str;
    fn field() -> Option<String>;
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;
}

fn bad(v: &Value) -> Error {
    Error::Parse(format!("not a coefficient: {v}"))
}

fn real_text(v: &Value) -> Result<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        _ => Err(bad(v)),
    }
}

fn pair(v: &Value) -> Result<(&Value, Option<&Value>)> {
    match v {
        Value::Array(a) if a.len() == 2 => Ok((&a[0], Some(&a[1]))),
        Value::Array(_) => Err(bad(v)),
        other => Ok((other, None)),
    }
}

impl<const D: i64> JsonScalar for ImagQuad<D> {
    const MODE: &'static str = "exact";

    fn field() -> Option<String> {
        Some(Self::field_name())
    }

    fn to_json(&self) -> Value {
        json!([format_rational(&self.re), format_rational(&self.im)])
    }

    fn from_json(v: &Value) -> Result<Self> {
        let (re, im) = pair(v)?;
        let re = parse_rational(&real_text(re)?)?;
        let im = match im {
            Some(x) => parse_rational(&real_text(x)?)?,
            None => crate::scalar::int(0),
        };
        Ok(ImagQuad::new(re, im))
    }
}

fn float_of(v: &Value) -> Result<f64> {
    match v {
        Value::Number(n) => n.as_f64().ok_or_else(|| bad(v)),
        Value::String(s) => s
            .parse::<f64>()
            .or_else(|_| parse_rational(s).map(|r| crate::scalar::rational_to_f64(&r)))
            .map_err(|_| bad(v)),
        _ => Err(bad(v)),
    }
}

impl JsonScalar for Complex64 {
    const MODE: &'static str = "float";

    fn field() -> Option<String> {
        None
    }

    fn to_json(&self) -> Value {
        json!([self.re, self.im])
    }

    fn from_json(v: &Value) -> Result<Self> {
        let (re, im) = pair(v)?;
        Ok(Complex64::new(float_of(re)?, im.map(float_of).transpose()?.unwrap_or(0.0)))
    }
}

/// Prefix an object with the schema tag.
pub fn tagged(v: Value) -> Value {
    let mut out = Map::new();
    out.insert("schema".into(), Value::String(SCHEMA.into()));
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                if k != "schema" {
                    out.insert(k, x);
                }
            }
        }
        other => {
            out.insert("value".into(), other);
        }
    }
    Value::Object(out)
}

fn coeffs_value<S: JsonScalar>(c: &[S]) -> Value {
    Value::Array(c.iter().map(JsonScalar::to_json).collect())
}

fn header<S: JsonScalar>(kind: &str, coeffs: &[S]) -> Value {
    let mut m = Map::new();
    m.insert("schema".into(), Value::String(SCHEMA.into()));
    m.insert("kind".into(), Value::String(kind.into()));
    m.insert("mode".into(), Value::String(S::MODE.into()));
    if let Some(f) = S::field() {
        m.insert("field".into(), Value::String(f));
    }
    m.insert("coeffs".into(), coeffs_value(coeffs));
    Value::Object(m)
}

/// `{"schema", "kind": "polynomial", "mode", "coeffs"}`, low degree first.
pub fn poly_to_json<S: JsonScalar>(p: &Poly<S>) -> Value {
    header("polynomial", p.coeffs())
}

fn coeff_list<S: JsonScalar>(v: &Value) -> Result<Vec<S>> {
    let list = match v {
        Value::Array(a) => a,
        Value::Object(m) => match m.get("coeffs") {
            Some(Value::Array(a)) => a,
            _ => return Err(Error::Parse("missing \"coeffs\" array".into())),
        },
        _ => return Err(Error::Parse(format!("expected an array or object, got {v}"))),
    };
    if let Value::Object(m) = v {
        if let Some(s) = m.get("schema").and_then(Value::as_str) {
            if s != SCHEMA {
                return Err(Error::Parse(format!("unsupported schema {s:?}")));
            }
        }
    }
    list.iter().map(S::from_json).collect()
}

/// Accepts the tagged object or a bare coefficient array.
pub fn poly_from_json<S: JsonScalar>(v: &Value) -> Result<Poly<S>> {
    Ok(Poly::new(coeff_list(v)?))
}

/// Coefficient `i` multiplies `x^i y^(n-i)`.
pub fn form_to_json<S: JsonScalar>(f: &BinaryForm<S>) -> Value {
    header("binary_form", f.coeffs())
}

pub fn form_from_json<S: JsonScalar>(v: &Value) -> Result<BinaryForm<S>> {
    BinaryForm::new(coeff_list(v)?)
}

/// `{"schema", "n", "q", "A": [...]}`.
pub fn enumerator_to_json(f: &WeightEnumerator) -> Value {
    tagged(serde_json::to_value(f).expect("enumerator serializes"))
}

pub fn enumerator_from_json(v: &Value) -> Result<WeightEnumerator> {
    let q = v
        .get("q")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Parse("missing integer \"q\"".into()))?;
    let a = match v.get("A") {
        Some(Value::Array(a)) => a.iter().map(|x| real_text(x).and_then(|s| parse_rational(&s))).collect::<Result<Vec<_>>>()?,
        _ => return Err(Error::Parse("missing \"A\" array".into())),
    };
    let f = WeightEnumerator::new(q, a)?;
    if let Some(n) = v.get("n").and_then(Value::as_u64) {
        if n as usize != f.n {
            return Err(Error::Parse(format!("n = {n} needs {} entries in A, got {}", n + 1, f.n + 1)));
        }
    }
    Ok(f)
}

/// Error object for stderr: `{"schema", "error": {"code", "message"}}`.
pub fn error_to_json(e: &Error) -> Value {
    json!({ "schema": SCHEMA, "error": { "code": e.code(), "message": e.to_string() } })
}
