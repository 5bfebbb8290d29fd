use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use serde_json::{json, Value as Json};

use crate::closedform::InvariantId;
use crate::error::{MvError, Result};
use crate::exactalg::{format_rat, parse_rat, BiPoly, Rat, UniPoly};
use crate::matroid::elements;
use crate::oracle::{DenhamPoly, GInvariantVector};

/// The value of an invariant. Which variant an invariant uses is fixed by
/// [`ValueKind::of`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Rat(Rat),
    Int(BigInt),
    Uni(UniPoly),
    Bi(BiPoly),
    GInv(GInvariantVector),
    Denham(DenhamPoly),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ValueKind {
    Rat,
    Int,
    Uni,
    Bi,
    GInv,
    Denham,
}

impl ValueKind {
    pub fn of(id: InvariantId) -> ValueKind {
        match id {
            InvariantId::Volume => ValueKind::Rat,
            InvariantId::Beta => ValueKind::Int,
            InvariantId::Tutte | InvariantId::Spectrum => ValueKind::Bi,
            InvariantId::GInvariant => ValueKind::GInv,
            InvariantId::Denham => ValueKind::Denham,
            _ => ValueKind::Uni,
        }
    }
}

/// Variable names used when printing a polynomial value.
pub fn vars_of(id: InvariantId) -> (&'static str, &'static str) {
    match id {
        InvariantId::Tutte => ("x", "y"),
        InvariantId::Spectrum => ("t", "q"),
        InvariantId::ChainF | InvariantId::ChainH | InvariantId::HilbChow => ("x", "x"),
        _ => ("t", "t"),
    }
}

fn mismatch(op: &str) -> MvError {
    MvError::InvalidInput(format!("cannot {op} values of different kinds"))
}

impl Value {
    pub fn kind(&self) -> ValueKind {
        match self {
            Value::Rat(_) => ValueKind::Rat,
            Value::Int(_) => ValueKind::Int,
            Value::Uni(_) => ValueKind::Uni,
            Value::Bi(_) => ValueKind::Bi,
            Value::GInv(_) => ValueKind::GInv,
            Value::Denham(_) => ValueKind::Denham,
        }
    }

    pub fn add(&self, o: &Value) -> Result<Value> {
        Ok(match (self, o) {
            (Value::Rat(a), Value::Rat(b)) => Value::Rat(a + b),
            (Value::Int(a), Value::Int(b)) => Value::Int(a + b),
            (Value::Uni(a), Value::Uni(b)) => Value::Uni(a + b),
            (Value::Bi(a), Value::Bi(b)) => Value::Bi(a + b),
            (Value::GInv(a), Value::GInv(b)) if a.n == b.n => Value::GInv(a.combine(b, 1)),
            _ => return Err(mismatch("add")),
        })
    }

    pub fn sub(&self, o: &Value) -> Result<Value> {
        Ok(match (self, o) {
            (Value::Rat(a), Value::Rat(b)) => Value::Rat(a - b),
            (Value::Int(a), Value::Int(b)) => Value::Int(a - b),
            (Value::Uni(a), Value::Uni(b)) => Value::Uni(a - b),
            (Value::Bi(a), Value::Bi(b)) => Value::Bi(a - b),
            (Value::GInv(a), Value::GInv(b)) if a.n == b.n => Value::GInv(a.combine(b, -1)),
            _ => return Err(mismatch("subtract")),
        })
    }

    pub fn mul(&self, o: &Value) -> Result<Value> {
        Ok(match (self, o) {
            (Value::Rat(a), Value::Rat(b)) => Value::Rat(a * b),
            (Value::Int(a), Value::Int(b)) => Value::Int(a * b),
            (Value::Uni(a), Value::Uni(b)) => Value::Uni(a * b),
            (Value::Bi(a), Value::Bi(b)) => Value::Bi(a * b),
            _ => return Err(mismatch("multiply")),
        })
    }

    pub fn scale(&self, c: &BigInt) -> Result<Value> {
        let r = Rat::from_integer(c.clone());
        Ok(match self {
            Value::Rat(a) => Value::Rat(a * &r),
            Value::Int(a) => Value::Int(a * c),
            Value::Uni(a) => Value::Uni(a.scale(&r)),
            Value::Bi(a) => Value::Bi(a.scale(&r)),
            Value::GInv(a) => Value::GInv(a.scale(c)),
            Value::Denham(_) => return Err(MvError::InvalidInput("Denham polynomials are not combined linearly".into())),
        })
    }

    /// Deterministic text form. Polynomials list terms from the highest
    /// degree down; bivariate ones by descending first and ascending second
    /// exponent.
    pub fn to_text(&self, id: InvariantId) -> String {
        let (x, y) = vars_of(id);
        match self {
            Value::Rat(a) => format_rat(a),
            Value::Int(a) => a.to_string(),
            Value::Uni(p) => p.fmt_var(x),
            Value::Bi(p) => p.fmt_vars(x, y),
            Value::GInv(g) => g.to_string(),
            Value::Denham(d) => {
                if d.is_empty() {
                    return "0".into();
                }
                d.iter()
                    .map(|(f, c)| {
                        let labels: Vec<String> = elements(*f).map(|e| e.to_string()).collect();
                        format!("b{{{}}}: {}", labels.join(","), c.fmt_vars("x", "y"))
                    })
                    .collect::<Vec<_>>()
                    .join("; ")
            }
        }
    }

    pub fn to_json(&self) -> Json {
        match self {
            Value::Rat(a) => json!(format_rat(a)),
            Value::Int(a) => json!(a.to_string()),
            Value::Uni(p) => Json::Array(p.coeffs().iter().map(|c| json!(format_rat(c))).collect()),
            Value::Bi(p) => bi_json(p),
            Value::GInv(g) => {
                let w: serde_json::Map<String, Json> =
                    g.weights.iter().map(|(s, v)| (g.seq_str(*s), json!(v.to_string()))).collect();
                json!({ "n": g.n, "weights": w })
            }
            Value::Denham(d) => Json::Array(
                d.iter()
                    .map(|(f, c)| json!({ "flat": elements(*f).collect::<Vec<_>>(), "coeff": bi_json(c) }))
                    .collect(),
            ),
        }
    }

    pub fn from_json(kind: ValueKind, j: &Json) -> Result<Value> {
        let bad = || MvError::Parse(format!("malformed {kind:?} value: {j}"));
        Ok(match kind {
            ValueKind::Rat => Value::Rat(parse_rat(j.as_str().ok_or_else(bad)?)?),
            ValueKind::Int => Value::Int(j.as_str().ok_or_else(bad)?.parse().map_err(|_| bad())?),
            ValueKind::Uni => {
                let arr = j.as_array().ok_or_else(bad)?;
                let c = arr.iter().map(|c| parse_rat(c.as_str().ok_or_else(bad)?)).collect::<Result<Vec<_>>>()?;
                Value::Uni(UniPoly::new(c))
            }
            ValueKind::Bi => Value::Bi(bi_from_json(j)?),
            ValueKind::GInv => {
                let n = j.get("n").and_then(Json::as_u64).ok_or_else(bad)? as usize;
                let mut g = GInvariantVector::new(n);
                for (s, w) in j.get("weights").and_then(Json::as_object).ok_or_else(bad)? {
                    let w: BigInt = w.as_str().ok_or_else(bad)?.parse().map_err(|_| bad())?;
                    g.add(GInvariantVector::parse_seq(s)?, w);
                }
                Value::GInv(g)
            }
            ValueKind::Denham => {
                let mut d = DenhamPoly::new();
                for item in j.as_array().ok_or_else(bad)? {
                    let flat = item.get("flat").and_then(Json::as_array).ok_or_else(bad)?;
                    let mask = flat.iter().try_fold(0u64, |m, e| e.as_u64().filter(|&e| e < 64).map(|e| m | 1 << e))
                        .ok_or_else(bad)?;
                    d.insert(mask, bi_from_json(item.get("coeff").ok_or_else(bad)?)?);
                }
                Value::Denham(d)
            }
        })
    }

    /// Stable 64-bit digest of the canonical JSON encoding, for reports.
    pub fn digest(&self) -> String {
        let mut h = DefaultHasher::new();
        self.to_json().to_string().hash(&mut h);
        format!("{:016x}", h.finish())
    }
}

fn bi_json(p: &BiPoly) -> Json {
    let mut terms: Vec<(u32, u32, String)> = p.terms().map(|(a, b, c)| (a, b, format_rat(c))).collect();
    terms.sort();
    Json::Array(terms.into_iter().map(|(a, b, c)| json!([a, b, c])).collect())
}

fn bi_from_json(j: &Json) -> Result<BiPoly> {
    let bad = || MvError::Parse(format!("malformed bivariate polynomial: {j}"));
    let mut out = BiPoly::zero();
    for t in j.as_array().ok_or_else(bad)? {
        let t = t.as_array().filter(|t| t.len() == 3).ok_or_else(bad)?;
        let a = t[0].as_u64().ok_or_else(bad)? as u32;
        let b = t[1].as_u64().ok_or_else(bad)? as u32;
        out.add_term(a, b, parse_rat(t[2].as_str().ok_or_else(bad)?)?);
    }
    Ok(out)
}
