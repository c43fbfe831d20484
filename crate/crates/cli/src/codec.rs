//! JSON encodings of ring specs, elements, ideals and reports.
//!
//! Scalars are strings. Objects are emitted with sorted keys, so rendering
//! is canonical.

use ringinv_core::field::ScalarSpec;
use ringinv_core::geninv::{InverseReport, Outcome};
use ringinv_core::ideal::{IdealData, IdealLattice, Side};
use ringinv_core::oracle::VerificationReport;
use ringinv_core::ring::{ElemData, Involution, RingSpec};
use ringinv_core::{Error, Result};
use serde_json::{json, Map, Value};

/// Parses `zn:N`, `mNq`, `mNfP` (e.g. `m2f5`) or a JSON ring spec.
pub fn parse_ring(text: &str) -> Result<RingSpec> {
    let t = text.trim();
    if t.starts_with('{') {
        let v: Value = serde_json::from_str(t).map_err(|e| Error::Parse(format!("ring spec: {e}")))?;
        return ring_from_json(&v);
    }
    ring_from_shorthand(t)
}

pub fn ring_from_shorthand(t: &str) -> Result<RingSpec> {
    let bad = || Error::Parse(format!("unknown ring shorthand {t:?}; use zn:N, mNq, mNfP or a JSON spec"));
    let spec = if let Some(n) = t.strip_prefix("zn:") {
        RingSpec::Modular(n.parse().map_err(|_| bad())?)
    } else if let Some(rest) = t.strip_prefix('m') {
        let digits: String = rest.chars().take_while(|c| c.is_ascii_digit()).collect();
        let size: usize = digits.parse().map_err(|_| bad())?;
        let scalars = match &rest[digits.len()..] {
            "q" => ScalarSpec::Rationals,
            f => ScalarSpec::PrimeField(f.strip_prefix('f').and_then(|p| p.parse().ok()).ok_or_else(bad)?),
        };
        RingSpec::Matrix { size, scalars, involution: Involution::Transpose }
    } else {
        return Err(bad());
    };
    spec.validate()?;
    Ok(spec)
}

pub fn ring_from_json(v: &Value) -> Result<RingSpec> {
    if let Value::String(s) = v {
        return ring_from_shorthand(s);
    }
    let obj = v.as_object().ok_or_else(|| Error::Parse("ring spec must be an object or shorthand".into()))?;
    let kind = obj.get("kind").and_then(Value::as_str).unwrap_or("");
    let spec = match kind {
        "modular" => RingSpec::Modular(
            obj.get("modulus").and_then(Value::as_u64).ok_or_else(|| Error::Parse("modular ring needs an integer modulus".into()))?,
        ),
        "matrix" => {
            let size = obj.get("size").and_then(Value::as_u64).ok_or_else(|| Error::Parse("matrix ring needs a size".into()))?;
            let sc = obj.get("scalars").and_then(Value::as_object).ok_or_else(|| Error::Parse("matrix ring needs scalars".into()))?;
            let scalars = match sc.get("kind").and_then(Value::as_str) {
                Some("q") => ScalarSpec::Rationals,
                Some("fp") => ScalarSpec::PrimeField(
                    sc.get("p").and_then(Value::as_u64).ok_or_else(|| Error::Parse("fp scalars need p".into()))?,
                ),
                other => return Err(Error::Parse(format!("unknown scalar kind {other:?}"))),
            };
            let involution = match obj.get("involution").and_then(Value::as_str).unwrap_or("transpose") {
                "transpose" => Involution::Transpose,
                "none" => Involution::None,
                other => return Err(Error::Parse(format!("unknown involution {other:?}"))),
            };
            RingSpec::Matrix { size: size as usize, scalars, involution }
        }
        other => return Err(Error::Parse(format!("unknown ring kind {other:?}"))),
    };
    spec.validate()?;
    Ok(spec)
}

pub fn ring_to_json(spec: &RingSpec) -> Value {
    match spec {
        RingSpec::Modular(n) => json!({"kind": "modular", "modulus": n}),
        RingSpec::Matrix { size, scalars, involution } => json!({
            "kind": "matrix",
            "size": size,
            "scalars": match scalars {
                ScalarSpec::Rationals => json!({"kind": "q"}),
                ScalarSpec::PrimeField(p) => json!({"kind": "fp", "p": p}),
            },
            "involution": match involution {
                Involution::Transpose => "transpose",
                Involution::None => "none",
            },
        }),
    }
}

fn scalar_text(v: &Value) -> Result<String> {
    match v {
        Value::String(s) => Ok(s.trim().to_string()),
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(n.to_string()),
        _ => Err(Error::Parse(format!("scalar {v} must be a string or an integer"))),
    }
}

pub fn elem_data_from_json(v: &Value) -> Result<ElemData> {
    match v {
        Value::Array(rows) => rows
            .iter()
            .map(|row| match row {
                Value::Array(xs) => xs.iter().map(scalar_text).collect::<Result<Vec<_>>>(),
                _ => Err(Error::Parse("matrix rows must be arrays".into())),
            })
            .collect::<Result<Vec<_>>>()
            .map(ElemData::Matrix),
        _ => {
            let s = scalar_text(v)?;
            s.parse::<u64>().map(ElemData::Residue).map_err(|_| Error::Parse(format!("residue {s:?} is not a non-negative integer")))
        }
    }
}

pub fn elem_data_to_json(d: &ElemData) -> Value {
    match d {
        ElemData::Residue(v) => Value::String(v.to_string()),
        ElemData::Matrix(rows) => Value::Array(rows.iter().map(|r| Value::Array(r.iter().cloned().map(Value::String).collect())).collect()),
    }
}

pub fn parse_elem<R: IdealLattice>(r: &R, v: &Value) -> Result<R::Elem> {
    r.from_data(&elem_data_from_json(v)?)
}

pub fn elem<R: IdealLattice>(r: &R, x: &R::Elem) -> Value {
    elem_data_to_json(&r.to_data(x))
}

pub fn elems<R: IdealLattice>(r: &R, xs: &[R::Elem]) -> Value {
    Value::Array(xs.iter().map(|x| elem(r, x)).collect())
}

fn side_str(s: Side) -> &'static str {
    match s {
        Side::Right => "right",
        Side::Left => "left",
    }
}

pub fn ideal<R: IdealLattice>(r: &R, i: &R::Ideal) -> Value {
    let side = side_str(r.side_of(i));
    match r.ideal_to_data(i) {
        IdealData::Elements(es) => json!({"side": side, "elements": es.iter().map(elem_data_to_json).collect::<Vec<_>>()}),
        IdealData::Basis(b) => json!({"side": side, "basis": b}),
    }
}

/// Reads `{"principal": e}`, `{"annihilator": e}`, `{"set": [...]}`,
/// `{"colspace": [...]}` or `{"rowspace": [...]}`, with an optional
/// `"side"` that must agree with `side`. The rendered forms `"elements"`
/// and `"basis"` are read back too.
pub fn parse_ideal<R: IdealLattice>(r: &R, side: Side, v: &Value) -> Result<R::Ideal> {
    let obj = v.as_object().ok_or_else(|| Error::MalformedConstraint(format!("ideal {v} must be an object")))?;
    if let Some(s) = obj.get("side") {
        if s.as_str() != Some(side_str(side)) {
            return Err(Error::MalformedConstraint(format!("declared side {s} does not match the {} slot", side_str(side))));
        }
    }
    let keys: Vec<&str> = obj.keys().map(String::as_str).filter(|k| *k != "side").collect();
    let [key] = keys.as_slice() else {
        return Err(Error::MalformedConstraint(format!("ideal {v} needs exactly one of principal, annihilator, set, colspace, rowspace")));
    };
    let body = &obj[*key];
    match *key {
        "principal" => Ok(r.principal(&parse_elem(r, body)?, side)),
        "annihilator" => Ok(r.annihilator(&parse_elem(r, body)?, side)),
        "set" | "elements" => {
            let xs = body.as_array().ok_or_else(|| Error::MalformedConstraint("set must be an array".into()))?;
            let es = xs.iter().map(elem_data_from_json).collect::<Result<Vec<_>>>()?;
            r.ideal_from_data(side, &IdealData::Elements(es))
        }
        "colspace" | "rowspace" | "basis" => {
            let want = if side == Side::Right { "colspace" } else { "rowspace" };
            if *key != want && *key != "basis" {
                return Err(Error::MalformedConstraint(format!("{} ideals are given by {want}", side_str(side))));
            }
            let vs = body.as_array().ok_or_else(|| Error::MalformedConstraint(format!("{key} must be an array of vectors")))?;
            let basis = vs
                .iter()
                .map(|vec| match vec {
                    Value::Array(xs) => xs.iter().map(scalar_text).collect::<Result<Vec<_>>>(),
                    _ => Err(Error::MalformedConstraint("basis vectors must be arrays".into())),
                })
                .collect::<Result<Vec<_>>>()?;
            r.ideal_from_data(side, &IdealData::Basis(basis))
        }
        other => Err(Error::MalformedConstraint(format!("unknown ideal form {other:?}"))),
    }
}

/// An inverse report with `status` one of `found`, `family`, `none`.
pub fn inverse_report<R: IdealLattice>(r: &R, rep: &InverseReport<R>) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("subject".into(), elem(r, &rep.subject));
    match &rep.outcome {
        Outcome::Unique(x) => {
            m.insert("status".into(), "found".into());
            m.insert("result".into(), elem(r, x));
        }
        Outcome::Family { description, members } => {
            m.insert("status".into(), "family".into());
            m.insert("description".into(), description.clone().into());
            if let Some(ms) = members {
                m.insert("count".into(), ms.len().into());
                m.insert("members".into(), elems(r, ms));
            }
        }
        Outcome::None { reason } => {
            m.insert("status".into(), "none".into());
            m.insert("reason".into(), reason.clone().into());
        }
    }
    if !matches!(rep.outcome, Outcome::None { .. }) {
        m.insert("satisfied".into(), rep.satisfied.to_string().into());
    }
    if let Some(k) = rep.index {
        m.insert("index".into(), k.into());
    }
    if !rep.projectors.is_empty() {
        let ps: Vec<Value> = rep
            .projectors
            .iter()
            .map(|(name, p)| {
                json!({
                    "name": name,
                    "onto": ideal(r, p.onto()),
                    "along": ideal(r, p.along()),
                    "unit": elem(r, p.unit_image()),
                })
            })
            .collect();
        m.insert("projectors".into(), Value::Array(ps));
    }
    if !rep.notes.is_empty() {
        m.insert("notes".into(), json!(rep.notes));
    }
    m
}

pub fn verification_report(rep: &VerificationReport) -> Value {
    let mut m = Map::new();
    m.insert("ring".into(), rep.ring.clone().into());
    m.insert("theorem".into(), rep.theorem.clone().into());
    m.insert("status".into(), rep.status.as_str().into());
    m.insert("cases_checked".into(), rep.cases_checked.into());
    if let Some(c) = &rep.counterexample {
        let assignment: Vec<Value> = c.assignment.iter().map(|(k, v)| json!([k, v])).collect();
        m.insert("counterexample".into(), json!({"assignment": assignment, "failed": c.failed}));
    }
    if !rep.notes.is_empty() {
        m.insert("notes".into(), json!(rep.notes));
    }
    Value::Object(m)
}
