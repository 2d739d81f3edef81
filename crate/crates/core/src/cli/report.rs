//! JSON encodings of the library results and a flat text rendering.

use serde_json::{json, Map, Value};

use crate::families::{FamilyParams, QuadCubicDecomposition};
use crate::galois::GaloisResult;
use crate::numeric::{OracleReport, RootSet};
use crate::poly::{BigRat, QPoly};
use crate::relations::{BetaKind, RelationReport};

pub fn rat(r: &BigRat) -> Value {
    Value::String(format!("{}/{}", r.numer(), r.denom()))
}

pub fn poly(p: &QPoly) -> Value {
    json!({
        "coeffs": p.coeffs().iter().map(rat).collect::<Vec<_>>(),
        "text": p.to_string(),
    })
}

pub fn family(f: &FamilyParams) -> Value {
    json!({
        "family": f.kind.label(),
        "a": rat(&f.a),
        "b": rat(&f.b),
        "c": rat(&f.c),
        "t": rat(&f.t),
    })
}

pub fn relations(r: &RelationReport) -> Value {
    let pair_equal = match &r.pair_equal {
        None => Value::Null,
        Some(pe) => json!({
            "beta_kind": match pe.beta_kind { BetaKind::Rational => "rational", BetaKind::Cubic => "cubic" },
            "beta_value": pe.beta_value.as_ref().map(rat),
            "beta_minpoly": pe.beta_minpoly.as_ref().map(poly),
            "multiplicity_profile": pe.multiplicity_profile,
        }),
    };
    json!({
        "degree": r.degree,
        "trace_shift": rat(&r.trace_shift.r),
        "sum_zero_quadruple": r.sum_zero_quadruple,
        "three_vs_one": r.three_vs_one,
        "pair_equal": pair_equal,
        "matched_forms": r.matched_forms.iter().map(family).collect::<Vec<_>>(),
    })
}

pub fn oracle(roots: &RootSet, rep: &OracleReport) -> Value {
    let hits = |h: &[crate::numeric::Hit]| h.iter().map(|h| json!(h.indices)).collect::<Vec<_>>();
    json!({
        "precision_bits": roots.bits,
        "relations": rep.relation_set().iter().map(|k| k.as_str()).collect::<Vec<_>>(),
        "hits": {
            "pair_equal": hits(&rep.pair_equal),
            "sum_zero": hits(&rep.sum_zero),
            "three_vs_one": hits(&rep.three_vs_one),
            "midpoint": hits(&rep.midpoint),
        },
    })
}

pub fn galois(g: &GaloisResult) -> Value {
    let cycle_types: Vec<Value> = g
        .fingerprint
        .cycle_types
        .iter()
        .map(|(t, n)| json!({ "type": t, "count": n }))
        .collect();
    json!({
        "degree": g.degree,
        "order": g.order,
        "name": g.name.map(|n| n.as_str()),
        "fingerprint": {
            "degree": g.fingerprint.degree,
            "order": g.fingerprint.order,
            "abelian": g.fingerprint.abelian,
            "cycle_types": cycle_types,
        },
        "perms": g.perms.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
    })
}

pub fn decomposition(d: &QuadCubicDecomposition) -> Value {
    json!({
        "a": rat(&d.a),
        "b": rat(&d.b),
        "c": rat(&d.c),
        "quad": poly(&d.quad),
        "cubic": poly(&d.cubic),
        "normalized": poly(&d.normalized),
        "trace_shift": rat(&d.shift.r),
        "gamma_shift": rat(&d.gamma_shift),
        "delta_shift": rat(&d.delta_shift),
    })
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, x, out);
            }
        }
        Value::Array(a) if a.iter().any(|x| x.is_object()) => {
            for (i, x) in a.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), x, out);
            }
        }
        Value::Array(a) => {
            let items: Vec<String> = a.iter().map(scalar).collect();
            out.push((prefix.to_string(), format!("[{}]", items.join(", "))));
        }
        _ => out.push((prefix.to_string(), scalar(v))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(a) => format!("[{}]", a.iter().map(scalar).collect::<Vec<_>>().join(", ")),
        other => other.to_string(),
    }
}

/// One `key  value` line per leaf, keys padded to a common width.
pub fn render_text(doc: &Value) -> String {
    let mut rows = Vec::new();
    flatten("", doc, &mut rows);
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut s = String::new();
    for (k, v) in rows {
        s.push_str(&format!("{k:<width$}  {v}\n"));
    }
    s
}

pub fn object(pairs: Vec<(&str, Value)>) -> Value {
    let mut m = Map::new();
    for (k, v) in pairs {
        m.insert(k.to_string(), v);
    }
    Value::Object(m)
}
