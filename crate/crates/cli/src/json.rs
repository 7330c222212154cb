//! JSON encodings. Objects use `serde_json::Map`, which is ordered by key, so
//! output is byte-for-byte reproducible.

use qcurv_core::asymptotics::{AsymptoticVerdict, DirectionVerdict};
use qcurv_core::bifurcation::InstantReport;
use qcurv_core::catalog::{Mismatch, TheoremARow};
use qcurv_core::{CurvaturePackage, IntPoly, LaurentPoly, Rational, SubmersionData};
use serde_json::{json, Map, Number, Value};

pub fn rational(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn laurent(p: &LaurentPoly) -> Value {
    Value::Object(p.terms().map(|(k, c)| (k.to_string(), rational(c))).collect())
}

fn integer(s: String) -> Value {
    // arbitrary_precision keeps big integers exact
    Value::Number(s.parse::<Number>().expect("integer literal"))
}

pub fn int_poly(p: &IntPoly) -> Value {
    Value::Array(p.coeffs().iter().map(|c| integer(c.to_string())).collect())
}

pub fn data(d: &SubmersionData) -> Value {
    json!({
        "n": d.n,
        "l": d.l,
        "zeta": rational(&d.zeta),
        "eta": rational(&d.eta),
        "lamF": rational(&d.lambda_f),
        "lamB": rational(&d.lambda_b),
    })
}

/// `(name, polynomial)` pairs in output order.
pub fn package_fields(p: &CurvaturePackage) -> Vec<(&'static str, LaurentPoly)> {
    vec![
        ("kappa", p.kappa.clone()),
        ("ric_vertical", p.ric_vertical.clone()),
        ("ric_vertical_reference", p.ric_vertical_reference.clone()),
        ("ric_horizontal", p.ric_horizontal.clone()),
        ("ric_norm_sq", p.ric_norm_sq.clone()),
        ("scal", p.scal.clone()),
        ("Q", p.q_curv.clone()),
        ("alpha", p.alpha.clone()),
        ("beta", p.beta.clone()),
        ("discriminant", p.discriminant()),
    ]
}

pub fn package(p: &CurvaturePackage) -> Value {
    Value::Object(package_fields(p).iter().map(|(k, v)| (k.to_string(), laurent(v))).collect())
}

pub fn report(r: &InstantReport) -> Value {
    json!({
        "lambda": rational(&r.lambda),
        "interval": [rational(r.root.lo()), rational(r.root.hi())],
        "poly": int_poly(r.root.poly()),
        "transversal": r.transversal,
        "scalar_distinct": r.scalar_distinct,
    })
}

fn direction(v: &DirectionVerdict) -> Value {
    json!({ "result": v.result, "method": v.method.as_str() })
}

pub fn verdict(v: &AsymptoticVerdict) -> Value {
    json!({ "collapse": direction(&v.collapse), "expansion": direction(&v.expansion) })
}

pub fn theorem_row(row: &TheoremARow, expected: (bool, bool)) -> Value {
    let mut m = Map::new();
    m.insert("family".into(), json!(row.family.id().as_str()));
    m.insert("q".into(), json!(row.family.q()));
    m.insert("bundle".into(), json!(row.family.bundle()));
    m.insert("collapse".into(), direction(&row.verdict.collapse));
    m.insert("expansion".into(), direction(&row.verdict.expansion));
    m.insert("expected".into(), json!({ "collapse": expected.0, "expansion": expected.1 }));
    m.insert("matches".into(), json!(row.matches_expected()));
    Value::Object(m)
}

pub fn mismatch(m: &Mismatch) -> Value {
    json!({
        "family": m.family.id().as_str(),
        "q": m.family.q(),
        "check": m.check,
        "expected": m.expected,
        "actual": m.actual,
    })
}
