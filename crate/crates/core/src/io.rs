//! Serialization: the JSON schema for Schubert expressions and character
//! polynomials, and the canonical text rendering used by the command line.
//!
//! Expression schema: `{"basis": "...", "terms": [{"shape": ..., "q": d,
//! "coeff": [{"w": [...], "c": n}, ...]}, ...]}` with one entry per
//! (shape, q-degree).  Shapes serialize as partition arrays, or as
//! `{"boxes": [[r,c], ...]}` for the exceptional spaces.

use crate::error::{Error, Result};
use crate::gamma::WeightPoly;
use crate::poset::{CominusculePoset, SpaceKind};
use crate::qk::{Basis, QPoly, QRational, SchubertExpr};
use crate::roots::Weight;
use crate::shapes::{render_shape, shape_from_parts, shape_to_parts, Shape};
use serde_json::{json, Value};

pub fn shape_to_json(poset: &CominusculePoset, s: Shape) -> Value {
    match poset.kind() {
        SpaceKind::CayleyPlane | SpaceKind::Freudenthal => {
            let boxes: Vec<Value> = s
                .iter()
                .map(|i| {
                    let b = &poset.boxes()[i];
                    json!([b.row, b.col])
                })
                .collect();
            json!({ "boxes": boxes })
        }
        _ => json!(shape_to_parts(poset, s)),
    }
}

pub fn shape_from_json(poset: &CominusculePoset, v: &Value) -> Result<Shape> {
    let bad = || Error::Parse(format!("bad shape value {v}"));
    if let Some(arr) = v.as_array() {
        let parts: Vec<usize> = arr
            .iter()
            .map(|x| x.as_u64().map(|u| u as usize).ok_or_else(bad))
            .collect::<Result<_>>()?;
        return shape_from_parts(poset, &parts);
    }
    if let Some(obj) = v.as_object() {
        let boxes = obj.get("boxes").and_then(Value::as_array).ok_or_else(bad)?;
        let mut bits = 0u64;
        for b in boxes {
            let pair = b.as_array().ok_or_else(bad)?;
            if pair.len() != 2 {
                return Err(bad());
            }
            let r = pair[0].as_u64().ok_or_else(bad)? as usize;
            let c = pair[1].as_u64().ok_or_else(bad)? as usize;
            let idx = poset
                .box_at(r, c)
                .ok_or_else(|| Error::Domain(format!("box ({r},{c}) outside the poset")))?;
            bits |= 1 << idx;
        }
        let s = Shape::from_bits(bits);
        if !poset.is_ideal(s) {
            return Err(Error::Domain("box set is not a lower order ideal".into()));
        }
        return Ok(s);
    }
    Err(bad())
}

pub fn weight_poly_to_json(p: &WeightPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(w, c)| json!({ "w": w.0, "c": c }))
        .collect();
    json!(terms)
}

pub fn weight_poly_from_json(v: &Value) -> Result<WeightPoly> {
    let bad = || Error::Parse(format!("bad coefficient value {v}"));
    let arr = v.as_array().ok_or_else(bad)?;
    let mut out = WeightPoly::zero();
    for t in arr {
        let obj = t.as_object().ok_or_else(bad)?;
        let w: Vec<i64> = obj
            .get("w")
            .and_then(Value::as_array)
            .ok_or_else(bad)?
            .iter()
            .map(|x| x.as_i64().ok_or_else(bad))
            .collect::<Result<_>>()?;
        let c = obj.get("c").and_then(Value::as_i64).ok_or_else(bad)?;
        out.add_term(Weight(w), c);
    }
    Ok(out)
}

fn basis_tag(b: Basis) -> &'static str {
    match b {
        Basis::Opposite => "opposite",
        Basis::Ideal => "ideal",
        Basis::QIdeal => "qideal",
    }
}

fn basis_from_tag(t: &str) -> Result<Basis> {
    match t {
        "opposite" => Ok(Basis::Opposite),
        "ideal" => Ok(Basis::Ideal),
        "qideal" => Ok(Basis::QIdeal),
        _ => Err(Error::Parse(format!("unknown basis tag `{t}`"))),
    }
}

/// Deterministic term order for output: q-degree, then shape length, then
/// the bitset.
fn sorted_terms(e: &SchubertExpr) -> Vec<(Shape, usize, WeightPoly)> {
    let mut out: Vec<(Shape, usize, WeightPoly)> = Vec::new();
    for (s, q) in e.terms() {
        for (d, p) in q.coeffs() {
            out.push((s, d, p.clone()));
        }
    }
    out.sort_by_key(|(s, d, _)| (*d, s.len(), s.bits()));
    out
}

pub fn expr_to_json(poset: &CominusculePoset, e: &SchubertExpr) -> Value {
    let terms: Vec<Value> = sorted_terms(e)
        .into_iter()
        .map(|(s, d, p)| {
            json!({
                "shape": shape_to_json(poset, s),
                "q": d,
                "coeff": weight_poly_to_json(&p),
            })
        })
        .collect();
    json!({ "basis": basis_tag(e.basis), "terms": terms })
}

pub fn expr_from_json(poset: &CominusculePoset, v: &Value) -> Result<SchubertExpr> {
    let bad = || Error::Parse(format!("bad expression value {v}"));
    let obj = v.as_object().ok_or_else(bad)?;
    let basis = basis_from_tag(obj.get("basis").and_then(Value::as_str).ok_or_else(bad)?)?;
    let mut out = SchubertExpr::new(basis);
    for t in obj.get("terms").and_then(Value::as_array).ok_or_else(bad)? {
        let tobj = t.as_object().ok_or_else(bad)?;
        let shape = shape_from_json(poset, tobj.get("shape").ok_or_else(bad)?)?;
        let d = tobj.get("q").and_then(Value::as_u64).ok_or_else(bad)? as usize;
        let coeff = weight_poly_from_json(tobj.get("coeff").ok_or_else(bad)?)?;
        out.add_term(shape, &QPoly::from_weight_poly(d, coeff));
    }
    Ok(out)
}

/// Renders a character polynomial: an integer when constant, `C[w]` for
/// monomials, sums joined with signs otherwise.
pub fn weight_poly_to_text(p: &WeightPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (w, c)) in p.terms().enumerate() {
        let mag = c.abs();
        let sign = if c < 0 { "-" } else { "+" };
        if i == 0 {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        if w.is_zero() {
            out.push_str(&mag.to_string());
        } else {
            let coords: Vec<String> = w.0.iter().map(|x| x.to_string()).collect();
            if mag != 1 {
                out.push_str(&format!("{mag}*"));
            }
            out.push_str(&format!("C[{}]", coords.join(",")));
        }
    }
    out
}

/// Canonical text form of an expression, e.g.
/// `O[2,1] - O[2,2] - q*O[] + q*O[1]`.
pub fn expr_to_text(poset: &CominusculePoset, e: &SchubertExpr) -> String {
    if e.is_zero() {
        return "0".to_string();
    }
    let class = match e.basis {
        Basis::Opposite => "O",
        Basis::Ideal => "I",
        Basis::QIdeal => "Iq",
    };
    let mut out = String::new();
    for (i, (s, d, p)) in sorted_terms(e).into_iter().enumerate() {
        // Pull a leading sign out of single-term coefficients.
        let (coeff_text, negative) = match p.as_monomial() {
            Some(m) if m.weight.is_zero() => (String::new(), m.sign < 0),
            Some(m) => {
                let coords: Vec<String> = m.weight.0.iter().map(|x| x.to_string()).collect();
                (format!("C[{}]", coords.join(",")), m.sign < 0)
            }
            None => {
                let text = weight_poly_to_text(&p);
                match text.strip_prefix('-') {
                    Some(rest) if !rest.contains(' ') => (rest.to_string(), true),
                    _ => (format!("({text})"), false),
                }
            }
        };
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mut factors: Vec<String> = Vec::new();
        if !coeff_text.is_empty() {
            factors.push(coeff_text);
        }
        if d == 1 {
            factors.push("q".to_string());
        } else if d > 1 {
            factors.push(format!("q^{d}"));
        }
        factors.push(format!("{class}{}", render_shape(poset, s)));
        out.push_str(&factors.join("*"));
    }
    out
}

/// Renders an exact rational function in q with integer coefficients,
/// e.g. `q^2/(1-q)` or `1`.
pub fn qrational_to_text(r: &QRational) -> String {
    let r = r.normalized();
    let num = qpoly_to_text(&r.num);
    if r.denom_pow == 0 {
        num
    } else if r.num.coeffs().count() <= 1 {
        format!("{num}/(1-q)")
    } else {
        format!("({num})/(1-q)")
    }
}

fn qpoly_to_text(p: &QPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (d, c)) in p.coeffs().enumerate() {
        let text = weight_poly_to_text(c);
        let (mag, neg) = match text.strip_prefix('-') {
            Some(rest) if !rest.contains(' ') => (rest.to_string(), true),
            _ if text.contains(' ') => (format!("({text})"), false),
            _ => (text.clone(), false),
        };
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let qpart = match d {
            0 => String::new(),
            1 => "q".to_string(),
            _ => format!("q^{d}"),
        };
        match (mag.as_str(), qpart.as_str()) {
            (m, "") => out.push_str(m),
            ("1", q) => out.push_str(q),
            (m, q) => out.push_str(&format!("{m}*{q}")),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::build_poset;
    use crate::qk::quantized_ideal_sheaf;
    use crate::shapes::parse_shape;

    #[test]
    fn qideal_text_matches_worked_example() {
        let p = build_poset(SpaceKind::Grassmannian { k: 2, n: 4 }).unwrap();
        let mu = parse_shape(&p, "[2,1]").unwrap();
        let e = quantized_ideal_sheaf(&p, mu);
        assert_eq!(expr_to_text(&p, &e), "O[2,1] - O[2,2] - q*O[] + q*O[1]");
    }

    #[test]
    fn expr_json_roundtrip() {
        for kind in [
            SpaceKind::Grassmannian { k: 2, n: 4 },
            SpaceKind::Lagrangian { n: 4 },
            SpaceKind::CayleyPlane,
        ] {
            let p = build_poset(kind).unwrap();
            for mu in crate::shapes::enumerate_shapes(&p) {
                let e = quantized_ideal_sheaf(&p, mu);
                let v = expr_to_json(&p, &e);
                assert_eq!(expr_from_json(&p, &v).unwrap(), e, "{kind}");
            }
        }
    }

    #[test]
    fn alpha_json_roundtrip_carries_characters() {
        let p = build_poset(SpaceKind::Lagrangian { n: 4 }).unwrap();
        let mu = parse_shape(&p, "[3,2]").unwrap();
        let e = crate::qk::alpha(&p, mu);
        let v = expr_to_json(&p, &e);
        assert_eq!(expr_from_json(&p, &v).unwrap(), e);
        let text = v.to_string();
        assert!(text.contains("\"w\""));
    }

    #[test]
    fn qrational_rendering() {
        let one = QPoly::constant(3, 1);
        let r = QRational {
            num: one.mul_q(1),
            denom_pow: 1,
        };
        assert_eq!(qrational_to_text(&r), "q/(1-q)");
        let r = QRational {
            num: one.sub(&one.mul_q(1)),
            denom_pow: 1,
        };
        assert_eq!(qrational_to_text(&r), "1");
        let r = QRational {
            num: QPoly::zero(),
            denom_pow: 1,
        };
        assert_eq!(qrational_to_text(&r), "0");
    }

    #[test]
    fn shape_json_forms() {
        let p = build_poset(SpaceKind::Freudenthal).unwrap();
        for s in crate::shapes::enumerate_shapes(&p).iter().take(10) {
            let v = shape_to_json(&p, *s);
            assert_eq!(shape_from_json(&p, &v).unwrap(), *s);
        }
        let p = build_poset(SpaceKind::QuadricEven { dim: 8 }).unwrap();
        for s in crate::shapes::enumerate_shapes(&p) {
            let v = shape_to_json(&p, s);
            assert_eq!(shape_from_json(&p, &v).unwrap(), s);
        }
    }
}
