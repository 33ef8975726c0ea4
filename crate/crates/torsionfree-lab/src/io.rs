//! JSON schemas for algebras, modules, sequences and reports.
//!
//! Scalars are serialized as strings ("3", "-1/2") so exactness survives the
//! round trip; matrices are row-major arrays of string rows. serde_json's
//! default map keeps keys sorted, so emitted reports are byte-stable under a
//! fixed input.

use crate::algebra::{build_bound_quiver_algebra, Algebra, AlgebraRef, QuiverPresentation, Side};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::harness::{ClaimParams, ClaimReport, Witness};
use crate::homology::{CertBool, DimResult, DimValue, TdimResult, TorsionStatus};
use crate::linalg::{Mat, Subspace};
use crate::module::seq::ExactSeq;
use crate::module::{Mod, ModHom, ModRef};
use serde_json::{json, Map, Value};
use std::sync::Arc;

// --- fields ------------------------------------------------------------------

pub fn field_to_json(f: FieldSpec) -> Value {
    match f {
        FieldSpec::Prime(p) => json!({"kind": "prime_field", "p": p}),
        FieldSpec::Rationals => json!({"kind": "rationals"}),
    }
}

pub fn field_from_json(v: &Value) -> Result<FieldSpec> {
    let kind = v
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Parse("field needs a \"kind\"".into()))?;
    match kind {
        "prime_field" => {
            let p = v
                .get("p")
                .and_then(Value::as_u64)
                .ok_or_else(|| Error::Parse("prime_field needs \"p\"".into()))?;
            FieldSpec::prime(p)
        }
        "rationals" => Ok(FieldSpec::Rationals),
        other => Err(Error::Parse(format!("unknown field kind {other:?}"))),
    }
}

// --- scalars and matrices ------------------------------------------------------

fn scalar_from_json(field: FieldSpec, v: &Value) -> Result<Scalar> {
    match v {
        Value::String(s) => field.parse_scalar(s),
        Value::Number(n) => {
            let i = n
                .as_i64()
                .ok_or_else(|| Error::Parse(format!("non-integer scalar {n}")))?;
            Ok(field.from_i64(i))
        }
        _ => Err(Error::Parse(format!("bad scalar value {v}"))),
    }
}

pub fn mat_to_json(m: &Mat) -> Value {
    let rows: Vec<Value> = (0..m.rows)
        .map(|r| {
            Value::Array(
                (0..m.cols)
                    .map(|c| Value::String(m.at(r, c).encode()))
                    .collect(),
            )
        })
        .collect();
    Value::Array(rows)
}

pub fn mat_from_json(field: FieldSpec, v: &Value, rows: usize, cols: usize) -> Result<Mat> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse("matrix must be an array of rows".into()))?;
    if arr.len() != rows {
        return Err(Error::Parse(format!(
            "matrix has {} rows, expected {rows}",
            arr.len()
        )));
    }
    let mut out = Mat::zero(field, rows, cols);
    for (r, row) in arr.iter().enumerate() {
        let row = row
            .as_array()
            .ok_or_else(|| Error::Parse("matrix row must be an array".into()))?;
        if row.len() != cols {
            return Err(Error::Parse(format!(
                "matrix row has {} entries, expected {cols}",
                row.len()
            )));
        }
        for (c, e) in row.iter().enumerate() {
            out.set(r, c, scalar_from_json(field, e)?);
        }
    }
    Ok(out)
}

fn vector_to_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(|s| Value::String(s.encode())).collect())
}

fn vector_from_json(field: FieldSpec, v: &Value, len: usize) -> Result<Vec<Scalar>> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse("expected an array".into()))?;
    if arr.len() != len {
        return Err(Error::Parse(format!(
            "vector has length {}, expected {len}",
            arr.len()
        )));
    }
    arr.iter().map(|e| scalar_from_json(field, e)).collect()
}

// --- algebras -------------------------------------------------------------------

pub fn algebra_to_json(a: &Algebra) -> Value {
    let mut table = Vec::new();
    for i in 0..a.dim {
        for j in 0..a.dim {
            for k in 0..a.dim {
                let c = a.c(i, j, k);
                if !c.is_zero() {
                    table.push(json!([i, j, k, c.encode()]));
                }
            }
        }
    }
    let mut obj = Map::new();
    obj.insert("kind".into(), json!("structure_constants"));
    obj.insert("field".into(), field_to_json(a.field));
    obj.insert("dim".into(), json!(a.dim));
    obj.insert("unit".into(), vector_to_json(&a.unit));
    obj.insert("table".into(), Value::Array(table));
    if let Some(r) = &a.radical {
        obj.insert("radical".into(), mat_to_json(&r.basis));
    }
    if let Some(idems) = &a.idempotents {
        obj.insert(
            "idempotents".into(),
            Value::Array(idems.iter().map(|e| vector_to_json(e)).collect()),
        );
    }
    if let Some(labels) = &a.labels {
        obj.insert("labels".into(), json!(labels));
    }
    if let Some(name) = &a.name {
        obj.insert("name".into(), json!(name));
    }
    Value::Object(obj)
}

pub fn algebra_from_json(v: &Value, default_field: FieldSpec) -> Result<AlgebraRef> {
    let kind = v
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Parse("algebra needs a \"kind\"".into()))?;
    match kind {
        "structure_constants" => structure_constants_from_json(v),
        "quiver" => quiver_from_json(v, default_field),
        other => Err(Error::Parse(format!("unknown algebra kind {other:?}"))),
    }
}

fn structure_constants_from_json(v: &Value) -> Result<AlgebraRef> {
    let field = field_from_json(
        v.get("field")
            .ok_or_else(|| Error::Parse("structure_constants needs \"field\"".into()))?,
    )?;
    let dim = v
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Parse("algebra needs \"dim\"".into()))? as usize;
    let unit = vector_from_json(
        field,
        v.get("unit")
            .ok_or_else(|| Error::Parse("algebra needs \"unit\"".into()))?,
        dim,
    )?;
    let mut mult = vec![field.zero(); dim * dim * dim];
    let table = v
        .get("table")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("algebra needs \"table\"".into()))?;
    for entry in table {
        let e = entry
            .as_array()
            .ok_or_else(|| Error::Parse("table entries are [i,j,k,value]".into()))?;
        if e.len() != 4 {
            return Err(Error::Parse("table entries are [i,j,k,value]".into()));
        }
        let idx = |x: &Value| -> Result<usize> {
            let i = x
                .as_u64()
                .ok_or_else(|| Error::Parse("table index must be an integer".into()))?
                as usize;
            if i >= dim {
                return Err(Error::Parse(format!("table index {i} out of range")));
            }
            Ok(i)
        };
        let (i, j, k) = (idx(&e[0])?, idx(&e[1])?, idx(&e[2])?);
        mult[(i * dim + j) * dim + k] = scalar_from_json(field, &e[3])?;
    }
    let mut alg = Algebra::new(field, dim, mult, unit)?;
    if let Some(r) = v.get("radical") {
        let rows = r
            .as_array()
            .map(|a| a.len())
            .ok_or_else(|| Error::Parse("radical must be a matrix".into()))?;
        let basis = mat_from_json(field, r, rows, dim)?;
        alg.radical = Some(Subspace::from_rows(&basis));
    }
    if let Some(ids) = v.get("idempotents") {
        let arr = ids
            .as_array()
            .ok_or_else(|| Error::Parse("idempotents must be an array".into()))?;
        let mut out = Vec::new();
        for e in arr {
            out.push(vector_from_json(field, e, dim)?);
        }
        alg.idempotents = Some(out);
    }
    if let Some(ls) = v.get("labels").and_then(Value::as_array) {
        alg.labels = Some(
            ls.iter()
                .map(|l| l.as_str().unwrap_or_default().to_string())
                .collect(),
        );
    }
    if let Some(n) = v.get("name").and_then(Value::as_str) {
        alg.name = Some(n.to_string());
    }
    Ok(Arc::new(alg.validated()?))
}

fn quiver_from_json(v: &Value, default_field: FieldSpec) -> Result<AlgebraRef> {
    let field = match v.get("field") {
        Some(f) => field_from_json(f)?,
        None => default_field,
    };
    let vertices = v
        .get("vertices")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Parse("quiver needs \"vertices\"".into()))? as usize;
    let arrows_v = v
        .get("arrows")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("quiver needs \"arrows\"".into()))?;
    let mut arrows = Vec::with_capacity(arrows_v.len());
    for a in arrows_v {
        let a = a
            .as_array()
            .ok_or_else(|| Error::Parse("arrows are [source, target, label]".into()))?;
        if a.len() < 2 {
            return Err(Error::Parse("arrows are [source, target, label]".into()));
        }
        let s = a[0]
            .as_u64()
            .ok_or_else(|| Error::Parse("arrow source must be an integer".into()))? as usize;
        let t = a[1]
            .as_u64()
            .ok_or_else(|| Error::Parse("arrow target must be an integer".into()))? as usize;
        let label = a
            .get(2)
            .and_then(Value::as_str)
            .map(str::to_string)
            .unwrap_or_else(|| format!("a{}", arrows.len()));
        arrows.push((s, t, label));
    }
    let nilpotency = v
        .get("nilpotency")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Parse("quiver needs \"nilpotency\"".into()))? as usize;
    let mut relations = Vec::new();
    if let Some(rels) = v.get("relations").and_then(Value::as_array) {
        for rel in rels {
            let terms = rel.as_array().ok_or_else(|| {
                Error::Parse("a relation is an array of [coeff, path] terms".into())
            })?;
            let mut out = Vec::new();
            for term in terms {
                let t = term
                    .as_array()
                    .ok_or_else(|| Error::Parse("a relation term is [coeff, path]".into()))?;
                if t.len() != 2 {
                    return Err(Error::Parse("a relation term is [coeff, path]".into()));
                }
                let coeff = scalar_from_json(field, &t[0])?;
                let path = t[1]
                    .as_array()
                    .ok_or_else(|| Error::Parse("a path is an array of arrow indices".into()))?
                    .iter()
                    .map(|x| {
                        x.as_u64()
                            .map(|u| u as usize)
                            .ok_or_else(|| Error::Parse("arrow index must be an integer".into()))
                    })
                    .collect::<Result<Vec<_>>>()?;
                out.push((coeff, path));
            }
            relations.push(out);
        }
    }
    let q = QuiverPresentation {
        vertices,
        arrows,
        relations,
        nilpotency,
    };
    let mut alg = build_bound_quiver_algebra(&q, field)?;
    if let Some(n) = v.get("name").and_then(Value::as_str) {
        alg.name = Some(n.to_string());
    }
    Ok(Arc::new(alg))
}

pub fn load_algebra(path: &std::path::Path, default_field: FieldSpec) -> Result<AlgebraRef> {
    let text = std::fs::read_to_string(path)?;
    let v: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
    algebra_from_json(&v, default_field)
}

// --- modules ---------------------------------------------------------------------

fn side_from_str(s: &str) -> Result<Side> {
    match s {
        "left" => Ok(Side::Left),
        "right" => Ok(Side::Right),
        other => Err(Error::Parse(format!(
            "side must be left or right, got {other:?}"
        ))),
    }
}

pub fn module_to_json(m: &Mod) -> Value {
    json!({
        "side": m.side.name(),
        "dim": m.dim,
        "action": Value::Array(m.action.iter().map(mat_to_json).collect()),
    })
}

pub fn module_from_json(v: &Value, algebra: &AlgebraRef) -> Result<ModRef> {
    let side = side_from_str(
        v.get("side")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse("module needs \"side\"".into()))?,
    )?;
    let dim = v
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Parse("module needs \"dim\"".into()))? as usize;
    let action_v = v
        .get("action")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("module needs \"action\"".into()))?;
    if action_v.len() != algebra.dim {
        return Err(Error::Parse(format!(
            "module has {} action matrices, algebra dimension is {}",
            action_v.len(),
            algebra.dim
        )));
    }
    let action = action_v
        .iter()
        .map(|a| mat_from_json(algebra.field, a, dim, dim))
        .collect::<Result<Vec<_>>>()?;
    Mod::new(algebra.clone(), side, dim, action)
}

pub fn load_module(path: &std::path::Path, algebra: &AlgebraRef) -> Result<ModRef> {
    let text = std::fs::read_to_string(path)?;
    let v: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
    module_from_json(&v, algebra)
}

// --- sequences ---------------------------------------------------------------------

pub fn seq_to_json(seq: &ExactSeq) -> Value {
    let interior = seq.interior();
    json!({
        "kind": "exact_sequence",
        "modules": Value::Array(interior.iter().map(|m| module_to_json(m)).collect()),
        // maps between consecutive interior modules, target-dim x source-dim
        "maps": Value::Array(
            seq.maps[1..seq.maps.len() - 1]
                .iter()
                .map(|h| mat_to_json(&h.matrix))
                .collect(),
        ),
    })
}

pub fn seq_from_json(v: &Value, algebra: &AlgebraRef) -> Result<ExactSeq> {
    let mods_v = v
        .get("modules")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("sequence needs \"modules\"".into()))?;
    let maps_v = v
        .get("maps")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("sequence needs \"maps\"".into()))?;
    if mods_v.len() != maps_v.len() + 1 {
        return Err(Error::Parse(
            "sequence needs one more module than maps".into(),
        ));
    }
    let modules: Vec<ModRef> = mods_v
        .iter()
        .map(|m| module_from_json(m, algebra))
        .collect::<Result<_>>()?;
    let mut homs = Vec::with_capacity(maps_v.len());
    for (i, mv) in maps_v.iter().enumerate() {
        let mat = mat_from_json(algebra.field, mv, modules[i + 1].dim, modules[i].dim)?;
        homs.push(ModHom::new(modules[i].clone(), modules[i + 1].clone(), mat)?);
    }
    let seq = ExactSeq::with_zero_caps(homs)?;
    seq.verify()?;
    Ok(seq)
}

// --- dimension results and reports ---------------------------------------------------

pub fn dim_result_to_json(d: &DimResult) -> Value {
    let value = match d.value {
        DimValue::Finite(n) => json!({"finite": n}),
        DimValue::Infinity => json!("infinity"),
        DimValue::GreaterThan(b) => json!({"greater_than": b}),
    };
    json!({
        "value": value,
        "certified": d.certified,
        "note": d.note,
    })
}

pub fn certbool_to_json(c: &CertBool) -> Value {
    json!({
        "holds": c.holds,
        "certified": c.certified,
        "window": c.window,
        "note": c.note,
    })
}

pub fn torsion_status_to_json(t: &TorsionStatus) -> Value {
    json!({
        "torsionless": t.torsionless,
        "reflexive": t.reflexive,
        "inf_torsionfree": certbool_to_json(&t.inf_torsionfree),
    })
}

pub fn tdim_to_json(t: &TdimResult) -> Value {
    json!({
        "upper": t.upper.map(|u| json!(u)).unwrap_or(Value::Null),
        "exact": t.exact.map(|u| json!(u)).unwrap_or(Value::Null),
        "lower": t.lower,
        "searched_to": t.searched_to,
        "note": t.note,
    })
}

fn claim_params_to_json(p: &ClaimParams) -> Value {
    json!({
        "n": p.n.map(|v| json!(v)).unwrap_or(Value::Null),
        "k": p.k.map(|v| json!(v)).unwrap_or(Value::Null),
        "bound": p.bound,
        "samples": p.samples,
        "seed": p.seed,
        "max_gens": p.size.max_gens,
        "max_rels": p.size.max_rels,
        "dim_cap": p.size.dim_cap,
    })
}

pub fn witness_to_json(w: &Witness) -> Value {
    let mut params = Map::new();
    for (k, v) in &w.params {
        params.insert(k.clone(), json!(v));
    }
    let mut modules = Map::new();
    for (role, m) in &w.modules {
        modules.insert(role.clone(), module_to_json(m));
    }
    json!({
        "check": w.check,
        "label": w.label,
        "params": Value::Object(params),
        "modules": Value::Object(modules),
    })
}

pub fn witness_from_json(v: &Value, algebra: &AlgebraRef) -> Result<Witness> {
    let check = v
        .get("check")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Parse("witness needs \"check\"".into()))?
        .to_string();
    let label = v
        .get("label")
        .and_then(Value::as_str)
        .unwrap_or_default()
        .to_string();
    let mut params = Vec::new();
    if let Some(obj) = v.get("params").and_then(Value::as_object) {
        for (k, val) in obj {
            if let Some(i) = val.as_i64() {
                params.push((k.clone(), i));
            }
        }
    }
    let mut modules = Vec::new();
    if let Some(obj) = v.get("modules").and_then(Value::as_object) {
        for (role, mv) in obj {
            modules.push((role.clone(), module_from_json(mv, algebra)?));
        }
    }
    Ok(Witness {
        check,
        label,
        modules,
        params,
    })
}

pub fn claim_report_to_json(rep: &ClaimReport, field: FieldSpec) -> Value {
    json!({
        "claim": rep.claim,
        "algebra": rep.algebra,
        "field": field_to_json(field),
        "params": claim_params_to_json(&rep.params),
        "status": rep.status.name(),
        "checks_run": rep.checks_run,
        "notes": rep.notes,
        "witnesses": Value::Array(rep.witnesses.iter().map(witness_to_json).collect()),
    })
}

// --- text rendering -------------------------------------------------------------------

/// Renders a JSON report as an indented key/value listing; the JSON remains
/// the source of truth.
pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    render_into(v, 0, &mut out);
    out
}

fn render_into(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match val {
                    Value::Object(_) | Value::Array(_) if !is_small(val) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_into(val, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", inline(val))),
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                if is_small(item) {
                    out.push_str(&format!("{pad}- {}\n", inline(item)));
                } else {
                    out.push_str(&format!("{pad}-\n"));
                    render_into(item, indent + 1, out);
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", inline(other))),
    }
}

fn is_small(v: &Value) -> bool {
    match v {
        Value::Array(a) => {
            a.iter()
                .all(|x| !matches!(x, Value::Object(_) | Value::Array(_)))
                && a.len() <= 8
        }
        Value::Object(o) => o.is_empty(),
        _ => true,
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::builtin_algebra;

    fn gf5() -> FieldSpec {
        FieldSpec::Prime(5)
    }

    #[test]
    fn algebra_round_trip_structure_constants() {
        let a = builtin_algebra("NAKAYAMA(2,2)", gf5()).unwrap();
        let j = algebra_to_json(&a);
        let b = algebra_from_json(&j, gf5()).unwrap();
        assert_eq!(a.encode(), b.encode());
        assert_eq!(b.radical.as_ref().unwrap().dim(), 2);
        assert!(b.supports_minimal());
    }

    #[test]
    fn quiver_schema_parses() {
        let v: Value = serde_json::from_str(
            r#"{"kind":"quiver","vertices":1,"arrows":[[0,0,"a"]],"relations":[[["1",[0,0]]]],"nilpotency":3}"#,
        )
        .unwrap();
        let a = algebra_from_json(&v, gf5()).unwrap();
        assert_eq!(a.dim, 2); // k[a]/(a^2) carved out of the length-3 truncation
    }

    #[test]
    fn module_round_trip() {
        let a = builtin_algebra("DUAL2", gf5()).unwrap();
        let reg = Mod::regular(a.clone(), Side::Left);
        let j = module_to_json(&reg);
        let back = module_from_json(&j, &a).unwrap();
        assert_eq!(back.as_ref(), reg.as_ref());
    }

    #[test]
    fn module_with_bad_action_rejected() {
        let a = builtin_algebra("DUAL2", gf5()).unwrap();
        let v: Value =
            serde_json::from_str(r#"{"side":"left","dim":1,"action":[[["1"]],[["1"]]]}"#).unwrap();
        // a |-> 1 violates a^2 = 0
        assert!(module_from_json(&v, &a).is_err());
    }

    #[test]
    fn rational_scalars_survive() {
        let f = FieldSpec::Rationals;
        let s = f.parse_scalar("-7/3").unwrap();
        let j = Value::String(s.encode());
        let back = scalar_from_json(f, &j).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn sequence_round_trip() {
        let a = builtin_algebra("DUAL2", gf5()).unwrap();
        let ctx = crate::homology::HomologyCtx::new(a.clone());
        let s = crate::module::ops::semisimple_top(&Mod::regular(a.clone(), Side::Left))
            .unwrap()
            .0;
        let seq = crate::homology::extension_from_cocycle(&ctx, &s, &s, 1).unwrap();
        let j = seq_to_json(&seq);
        let back = seq_from_json(&j, &a).unwrap();
        assert_eq!(back.interior().len(), seq.interior().len());
    }

    #[test]
    fn text_rendering_is_stable() {
        let v = json!({"b": 1, "a": [1, 2], "c": {"x": "y"}});
        let t1 = render_text(&v);
        let t2 = render_text(&v);
        assert_eq!(t1, t2);
        assert!(t1.contains("a: [1,2]"));
    }
}
