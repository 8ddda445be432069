//! JSON file formats for structures, modules, dimodules and smash inputs.
//!
//! Every linear map is stored as a sparse list of entries
//! `[grade indices.., basis indices.., scalar]` with the scalar written as
//! `"num/den"` or `"r mod p"`. [`canonical_json`] fixes key order, entry
//! order and line layout so that load-then-save is byte-stable.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde_json::{json, Map, Value};

use crate::dimodule::LongDimodule;
use crate::hopf::{GradedHopfQuasigroup, HopfError, HopfQuasigroupData};
use crate::linalg::{Field, LinMap, LinalgError, Scalar};
use crate::quasigroup::{Quasigroup, QuasigroupError};
use crate::quasimodule::{GradedQuasimodule, HopfQuasimodule, ModuleError};
use crate::smash::{QuasimoduleHopfQuasigroup, SmashError};

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Format(String),
    #[error("cannot read {}", path.display())]
    Read { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Quasigroup(#[from] QuasigroupError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Smash(#[from] SmashError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

fn format_err(msg: impl Into<String>) -> IoError {
    IoError::Format(msg.into())
}

pub fn read_file(path: &Path) -> Result<String, IoError> {
    std::fs::read_to_string(path).map_err(|source| IoError::Read { path: path.to_path_buf(), source })
}

/// Pretty-prints with sorted keys; arrays of plain values stay on one line,
/// so every entry of a map list gets its own line.
pub fn canonical_json(v: &Value) -> String {
    let mut out = String::new();
    write_value(v, 0, &mut out);
    out.push('\n');
    out
}

fn write_value(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| " ".repeat(n);
    match v {
        Value::Object(m) if !m.is_empty() => {
            let mut keys: Vec<&String> = m.keys().collect();
            keys.sort();
            out.push_str("{\n");
            for (n, k) in keys.iter().enumerate() {
                out.push_str(&pad(indent + 2));
                out.push_str(&Value::String((*k).clone()).to_string());
                out.push_str(": ");
                write_value(&m[*k], indent + 2, out);
                if n + 1 < keys.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        Value::Array(xs) if xs.iter().any(|x| x.is_array() || x.is_object()) => {
            out.push_str("[\n");
            for (n, x) in xs.iter().enumerate() {
                out.push_str(&pad(indent + 2));
                write_value(x, indent + 2, out);
                if n + 1 < xs.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        other => out.push_str(&other.to_string()),
    }
}

/// How the basis indices of an entry map to a matrix position.
#[derive(Clone, Copy, Debug)]
enum Layout {
    /// `[i]`: column `i` of a one-row map.
    Col,
    /// `[k]`: row `k` of a one-column map.
    Row,
    /// `[i, j]`: `e_i ↦ e_j`.
    ColRow,
    /// `[i, j, k]`: `e_i⊗e_j ↦ e_k`, the second source factor has this dimension.
    SplitSrc(usize),
    /// `[i, j, k]`: `e_i ↦ e_j⊗e_k`, the second target factor has this dimension.
    SplitDst(usize),
}

impl Layout {
    fn arity(self) -> usize {
        match self {
            Layout::Col | Layout::Row => 1,
            Layout::ColRow => 2,
            Layout::SplitSrc(_) | Layout::SplitDst(_) => 3,
        }
    }

    fn encode(self, row: usize, col: usize) -> Vec<usize> {
        match self {
            Layout::Col => vec![col],
            Layout::Row => vec![row],
            Layout::ColRow => vec![col, row],
            Layout::SplitSrc(d) => vec![col / d, col % d, row],
            Layout::SplitDst(d) => vec![col, row / d, row % d],
        }
    }

    fn decode(self, ix: &[usize]) -> Option<(usize, usize)> {
        if matches!(self, Layout::SplitSrc(0) | Layout::SplitDst(0)) {
            return None;
        }
        let pos = match self {
            Layout::Col => (0, ix[0]),
            Layout::Row => (ix[0], 0),
            Layout::ColRow => (ix[1], ix[0]),
            Layout::SplitSrc(d) => (ix[2], ix[0].checked_mul(d)?.checked_add(ix[1])?),
            Layout::SplitDst(d) => (ix[1].checked_mul(d)?.checked_add(ix[2])?, ix[0]),
        };
        (self.encode(pos.0, pos.1) == ix).then_some(pos)
    }
}

fn map_entries(key: &[usize], m: &LinMap, layout: Layout, out: &mut Vec<(Vec<usize>, String)>) {
    for (row, col, s) in m.triplets() {
        let mut ix = key.to_vec();
        ix.extend(layout.encode(row, col));
        out.push((ix, s.to_file_string()));
    }
}

fn entries_value(mut rows: Vec<(Vec<usize>, String)>) -> Value {
    rows.sort();
    Value::Array(
        rows.into_iter()
            .map(|(ix, s)| {
                let mut v: Vec<Value> = ix.into_iter().map(Value::from).collect();
                v.push(Value::String(s));
                Value::Array(v)
            })
            .collect(),
    )
}

fn grade_keys(dims: &[usize]) -> Vec<Vec<usize>> {
    dims.iter().fold(vec![vec![]], |acc, &d| {
        acc.into_iter()
            .flat_map(|k| {
                (0..d).map(move |i| {
                    let mut k = k.clone();
                    k.push(i);
                    k
                })
            })
            .collect()
    })
}

struct MapSpec {
    dst: usize,
    src: usize,
    layout: Layout,
}

/// Reads an entry list into one map per key in `0..key_dims` (row-major).
fn read_maps(
    what: &str,
    value: Option<&Value>,
    field: Field,
    key_dims: &[usize],
    spec: impl Fn(&[usize]) -> MapSpec,
) -> Result<Vec<LinMap>, IoError> {
    let keys = grade_keys(key_dims);
    let specs: Vec<MapSpec> = keys.iter().map(|k| spec(k)).collect();
    let mut triplets: Vec<Vec<(usize, usize, Scalar)>> = vec![Vec::new(); keys.len()];
    let entries = match value {
        None | Some(Value::Null) => &[][..],
        Some(Value::Array(xs)) => &xs[..],
        Some(_) => return Err(format_err(format!("{what}: expected an array of entries"))),
    };
    for (n, e) in entries.iter().enumerate() {
        let bad = |msg: &str| format_err(format!("{what}[{n}]: {msg}"));
        let Some(xs) = e.as_array() else {
            return Err(bad("expected an array"));
        };
        let (Some(last), ixs) = (xs.last(), &xs[..xs.len().saturating_sub(1)]) else {
            return Err(bad("empty entry"));
        };
        let ix: Vec<usize> = ixs
            .iter()
            .map(|x| x.as_u64().map(|u| u as usize))
            .collect::<Option<_>>()
            .ok_or_else(|| bad("indices must be non-negative integers"))?;
        if ix.len() < key_dims.len() || ix[..key_dims.len()].iter().zip(key_dims).any(|(i, d)| i >= d) {
            return Err(bad("grade index out of range"));
        }
        let slot = ix[..key_dims.len()].iter().zip(key_dims).fold(0, |acc, (i, d)| acc * d + i);
        let sp = &specs[slot];
        let basis = &ix[key_dims.len()..];
        if basis.len() != sp.layout.arity() {
            return Err(bad(&format!("expected {} indices", key_dims.len() + sp.layout.arity() + 1)));
        }
        let (row, col) = sp.layout.decode(basis).ok_or_else(|| bad("basis index out of range"))?;
        if row >= sp.dst || col >= sp.src {
            return Err(bad("basis index out of range"));
        }
        let scalar = match last {
            Value::String(s) => field.parse_scalar(s)?,
            Value::Number(x) => x.as_i64().map(|i| field.int(i)).ok_or_else(|| bad("scalar must be an integer or a string"))?,
            _ => return Err(bad("scalar must be an integer or a string")),
        };
        triplets[slot].push((row, col, scalar));
    }
    specs
        .iter()
        .zip(triplets)
        .map(|(sp, t)| LinMap::from_triplets(field, sp.dst, sp.src, t).map_err(|e| format_err(format!("{what}: {e}"))))
        .collect()
}

fn field_of(v: &Value) -> Result<Field, IoError> {
    let s = v.get("field").and_then(Value::as_str).ok_or_else(|| format_err("missing \"field\" (\"Q\" or \"F<p>\")"))?;
    Ok(s.parse()?)
}

fn usize_list(v: &Value, key: &str) -> Result<Vec<usize>, IoError> {
    v.get(key)
        .and_then(Value::as_array)
        .and_then(|xs| xs.iter().map(|x| x.as_u64().map(|u| u as usize)).collect::<Option<Vec<_>>>())
        .ok_or_else(|| format_err(format!("\"{key}\" must be an array of non-negative integers")))
}

fn object(v: &Value, what: &str) -> Result<(), IoError> {
    if v.is_object() {
        Ok(())
    } else {
        Err(format_err(format!("{what} must be a JSON object")))
    }
}

fn grading_of(v: &Value) -> Result<Quasigroup, IoError> {
    match v.get("grading") {
        Some(Value::String(text)) => Ok(Quasigroup::parse_cayley(text)?),
        Some(Value::Array(rows)) => {
            let table = rows
                .iter()
                .map(|r| r.as_array().and_then(|xs| xs.iter().map(|x| x.as_u64().map(|u| u as usize)).collect::<Option<Vec<_>>>()))
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| format_err("\"grading\" rows must be arrays of indices"))?;
            Ok(Quasigroup::from_cayley_table(&table)?)
        }
        _ => Err(format_err("missing \"grading\" (Cayley table rows or text)")),
    }
}

pub fn structure_to_value(h: &GradedHopfQuasigroup) -> Value {
    let n = h.order();
    let g = h.grading();
    let grading: Vec<Vec<usize>> = (0..n).map(|p| (0..n).map(|q| g.mul(p, q)).collect()).collect();
    let mut mult = vec![];
    let mut unit = vec![];
    let mut comult = vec![];
    let mut counit = vec![];
    let mut antipode = vec![];
    for p in 0..n {
        for q in 0..n {
            map_entries(&[p, q], h.mult(p, q), Layout::SplitSrc(h.dim(q)), &mut mult);
        }
        map_entries(&[p], h.comult(p), Layout::SplitDst(h.dim(p)), &mut comult);
        map_entries(&[p], h.counit(p), Layout::Col, &mut counit);
        map_entries(&[p], h.antipode(p), Layout::ColRow, &mut antipode);
    }
    map_entries(&[], h.unit_map(), Layout::Row, &mut unit);
    json!({
        "field": h.field().to_string(),
        "grading": grading,
        "dims": h.dims(),
        "mult": entries_value(mult),
        "unit": entries_value(unit),
        "comult": entries_value(comult),
        "counit": entries_value(counit),
        "antipode": entries_value(antipode),
    })
}

pub fn structure_to_json(h: &GradedHopfQuasigroup) -> String {
    canonical_json(&structure_to_value(h))
}

/// Loads the structure maps; the axioms are not checked.
pub fn structure_from_value(v: &Value) -> Result<GradedHopfQuasigroup, IoError> {
    object(v, "structure")?;
    let field = field_of(v)?;
    let grading = grading_of(v)?;
    let n = grading.order();
    let dims = usize_list(v, "dims")?;
    if dims.len() != n {
        return Err(format_err(format!("\"dims\" has {} entries but the grading has order {n}", dims.len())));
    }
    let d = |p: usize| dims[p];
    let mult = read_maps("mult", v.get("mult"), field, &[n, n], |k| MapSpec {
        dst: d(grading.mul(k[0], k[1])),
        src: d(k[0]) * d(k[1]),
        layout: Layout::SplitSrc(d(k[1])),
    })?;
    let unit = read_maps("unit", v.get("unit"), field, &[], |_| MapSpec { dst: d(grading.identity()), src: 1, layout: Layout::Row })?;
    let comult = read_maps("comult", v.get("comult"), field, &[n], |k| MapSpec {
        dst: d(k[0]) * d(k[0]),
        src: d(k[0]),
        layout: Layout::SplitDst(d(k[0])),
    })?;
    let counit = read_maps("counit", v.get("counit"), field, &[n], |k| MapSpec { dst: 1, src: d(k[0]), layout: Layout::Col })?;
    let antipode = read_maps("antipode", v.get("antipode"), field, &[n], |k| MapSpec {
        dst: d(grading.inv(k[0])),
        src: d(k[0]),
        layout: Layout::ColRow,
    })?;
    let unit = unit.into_iter().next().expect("one unit map");
    Ok(GradedHopfQuasigroup::from_parts(grading, field, dims, mult, unit, comult, counit, antipode)?)
}

pub fn structure_from_json(text: &str) -> Result<GradedHopfQuasigroup, IoError> {
    structure_from_value(&serde_json::from_str(text)?)
}

/// A structure given inline or as a path relative to `base`.
fn host_of(v: &Value, base: &Path) -> Result<Arc<GradedHopfQuasigroup>, IoError> {
    match v.get("structure") {
        Some(Value::String(path)) => {
            let path = base.join(path);
            Ok(Arc::new(structure_from_json(&read_file(&path)?)?))
        }
        Some(s @ Value::Object(_)) => Ok(Arc::new(structure_from_value(s)?)),
        _ => Err(format_err("missing \"structure\" (inline object or path)")),
    }
}

fn action_entries(m: &GradedQuasimodule) -> Value {
    let n = m.order();
    let mut rows = vec![];
    for p in 0..n {
        for q in 0..n {
            map_entries(&[p, q], m.action(p, q), Layout::SplitSrc(m.dim(q)), &mut rows);
        }
    }
    entries_value(rows)
}

fn read_action(v: &Value, host: &Arc<GradedHopfQuasigroup>, dims: &[usize]) -> Result<Vec<LinMap>, IoError> {
    let n = host.order();
    if dims.len() != n {
        return Err(format_err(format!("\"dims\" has {} entries but the grading has order {n}", dims.len())));
    }
    read_maps("action", v.get("action"), host.field(), &[n, n], |k| MapSpec {
        dst: dims[host.gm(k[0], k[1])],
        src: host.dim(k[0]) * dims[k[1]],
        layout: Layout::SplitSrc(dims[k[1]]),
    })
}

/// A module file, with or without a coaction.
#[derive(Clone, Debug)]
pub enum ModuleFile {
    Quasi(GradedQuasimodule),
    Hopf(HopfQuasimodule),
}

impl ModuleFile {
    pub fn base(&self) -> &GradedQuasimodule {
        match self {
            ModuleFile::Quasi(m) => m,
            ModuleFile::Hopf(m) => m.base(),
        }
    }
}

fn module_value(m: &GradedQuasimodule) -> Map<String, Value> {
    let mut out = Map::new();
    out.insert("structure".into(), structure_to_value(m.host()));
    out.insert("dims".into(), json!(m.dims()));
    out.insert("action".into(), action_entries(m));
    out
}

pub fn module_to_json(m: &ModuleFile) -> String {
    let mut v = module_value(m.base());
    if let ModuleFile::Hopf(h) = m {
        let mut rows = vec![];
        for q in 0..h.order() {
            map_entries(&[q], h.coaction(q), Layout::SplitDst(h.dim(q)), &mut rows);
        }
        v.insert("coaction".into(), entries_value(rows));
    }
    canonical_json(&Value::Object(v))
}

fn base_module(v: &Value, base: &Path) -> Result<GradedQuasimodule, IoError> {
    object(v, "module")?;
    let host = host_of(v, base)?;
    let dims = usize_list(v, "dims")?;
    let action = read_action(v, &host, &dims)?;
    Ok(GradedQuasimodule::from_parts(host, dims, action)?)
}

/// Loads a module; `structure` paths resolve against `base`. Axioms are not checked.
pub fn module_from_json(text: &str, base: &Path) -> Result<ModuleFile, IoError> {
    let v: Value = serde_json::from_str(text)?;
    let m = base_module(&v, base)?;
    if v.get("coaction").is_none() {
        return Ok(ModuleFile::Quasi(m));
    }
    let coaction = read_maps("coaction", v.get("coaction"), m.field(), &[m.order()], |k| MapSpec {
        dst: m.host().dim(k[0]) * m.dim(k[0]),
        src: m.dim(k[0]),
        layout: Layout::SplitDst(m.dim(k[0])),
    })?;
    Ok(ModuleFile::Hopf(HopfQuasimodule::from_parts(m, coaction)?))
}

pub fn dimodule_to_json(d: &LongDimodule) -> String {
    let mut v = module_value(d.base());
    let e = d.host().grading().identity();
    let mut rows = vec![];
    for q in 0..d.order() {
        map_entries(&[q], d.right_coaction(q), Layout::SplitDst(d.host().dim(e)), &mut rows);
    }
    v.insert("right_coaction".into(), entries_value(rows));
    canonical_json(&Value::Object(v))
}

pub fn dimodule_from_json(text: &str, base: &Path) -> Result<LongDimodule, IoError> {
    let v: Value = serde_json::from_str(text)?;
    let m = base_module(&v, base)?;
    let he = m.host().dim(m.host().grading().identity());
    let right = read_maps("right_coaction", v.get("right_coaction"), m.field(), &[m.order()], |k| MapSpec {
        dst: m.dim(k[0]) * he,
        src: m.dim(k[0]),
        layout: Layout::SplitDst(he),
    })?;
    Ok(LongDimodule::from_parts(m, right)?)
}

pub fn smash_to_json(x: &QuasimoduleHopfQuasigroup) -> String {
    let algebra = x.algebra().as_graded().expect("shape-checked on construction");
    let mut rows = vec![];
    for p in 0..x.host().order() {
        map_entries(&[p], x.action(p), Layout::SplitSrc(x.algebra().dim), &mut rows);
    }
    canonical_json(&json!({
        "hopf": structure_to_value(x.host()),
        "algebra": structure_to_value(&algebra),
        "action": entries_value(rows),
    }))
}

fn structure_field(v: &Value, key: &str, base: &Path) -> Result<GradedHopfQuasigroup, IoError> {
    match v.get(key) {
        Some(Value::String(path)) => structure_from_json(&read_file(&base.join(path))?),
        Some(s @ Value::Object(_)) => structure_from_value(s),
        _ => Err(format_err(format!("missing \"{key}\" (inline structure or path)"))),
    }
}

/// Loads a smash input; the algebra must have a one-element grading.
pub fn smash_from_json(text: &str, base: &Path) -> Result<QuasimoduleHopfQuasigroup, IoError> {
    let v: Value = serde_json::from_str(text)?;
    object(&v, "smash input")?;
    let host = Arc::new(structure_field(&v, "hopf", base)?);
    let algebra = structure_field(&v, "algebra", base)?;
    let algebra = HopfQuasigroupData::from_graded(&algebra).ok_or_else(|| format_err("\"algebra\" must have a one-element grading"))?;
    let d = algebra.dim;
    let action = read_maps("action", v.get("action"), host.field(), &[host.order()], |k| MapSpec {
        dst: d,
        src: host.dim(k[0]) * d,
        layout: Layout::SplitSrc(d),
    })?;
    Ok(QuasimoduleHopfQuasigroup::from_parts(host, algebra, action)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layouts_round_trip() {
        for layout in [Layout::SplitSrc(3), Layout::SplitDst(2), Layout::ColRow] {
            let ix = layout.encode(5, 4);
            assert_eq!(layout.decode(&ix), Some((5, 4)));
        }
        assert_eq!(Layout::SplitSrc(3).decode(&[0, 3, 0]), None);
    }

    #[test]
    fn canonical_layout() {
        let v = json!({"b": [[1, "1/1"], [0, "2/1"]], "a": [1, 2], "c": {}});
        assert_eq!(canonical_json(&v), "{\n  \"a\": [1,2],\n  \"b\": [\n    [1,\"1/1\"],\n    [0,\"2/1\"]\n  ],\n  \"c\": {}\n}\n");
    }
}
