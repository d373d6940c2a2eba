//! Structure documents: JSON with scalars as strings, sparse sorted tables and
//! sorted keys. Canonical text is `serde_json` compact output of the value
//! produced by [`Bundle::to_value`].

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::exactalg::matrix::zero_vec;
use crate::exactalg::{Action, Bilinear, Field, FinAlgebra, LinMap, Scalar, Vector};
use crate::simplicial::TruncSimplicialAlgebra;
use crate::structures::{CrossedSquare, PreCrossedModule, QuadraticModule, TwoCrossedModule};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    Algebra(FinAlgebra),
    Simplicial(TruncSimplicialAlgebra),
    PreCrossed(PreCrossedModule),
    Crossed(PreCrossedModule),
    TwoCrossed(TwoCrossedModule),
    Square(CrossedSquare),
    Quadratic(QuadraticModule),
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Algebra(_) => "algebra",
            Structure::Simplicial(_) => "simplicial",
            Structure::PreCrossed(_) => "pre_crossed_module",
            Structure::Crossed(_) => "crossed_module",
            Structure::TwoCrossed(_) => "two_crossed",
            Structure::Square(_) => "crossed_square",
            Structure::Quadratic(_) => "quadratic",
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Structure::Algebra(a) => a.field(),
            Structure::Simplicial(e) => e.field(),
            Structure::PreCrossed(p) | Structure::Crossed(p) => p.r.field(),
            Structure::TwoCrossed(t) => t.c0.field(),
            Structure::Square(s) => s.r.field(),
            Structure::Quadratic(q) => q.n.field(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Meta {
    pub name: String,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bundle {
    pub meta: Meta,
    pub structure: Structure,
}

fn perr(path: &str, msg: impl Into<String>) -> Error {
    Error::Parse { path: path.to_string(), msg: msg.into() }
}

fn dim_err(table: &str, msg: impl Into<String>) -> Error {
    Error::Dimension { table: table.to_string(), msg: msg.into() }
}

fn get<'a>(v: &'a Value, key: &str, path: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| perr(path, format!("missing field {key:?}")))
}

fn get_usize(v: &Value, key: &str, path: &str) -> Result<usize> {
    get(v, key, path)?
        .as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| perr(&format!("{path}.{key}"), "expected a non-negative integer"))
}

fn get_array<'a>(v: &'a Value, key: &str, path: &str) -> Result<&'a Vec<Value>> {
    get(v, key, path)?.as_array().ok_or_else(|| perr(&format!("{path}.{key}"), "expected an array"))
}

fn scalar_value(s: &Scalar) -> Value {
    Value::String(s.render())
}

fn parse_scalar(field: Field, v: &Value, path: &str) -> Result<Scalar> {
    match v {
        Value::String(s) => field.parse(s).map_err(|e| e.at(path)),
        Value::Number(n) if n.is_i64() => Ok(field.int(n.as_i64().unwrap_or(0))),
        _ => Err(perr(path, "scalar must be a string such as \"-1/2\"")),
    }
}

/// Entries `[i0, .., i_{k-1}, "value"]` with bounds checking.
fn parse_entries(field: Field, v: &Value, path: &str, bounds: &[usize]) -> Result<Vec<(Vec<usize>, Scalar)>> {
    let arr = v.as_array().ok_or_else(|| perr(path, "expected an array of entries"))?;
    let mut out: Vec<(Vec<usize>, Scalar)> = Vec::with_capacity(arr.len());
    for (n, e) in arr.iter().enumerate() {
        let p = format!("{path}[{n}]");
        let items = e.as_array().ok_or_else(|| perr(&p, "entry must be an array"))?;
        if items.len() != bounds.len() + 1 {
            return Err(perr(&p, format!("entry must have {} indices and a value", bounds.len())));
        }
        let mut idx = Vec::with_capacity(bounds.len());
        for (k, b) in bounds.iter().enumerate() {
            let i = items[k].as_u64().ok_or_else(|| perr(&p, "index must be a non-negative integer"))? as usize;
            if i >= *b {
                return Err(dim_err(path, format!("entry {n}: index {i} out of range 0..{b}")));
            }
            idx.push(i);
        }
        if out.iter().any(|(o, _)| *o == idx) {
            return Err(perr(&p, "duplicate entry"));
        }
        let s = parse_scalar(field, &items[bounds.len()], &format!("{p}[{}]", bounds.len()))?;
        out.push((idx, s));
    }
    Ok(out)
}

fn entries_value(mut entries: Vec<(Vec<usize>, Scalar)>) -> Value {
    entries.retain(|(_, s)| !s.is_zero());
    entries.sort_by(|a, b| a.0.cmp(&b.0));
    Value::Array(
        entries
            .into_iter()
            .map(|(idx, s)| {
                let mut row: Vec<Value> = idx.into_iter().map(|i| json!(i)).collect();
                row.push(scalar_value(&s));
                Value::Array(row)
            })
            .collect(),
    )
}

/// Table `t[a][b]` of vectors of length `c`, flattened as `[a, b, c, v]`.
fn table3_entries(vals: impl Iterator<Item = ((usize, usize), Vector)>) -> Vec<(Vec<usize>, Scalar)> {
    let mut out = Vec::new();
    for ((a, b), v) in vals {
        for (k, s) in v.into_iter().enumerate() {
            if !s.is_zero() {
                out.push((vec![a, b, k], s));
            }
        }
    }
    out
}

pub fn algebra_to_value(a: &FinAlgebra) -> Value {
    let d = a.dim();
    let vals = (0..d).flat_map(|i| (0..d).map(move |j| (i, j))).map(|(i, j)| ((i, j), a.basis_product(i, j).clone()));
    json!({ "dim": d, "labels": a.labels(), "mul": entries_value(table3_entries(vals)) })
}

pub fn algebra_from_value(field: Field, v: &Value, path: &str) -> Result<FinAlgebra> {
    let d = get_usize(v, "dim", path)?;
    let labels = match v.get("labels") {
        None => (0..d).map(|i| format!("e{i}")).collect(),
        Some(l) => {
            let arr = l.as_array().ok_or_else(|| perr(&format!("{path}.labels"), "expected an array of strings"))?;
            if arr.len() != d {
                return Err(dim_err(&format!("{path}.labels"), format!("{} labels for dimension {d}", arr.len())));
            }
            arr.iter()
                .map(|s| s.as_str().map(str::to_string).ok_or_else(|| perr(&format!("{path}.labels"), "labels must be strings")))
                .collect::<Result<Vec<_>>>()?
        }
    };
    let mut mul = vec![zero_vec(field, d); d * d];
    let mp = format!("{path}.mul");
    let entries = match v.get("mul") {
        None => vec![],
        Some(m) => parse_entries(field, m, &mp, &[d, d, d])?,
    };
    for (idx, s) in entries {
        mul[idx[0] * d + idx[1]][idx[2]] = s;
    }
    FinAlgebra::new(field, labels, mul).map_err(|e| e.at(path))
}

pub fn map_to_value(m: &LinMap) -> Value {
    let mut entries = Vec::new();
    for c in 0..m.source_dim() {
        for r in 0..m.target_dim() {
            entries.push((vec![r, c], m.get(r, c).clone()));
        }
    }
    json!({ "source": m.source_dim(), "target": m.target_dim(), "entries": entries_value(entries) })
}

pub fn map_from_value(field: Field, v: &Value, path: &str, source: usize, target: usize) -> Result<LinMap> {
    let s = get_usize(v, "source", path)?;
    let t = get_usize(v, "target", path)?;
    if s != source || t != target {
        return Err(dim_err(path, format!("map is {t}x{s} but {target}x{source} is required")));
    }
    let mut m = LinMap::zero(field, t, s);
    for (idx, x) in parse_entries(field, get(v, "entries", path)?, &format!("{path}.entries"), &[t, s])? {
        m.set(idx[0], idx[1], x);
    }
    Ok(m)
}

pub fn action_to_value(a: &Action) -> Value {
    let vals = (0..a.acting_dim()).flat_map(|i| (0..a.module_dim()).map(move |j| (i, j))).map(|(i, j)| ((i, j), a.basis_act(i, j)));
    json!({ "acting": a.acting_dim(), "module": a.module_dim(), "entries": entries_value(table3_entries(vals)) })
}

pub fn action_from_value(field: Field, v: &Value, path: &str, acting: usize, module: usize) -> Result<Action> {
    let a = get_usize(v, "acting", path)?;
    let m = get_usize(v, "module", path)?;
    if a != acting || m != module {
        return Err(dim_err(path, format!("action is {a} on {m} but {acting} on {module} is required")));
    }
    let mut act = Action::trivial(field, a, m);
    let mut ops = vec![LinMap::zero(field, m, m); a];
    for (idx, x) in parse_entries(field, get(v, "entries", path)?, &format!("{path}.entries"), &[a, m, m])? {
        ops[idx[0]].set(idx[2], idx[1], x);
    }
    for (i, op) in ops.into_iter().enumerate() {
        for j in 0..m {
            act.set_basis_act(i, j, op.column(j));
        }
    }
    Ok(act)
}

pub fn bilinear_to_value(b: &Bilinear) -> Value {
    let vals = (0..b.left_dim()).flat_map(|i| (0..b.right_dim()).map(move |j| (i, j))).map(|(i, j)| ((i, j), b.basis_value(i, j).clone()));
    json!({ "left": b.left_dim(), "right": b.right_dim(), "target": b.target_dim(), "entries": entries_value(table3_entries(vals)) })
}

pub fn bilinear_from_value(field: Field, v: &Value, path: &str, left: usize, right: usize, target: usize) -> Result<Bilinear> {
    let (l, r, t) = (get_usize(v, "left", path)?, get_usize(v, "right", path)?, get_usize(v, "target", path)?);
    if (l, r, t) != (left, right, target) {
        return Err(dim_err(path, format!("bilinear map is {l}x{r}->{t} but {left}x{right}->{target} is required")));
    }
    let mut b = Bilinear::zero(field, l, r, t);
    for (idx, x) in parse_entries(field, get(v, "entries", path)?, &format!("{path}.entries"), &[l, r, t])? {
        let mut cur = b.basis_value(idx[0], idx[1]).clone();
        cur[idx[2]] = x;
        b.set_basis_value(idx[0], idx[1], cur);
    }
    Ok(b)
}

fn simplicial_to_value(e: &TruncSimplicialAlgebra) -> Value {
    let faces: Vec<Value> = e.faces().iter().map(|fs| Value::Array(fs.iter().map(map_to_value).collect())).collect();
    // The top level has no degeneracies; only the lower ones are written.
    let degens: Vec<Value> = e.degens()[..e.truncation()].iter().map(|ds| Value::Array(ds.iter().map(map_to_value).collect())).collect();
    json!({
        "truncation": e.truncation(),
        "levels": e.levels().iter().map(algebra_to_value).collect::<Vec<_>>(),
        "faces": faces,
        "degens": degens,
    })
}

fn simplicial_from_value(field: Field, v: &Value, path: &str) -> Result<TruncSimplicialAlgebra> {
    let n = get_usize(v, "truncation", path)?;
    let lv = get_array(v, "levels", path)?;
    if lv.len() != n + 1 {
        return Err(dim_err(&format!("{path}.levels"), format!("{} levels for truncation {n}", lv.len())));
    }
    let levels = lv
        .iter()
        .enumerate()
        .map(|(k, a)| algebra_from_value(field, a, &format!("{path}.levels[{k}]")))
        .collect::<Result<Vec<_>>>()?;
    let fv = get_array(v, "faces", path)?;
    let dv = get_array(v, "degens", path)?;
    if fv.len() != n + 1 || dv.len() != n {
        return Err(dim_err(path, format!("need {} face lists and {n} degeneracy lists", n + 1)));
    }
    let mut faces = Vec::with_capacity(n + 1);
    for (k, fl) in fv.iter().enumerate() {
        let p = format!("{path}.faces[{k}]");
        let arr = fl.as_array().ok_or_else(|| perr(&p, "expected an array of maps"))?;
        let want = if k == 0 { 0 } else { k + 1 };
        if arr.len() != want {
            return Err(dim_err(&p, format!("{} faces at level {k}, expected {want}", arr.len())));
        }
        let maps = arr
            .iter()
            .enumerate()
            .map(|(i, m)| map_from_value(field, m, &format!("{p}[{i}]"), levels[k].dim(), levels[k - 1].dim()))
            .collect::<Result<Vec<_>>>()?;
        faces.push(maps);
    }
    let mut degens = Vec::with_capacity(n + 1);
    for (k, dl) in dv.iter().enumerate() {
        let p = format!("{path}.degens[{k}]");
        let arr = dl.as_array().ok_or_else(|| perr(&p, "expected an array of maps"))?;
        if arr.len() != k + 1 {
            return Err(dim_err(&p, format!("{} degeneracies at level {k}, expected {}", arr.len(), k + 1)));
        }
        let maps = arr
            .iter()
            .enumerate()
            .map(|(i, m)| map_from_value(field, m, &format!("{p}[{i}]"), levels[k].dim(), levels[k + 1].dim()))
            .collect::<Result<Vec<_>>>()?;
        degens.push(maps);
    }
    degens.push(Vec::new());
    TruncSimplicialAlgebra::new(levels, faces, degens).map_err(|e| e.at(path))
}

fn precrossed_to_value(p: &PreCrossedModule) -> Value {
    json!({
        "c": algebra_to_value(&p.c),
        "r": algebra_to_value(&p.r),
        "boundary": map_to_value(&p.boundary),
        "action": action_to_value(&p.act),
    })
}

fn precrossed_from_value(field: Field, v: &Value, path: &str) -> Result<PreCrossedModule> {
    let c = algebra_from_value(field, get(v, "c", path)?, &format!("{path}.c"))?;
    let r = algebra_from_value(field, get(v, "r", path)?, &format!("{path}.r"))?;
    let boundary = map_from_value(field, get(v, "boundary", path)?, &format!("{path}.boundary"), c.dim(), r.dim())?;
    let act = action_from_value(field, get(v, "action", path)?, &format!("{path}.action"), r.dim(), c.dim())?;
    Ok(PreCrossedModule::new(c, r, boundary, act))
}

fn two_crossed_to_value(t: &TwoCrossedModule) -> Value {
    json!({
        "c2": algebra_to_value(&t.c2),
        "c1": algebra_to_value(&t.c1),
        "c0": algebra_to_value(&t.c0),
        "d2": map_to_value(&t.d2),
        "d1": map_to_value(&t.d1),
        "c0_on_c1": action_to_value(&t.act10),
        "c0_on_c2": action_to_value(&t.act20),
        "c1_on_c2": action_to_value(&t.act21),
        "lifting": bilinear_to_value(&t.lifting),
    })
}

fn two_crossed_from_value(field: Field, v: &Value, path: &str) -> Result<TwoCrossedModule> {
    let alg = |k: &str| algebra_from_value(field, get(v, k, path)?, &format!("{path}.{k}"));
    let (c2, c1, c0) = (alg("c2")?, alg("c1")?, alg("c0")?);
    let (n2, n1, n0) = (c2.dim(), c1.dim(), c0.dim());
    let d2 = map_from_value(field, get(v, "d2", path)?, &format!("{path}.d2"), n2, n1)?;
    let d1 = map_from_value(field, get(v, "d1", path)?, &format!("{path}.d1"), n1, n0)?;
    let act10 = action_from_value(field, get(v, "c0_on_c1", path)?, &format!("{path}.c0_on_c1"), n0, n1)?;
    let act20 = action_from_value(field, get(v, "c0_on_c2", path)?, &format!("{path}.c0_on_c2"), n0, n2)?;
    let act21 = match v.get("c1_on_c2") {
        Some(a) => action_from_value(field, a, &format!("{path}.c1_on_c2"), n1, n2)?,
        None => TwoCrossedModule::derived_act21(&act20, &d1),
    };
    let lifting = bilinear_from_value(field, get(v, "lifting", path)?, &format!("{path}.lifting"), n1, n1, n2)?;
    Ok(TwoCrossedModule { c2, c1, c0, d2, d1, act10, act20, act21, lifting })
}

fn square_to_value(s: &CrossedSquare) -> Value {
    json!({
        "l": algebra_to_value(&s.l),
        "m": algebra_to_value(&s.m),
        "n": algebra_to_value(&s.n),
        "r": algebra_to_value(&s.r),
        "lambda": map_to_value(&s.lam),
        "lambda_prime": map_to_value(&s.lam2),
        "mu": map_to_value(&s.mu),
        "nu": map_to_value(&s.nu),
        "r_on_l": action_to_value(&s.act_l),
        "r_on_m": action_to_value(&s.act_m),
        "r_on_n": action_to_value(&s.act_n),
        "h": bilinear_to_value(&s.h),
    })
}

fn square_from_value(field: Field, v: &Value, path: &str) -> Result<CrossedSquare> {
    let alg = |k: &str| algebra_from_value(field, get(v, k, path)?, &format!("{path}.{k}"));
    let (l, m, n, r) = (alg("l")?, alg("m")?, alg("n")?, alg("r")?);
    let map = |k: &str, s: usize, t: usize| map_from_value(field, get(v, k, path)?, &format!("{path}.{k}"), s, t);
    let act = |k: &str, mdim: usize| action_from_value(field, get(v, k, path)?, &format!("{path}.{k}"), r.dim(), mdim);
    Ok(CrossedSquare {
        lam: map("lambda", l.dim(), m.dim())?,
        lam2: map("lambda_prime", l.dim(), n.dim())?,
        mu: map("mu", m.dim(), r.dim())?,
        nu: map("nu", n.dim(), r.dim())?,
        act_l: act("r_on_l", l.dim())?,
        act_m: act("r_on_m", m.dim())?,
        act_n: act("r_on_n", n.dim())?,
        h: bilinear_from_value(field, get(v, "h", path)?, &format!("{path}.h"), m.dim(), n.dim(), l.dim())?,
        l,
        m,
        n,
        r,
    })
}

fn quadratic_to_value(q: &QuadraticModule) -> Value {
    json!({
        "l": algebra_to_value(&q.l),
        "m": algebra_to_value(&q.m),
        "n": algebra_to_value(&q.n),
        "delta": map_to_value(&q.delta),
        "boundary": map_to_value(&q.boundary),
        "n_on_l": action_to_value(&q.act_l),
        "n_on_m": action_to_value(&q.act_m),
        "to_c": map_to_value(&q.proj_c),
        "omega": bilinear_to_value(&q.omega),
    })
}

fn quadratic_from_value(field: Field, v: &Value, path: &str) -> Result<QuadraticModule> {
    let alg = |k: &str| algebra_from_value(field, get(v, k, path)?, &format!("{path}.{k}"));
    let (l, m, n) = (alg("l")?, alg("m")?, alg("n")?);
    let tc = get(v, "to_c", path)?;
    let cdim = get_usize(tc, "target", &format!("{path}.to_c"))?;
    Ok(QuadraticModule {
        delta: map_from_value(field, get(v, "delta", path)?, &format!("{path}.delta"), l.dim(), m.dim())?,
        boundary: map_from_value(field, get(v, "boundary", path)?, &format!("{path}.boundary"), m.dim(), n.dim())?,
        act_l: action_from_value(field, get(v, "n_on_l", path)?, &format!("{path}.n_on_l"), n.dim(), l.dim())?,
        act_m: action_from_value(field, get(v, "n_on_m", path)?, &format!("{path}.n_on_m"), n.dim(), m.dim())?,
        proj_c: map_from_value(field, tc, &format!("{path}.to_c"), m.dim(), cdim)?,
        omega: bilinear_from_value(field, get(v, "omega", path)?, &format!("{path}.omega"), cdim, cdim, l.dim())?,
        l,
        m,
        n,
    })
}

impl Bundle {
    pub fn new(name: impl Into<String>, structure: Structure) -> Bundle {
        Bundle { meta: Meta { name: name.into(), notes: vec![] }, structure }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Bundle {
        self.meta.notes.push(note.into());
        self
    }

    pub fn kind(&self) -> &'static str {
        self.structure.kind()
    }

    pub fn field(&self) -> Field {
        self.structure.field()
    }

    pub fn to_value(&self) -> Value {
        let payload = match &self.structure {
            Structure::Algebra(a) => algebra_to_value(a),
            Structure::Simplicial(e) => simplicial_to_value(e),
            Structure::PreCrossed(p) | Structure::Crossed(p) => precrossed_to_value(p),
            Structure::TwoCrossed(t) => two_crossed_to_value(t),
            Structure::Square(s) => square_to_value(s),
            Structure::Quadratic(q) => quadratic_to_value(q),
        };
        json!({
            "kind": self.kind(),
            "field": self.field().spec(),
            "meta": { "name": self.meta.name, "notes": self.meta.notes },
            "payload": payload,
        })
    }

    /// Canonical compact text.
    pub fn canonical(&self) -> String {
        self.to_value().to_string()
    }

    /// Indented canonical text, for files.
    pub fn to_pretty(&self) -> String {
        serde_json::to_string_pretty(&self.to_value()).expect("values always serialize")
    }

    /// SHA-256 of kind, field and payload, hex encoded. The name and notes
    /// are left out so that renaming a bundle keeps its digest.
    pub fn digest(&self) -> String {
        let mut v = self.to_value();
        if let Some(o) = v.as_object_mut() {
            o.remove("meta");
        }
        hex::encode(Sha256::digest(v.to_string().as_bytes()))
    }

    pub fn parse(text: &str, allow_char2: bool) -> Result<Bundle> {
        let v: Value = serde_json::from_str(text)
            .map_err(|e| perr(&format!("line {} column {}", e.line(), e.column()), e.to_string()))?;
        Bundle::from_value(&v, allow_char2)
    }

    pub fn from_value(v: &Value, allow_char2: bool) -> Result<Bundle> {
        let kind = get(v, "kind", "$")?.as_str().ok_or_else(|| perr("$.kind", "expected a string"))?;
        let fs = get(v, "field", "$")?.as_str().ok_or_else(|| perr("$.field", "expected a string"))?;
        let field = Field::parse_spec(fs, allow_char2).map_err(|e| perr("$.field", e.to_string()))?;
        let meta = match v.get("meta") {
            None => Meta::default(),
            Some(m) => Meta {
                name: m.get("name").and_then(Value::as_str).unwrap_or_default().to_string(),
                notes: m
                    .get("notes")
                    .and_then(Value::as_array)
                    .map(|a| a.iter().filter_map(|s| s.as_str().map(str::to_string)).collect())
                    .unwrap_or_default(),
            },
        };
        let p = get(v, "payload", "$")?;
        let path = "$.payload";
        let structure = match kind {
            "algebra" => Structure::Algebra(algebra_from_value(field, p, path)?),
            "simplicial" => Structure::Simplicial(simplicial_from_value(field, p, path)?),
            "pre_crossed_module" => Structure::PreCrossed(precrossed_from_value(field, p, path)?),
            "crossed_module" => Structure::Crossed(precrossed_from_value(field, p, path)?),
            "two_crossed" => Structure::TwoCrossed(two_crossed_from_value(field, p, path)?),
            "crossed_square" => Structure::Square(square_from_value(field, p, path)?),
            "quadratic" => Structure::Quadratic(quadratic_from_value(field, p, path)?),
            other => return Err(perr("$.kind", format!("unknown kind {other:?}"))),
        };
        Ok(Bundle { meta, structure })
    }
}
