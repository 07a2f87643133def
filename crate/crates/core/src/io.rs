//! JSON file formats: `.alg`, `.quiver`, `.mod`, `.ext`, `.bimod`, `.cpx`, `.gr`.
//!
//! References to algebras and modules are either paths, resolved relative to the
//! referring file, inline objects, or `corpus:<name>` for a bundled algebra.

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex};

use serde_json::{json, Map, Value};

use crate::algebra::{
    path_algebra, with_primitive_idempotents, Algebra, AlgebraData, Provenance, Quiver, Relation,
    DEFAULT_MAX_PATH_LENGTH,
};
use crate::corpus::named_algebra;
use crate::dgcplx::GradedModule;
use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, Mat, Scalar};
use crate::frobenius::{Bimodule, RingExtension};
use crate::homology::Complex;
use crate::modrep::Module;

/// Where a value came from, for error messages.
#[derive(Clone)]
struct Ctx<'a> {
    file: &'a str,
    field: String,
}

impl<'a> Ctx<'a> {
    fn root(file: &'a str) -> Self {
        Ctx {
            file,
            field: String::new(),
        }
    }

    fn key(&self, k: &str) -> Ctx<'a> {
        let field = if self.field.is_empty() {
            k.to_string()
        } else {
            format!("{}.{k}", self.field)
        };
        Ctx { file: self.file, field }
    }

    fn index(&self, i: usize) -> Ctx<'a> {
        Ctx {
            file: self.file,
            field: format!("{}[{i}]", self.field),
        }
    }

    fn err(&self, message: impl Into<String>) -> Error {
        let field = if self.field.is_empty() {
            "(root)".to_string()
        } else {
            self.field.clone()
        };
        Error::parse(self.file, field, message)
    }

    /// Attaches this location to a validation error from the core.
    fn wrap(&self, e: Error) -> Error {
        match e {
            Error::Parse { .. } => e,
            other => self.err(other.to_string()),
        }
    }
}

fn get<'v>(v: &'v Value, k: &str, ctx: &Ctx) -> Result<&'v Value> {
    v.get(k).ok_or_else(|| ctx.key(k).err("missing"))
}

fn as_array<'v>(v: &'v Value, ctx: &Ctx) -> Result<&'v Vec<Value>> {
    v.as_array().ok_or_else(|| ctx.err("expected an array"))
}

fn as_usize(v: &Value, ctx: &Ctx) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| ctx.err("expected a non-negative integer"))
}

fn as_i64(v: &Value, ctx: &Ctx) -> Result<i64> {
    v.as_i64().ok_or_else(|| ctx.err("expected an integer"))
}

fn as_str<'v>(v: &'v Value, ctx: &Ctx) -> Result<&'v str> {
    v.as_str().ok_or_else(|| ctx.err("expected a string"))
}

fn scalar(field: FieldSpec, v: &Value, ctx: &Ctx) -> Result<Scalar> {
    let text = match v {
        Value::String(s) => s.clone(),
        Value::Number(n) if n.is_i64() => n.to_string(),
        _ => return Err(ctx.err("expected a scalar string or integer")),
    };
    field.parse(&text).map_err(|e| ctx.wrap(e))
}

fn vector(field: FieldSpec, v: &Value, n: usize, ctx: &Ctx) -> Result<Mat> {
    let items = as_array(v, ctx)?;
    if items.len() != n {
        return Err(ctx.err(format!("expected {n} coordinates, found {}", items.len())));
    }
    let entries = items
        .iter()
        .enumerate()
        .map(|(i, x)| scalar(field, x, &ctx.index(i)))
        .collect::<Result<Vec<_>>>()?;
    Mat::column_vector(field, &entries).map_err(|e| ctx.wrap(e))
}

/// Row-major matrix of the given shape.
fn matrix(field: FieldSpec, v: &Value, rows: usize, cols: usize, ctx: &Ctx) -> Result<Mat> {
    let items = as_array(v, ctx)?;
    if items.len() != rows {
        return Err(ctx.err(format!("expected {rows} rows, found {}", items.len())));
    }
    let mut m = Mat::zeros(field, rows, cols);
    for (i, row) in items.iter().enumerate() {
        let rctx = ctx.index(i);
        let row = as_array(row, &rctx)?;
        if row.len() != cols {
            return Err(rctx.err(format!("expected {cols} entries, found {}", row.len())));
        }
        for (j, x) in row.iter().enumerate() {
            m.set(i, j, &scalar(field, x, &rctx.index(j))?);
        }
    }
    Ok(m)
}

fn field_spec(v: &Value, ctx: &Ctx) -> Result<FieldSpec> {
    let c = as_usize(get(v, "char", ctx)?, &ctx.key("char"))?;
    let c = u32::try_from(c).map_err(|_| ctx.key("char").err("characteristic too large"))?;
    FieldSpec::new(c).map_err(|e| ctx.key("char").wrap(e))
}

fn field_json(f: FieldSpec) -> Value {
    json!({ "char": f.characteristic() })
}

fn matrix_json(m: &Mat) -> Value {
    json!(m.to_string_rows())
}

fn vector_json(v: &Mat) -> Value {
    json!((0..v.rows()).map(|i| v.get(i, 0).to_string()).collect::<Vec<_>>())
}

fn parse_algebra(v: &Value, ctx: &Ctx) -> Result<Arc<Algebra>> {
    if v.get("vertices").is_some() {
        return parse_quiver(v, ctx);
    }
    let field = field_spec(get(v, "field", ctx)?, &ctx.key("field"))?;
    let bctx = ctx.key("basis");
    let labels = as_array(get(v, "basis", ctx)?, &bctx)?
        .iter()
        .enumerate()
        .map(|(i, l)| as_str(l, &bctx.index(i)).map(str::to_string))
        .collect::<Result<Vec<_>>>()?;
    let n = labels.len();
    if n == 0 {
        return Err(bctx.err("an algebra needs a nonempty basis"));
    }
    let tctx = ctx.key("table");
    let rows = as_array(get(v, "table", ctx)?, &tctx)?;
    if rows.len() != n {
        return Err(tctx.err(format!("expected {n} rows, found {}", rows.len())));
    }
    let mut table = Vec::with_capacity(n);
    for (i, row) in rows.iter().enumerate() {
        let rctx = tctx.index(i);
        let row = as_array(row, &rctx)?;
        if row.len() != n {
            return Err(rctx.err(format!("expected {n} products, found {}", row.len())));
        }
        table.push(
            row.iter()
                .enumerate()
                .map(|(j, x)| vector(field, x, n, &rctx.index(j)))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    let unit = vector(field, get(v, "unit", ctx)?, n, &ctx.key("unit"))?;
    let mut data = AlgebraData::from_table(field, labels, &table, unit).map_err(|e| tctx.wrap(e))?;
    let list = |key: &str| -> Result<Option<Vec<Mat>>> {
        match v.get(key) {
            None | Some(Value::Null) => Ok(None),
            Some(x) => {
                let kctx = ctx.key(key);
                as_array(x, &kctx)?
                    .iter()
                    .enumerate()
                    .map(|(i, e)| vector(field, e, n, &kctx.index(i)))
                    .collect::<Result<Vec<_>>>()
                    .map(Some)
            }
        }
    };
    data.idempotents = list("idempotents")?;
    data.blocks = list("blocks")?.unwrap_or_default();
    if let Some(p) = v.get("provenance") {
        data.provenance =
            serde_json::from_value::<Provenance>(p.clone()).map_err(|e| ctx.key("provenance").err(e.to_string()))?;
    }
    let a = Algebra::new(data).map_err(|e| tctx.wrap(e))?;
    with_primitive_idempotents(&a).map_err(|e| ctx.key("idempotents").wrap(e))
}

/// Relations are lists of terms `[[labels], coeff]`; a single term or a bare label
/// list is accepted as a one-term relation.
fn parse_relation(field: FieldSpec, v: &Value, ctx: &Ctx) -> Result<Relation> {
    let items = as_array(v, ctx)?;
    let path = |p: &Value, c: &Ctx| -> Result<Vec<String>> {
        as_array(p, c)?
            .iter()
            .enumerate()
            .map(|(i, l)| as_str(l, &c.index(i)).map(str::to_string))
            .collect()
    };
    let term = |t: &Value, c: &Ctx| -> Result<(Vec<String>, Scalar)> {
        let parts = as_array(t, c)?;
        if parts.len() != 2 {
            return Err(c.err("a term is [path, coefficient]"));
        }
        Ok((path(&parts[0], &c.index(0))?, scalar(field, &parts[1], &c.index(1))?))
    };
    let terms = match items.first() {
        None => return Err(ctx.err("empty relation")),
        Some(Value::String(_)) => vec![(path(v, ctx)?, field.one())],
        Some(Value::Array(inner)) if matches!(inner.first(), Some(Value::String(_))) || inner.is_empty() => {
            vec![term(v, ctx)?]
        }
        Some(_) => items
            .iter()
            .enumerate()
            .map(|(i, t)| term(t, &ctx.index(i)))
            .collect::<Result<Vec<_>>>()?,
    };
    Ok(Relation { terms })
}

fn parse_quiver(v: &Value, ctx: &Ctx) -> Result<Arc<Algebra>> {
    let field = match v.get("field") {
        Some(f) => field_spec(f, &ctx.key("field"))?,
        None => FieldSpec::prime(2),
    };
    let vertices = as_usize(get(v, "vertices", ctx)?, &ctx.key("vertices"))?;
    let actx = ctx.key("arrows");
    let mut arrows = Vec::new();
    for (i, a) in as_array(get(v, "arrows", ctx)?, &actx)?.iter().enumerate() {
        let c = actx.index(i);
        let parts = as_array(a, &c)?;
        if parts.len() != 3 {
            return Err(c.err("an arrow is [source, target, label]"));
        }
        let s = as_usize(&parts[0], &c.index(0))?;
        let t = as_usize(&parts[1], &c.index(1))?;
        if s == 0 || t == 0 || s > vertices || t > vertices {
            return Err(c.err(format!("vertices are numbered 1..={vertices}")));
        }
        arrows.push((s - 1, t - 1, as_str(&parts[2], &c.index(2))?.to_string()));
    }
    let refs: Vec<(usize, usize, &str)> = arrows.iter().map(|(s, t, l)| (*s, *t, l.as_str())).collect();
    let mut q = Quiver::new(vertices, &refs);
    if let Some(rels) = v.get("relations") {
        let rctx = ctx.key("relations");
        q.relations = as_array(rels, &rctx)?
            .iter()
            .enumerate()
            .map(|(i, r)| parse_relation(field, r, &rctx.index(i)))
            .collect::<Result<Vec<_>>>()?;
    }
    let max = match v.get("maxPathLength") {
        Some(m) => as_usize(m, &ctx.key("maxPathLength"))?,
        None => DEFAULT_MAX_PATH_LENGTH,
    };
    path_algebra(&q, field, max).map_err(|e| ctx.key("relations").wrap(e))
}

fn parse_module(a: &Arc<Algebra>, v: &Value, ctx: &Ctx) -> Result<Module> {
    let dim = as_usize(get(v, "dim", ctx)?, &ctx.key("dim"))?;
    let actx = ctx.key("action");
    let mats = as_array(get(v, "action", ctx)?, &actx)?;
    if mats.len() != a.dim() {
        return Err(actx.err(format!(
            "expected {} matrices, one per basis element, found {}",
            a.dim(),
            mats.len()
        )));
    }
    let action = mats
        .iter()
        .enumerate()
        .map(|(i, m)| matrix(a.field(), m, dim, dim, &actx.index(i)))
        .collect::<Result<Vec<_>>>()?;
    Module::new(a.clone(), action).map_err(|e| actx.wrap(e))
}

fn read_json(path: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| {
        Error::parse(
            path.display().to_string(),
            format!("(line {}, column {})", e.line(), e.column()),
            e.to_string(),
        )
    })
}

/// Reads files, resolving references and sharing one `Arc<Algebra>` per path.
#[derive(Default)]
pub struct Loader {
    algebras: Mutex<HashMap<String, Arc<Algebra>>>,
}

impl Loader {
    pub fn new() -> Self {
        Loader::default()
    }

    fn cached(&self, key: &str, make: impl FnOnce() -> Result<Arc<Algebra>>) -> Result<Arc<Algebra>> {
        if let Some(a) = self.algebras.lock().unwrap().get(key) {
            return Ok(a.clone());
        }
        let a = make()?;
        Ok(self
            .algebras
            .lock()
            .unwrap()
            .entry(key.to_string())
            .or_insert(a)
            .clone())
    }

    pub fn algebra(&self, path: &Path) -> Result<Arc<Algebra>> {
        let key = canonical(path);
        self.cached(&key, || {
            let v = read_json(path)?;
            let file = path.display().to_string();
            parse_algebra(&v, &Ctx::root(&file))
        })
    }

    /// An algebra from a file path or a `corpus:<name>` reference.
    pub fn algebra_spec(&self, spec: &str) -> Result<Arc<Algebra>> {
        match spec.strip_prefix("corpus:") {
            Some(name) => self.cached(spec, || {
                named_algebra(name).map_err(|e| Error::parse(spec, "(name)", e.to_string()))
            }),
            None => self.algebra(Path::new(spec)),
        }
    }

    fn algebra_ref(&self, v: &Value, base: &Path, ctx: &Ctx) -> Result<Arc<Algebra>> {
        match v {
            Value::String(s) => match s.strip_prefix("corpus:") {
                Some(name) => self.cached(s, || named_algebra(name).map_err(|e| ctx.wrap(e))),
                None => self.algebra(&base.join(s)).map_err(|e| match e {
                    Error::Io(m) => ctx.err(m),
                    other => other,
                }),
            },
            Value::Object(_) => parse_algebra(v, ctx),
            _ => Err(ctx.err("expected a path or an inline algebra")),
        }
    }

    fn module_ref(&self, a: &Arc<Algebra>, v: &Value, base: &Path, ctx: &Ctx) -> Result<Module> {
        match v {
            Value::String(s) => {
                let m = self.module(&base.join(s)).map_err(|e| match e {
                    Error::Io(m) => ctx.err(m),
                    other => other,
                })?;
                if !m.algebra().same_as(a) {
                    return Err(ctx.err("module lives over a different algebra"));
                }
                Ok(Module::new_trusted(a.clone(), m.actions().to_vec()))
            }
            Value::Object(_) => parse_module(a, v, ctx),
            _ => Err(ctx.err("expected a path or an inline module")),
        }
    }

    pub fn module(&self, path: &Path) -> Result<Module> {
        let (v, file, base) = open(path)?;
        let ctx = Ctx::root(&file);
        let a = self.algebra_ref(get(&v, "algebra", &ctx)?, &base, &ctx.key("algebra"))?;
        parse_module(&a, &v, &ctx)
    }

    pub fn extension(&self, path: &Path) -> Result<RingExtension> {
        let (v, file, base) = open(path)?;
        let ctx = Ctx::root(&file);
        let r = self.algebra_ref(get(&v, "base", &ctx)?, &base, &ctx.key("base"))?;
        let s = self.algebra_ref(get(&v, "total", &ctx)?, &base, &ctx.key("total"))?;
        let ectx = ctx.key("embedding");
        let e = matrix(r.field(), get(&v, "embedding", &ctx)?, s.dim(), r.dim(), &ectx)?;
        RingExtension::new(r, s, e).map_err(|e| ectx.wrap(e))
    }

    pub fn bimodule(&self, path: &Path) -> Result<Bimodule> {
        let (v, file, base) = open(path)?;
        let ctx = Ctx::root(&file);
        let l = self.algebra_ref(get(&v, "left", &ctx)?, &base, &ctx.key("left"))?;
        let r = self.algebra_ref(get(&v, "right", &ctx)?, &base, &ctx.key("right"))?;
        let dim = as_usize(get(&v, "dim", &ctx)?, &ctx.key("dim"))?;
        let actions = |key: &str, a: &Arc<Algebra>| -> Result<Vec<Mat>> {
            let c = ctx.key(key);
            let mats = as_array(get(&v, key, &ctx)?, &c)?;
            if mats.len() != a.dim() {
                return Err(c.err(format!("expected {} matrices, found {}", a.dim(), mats.len())));
            }
            mats.iter()
                .enumerate()
                .map(|(i, m)| matrix(a.field(), m, dim, dim, &c.index(i)))
                .collect()
        };
        let la = actions("leftAction", &l)?;
        let ra = actions("rightAction", &r)?;
        Bimodule::new(l, r, la, ra).map_err(|e| ctx.wrap(e))
    }

    fn components(&self, v: &Value, a: &Arc<Algebra>, base: &Path, ctx: &Ctx) -> Result<(i64, Vec<Module>)> {
        let sctx = ctx.key("support");
        let support = as_array(get(v, "support", ctx)?, &sctx)?;
        if support.len() != 2 {
            return Err(sctx.err("support is [lo, hi]"));
        }
        let lo = as_i64(&support[0], &sctx.index(0))?;
        let hi = as_i64(&support[1], &sctx.index(1))?;
        let cctx = ctx.key("components");
        let items = as_array(get(v, "components", ctx)?, &cctx)?;
        let expected = (hi - lo + 1).max(0) as usize;
        if items.len() != expected {
            return Err(cctx.err(format!(
                "support [{lo}, {hi}] needs {expected} components, found {}",
                items.len()
            )));
        }
        let comps = items
            .iter()
            .enumerate()
            .map(|(i, m)| self.module_ref(a, m, base, &cctx.index(i)))
            .collect::<Result<Vec<_>>>()?;
        Ok((lo, comps))
    }

    pub fn complex(&self, path: &Path) -> Result<Complex> {
        let (v, file, base) = open(path)?;
        let ctx = Ctx::root(&file);
        let a = self.algebra_ref(get(&v, "algebra", &ctx)?, &base, &ctx.key("algebra"))?;
        let (lo, comps) = self.components(&v, &a, &base, &ctx)?;
        let dctx = ctx.key("differentials");
        let items = as_array(get(&v, "differentials", &ctx)?, &dctx)?;
        if items.len() != comps.len().saturating_sub(1) {
            return Err(dctx.err(format!("expected {} differentials", comps.len().saturating_sub(1))));
        }
        let diffs = items
            .iter()
            .enumerate()
            .map(|(k, d)| matrix(a.field(), d, comps[k + 1].dim(), comps[k].dim(), &dctx.index(k)))
            .collect::<Result<Vec<_>>>()?;
        Complex::new(&a, lo, comps, diffs).map_err(|e| dctx.wrap(e))
    }

    pub fn graded(&self, path: &Path) -> Result<GradedModule> {
        let (v, file, base) = open(path)?;
        let ctx = Ctx::root(&file);
        let a = self.algebra_ref(get(&v, "algebra", &ctx)?, &base, &ctx.key("algebra"))?;
        let (lo, comps) = self.components(&v, &a, &base, &ctx)?;
        GradedModule::new(&a, lo, comps).map_err(|e| ctx.wrap(e))
    }
}

fn canonical(path: &Path) -> String {
    std::fs::canonicalize(path)
        .unwrap_or_else(|_| path.to_path_buf())
        .display()
        .to_string()
}

fn open(path: &Path) -> Result<(Value, String, PathBuf)> {
    let v = read_json(path)?;
    let base = path.parent().map(Path::to_path_buf).unwrap_or_default();
    Ok((v, path.display().to_string(), base))
}

pub fn algebra_json(a: &Algebra) -> Value {
    let n = a.dim();
    let table: Vec<Vec<Value>> = (0..n)
        .map(|i| (0..n).map(|j| vector_json(&a.product_of_basis(i, j))).collect())
        .collect();
    let mut obj = Map::new();
    obj.insert("field".into(), field_json(a.field()));
    obj.insert("basis".into(), json!(a.labels()));
    obj.insert("table".into(), json!(table));
    obj.insert("unit".into(), vector_json(a.unit()));
    if let Some(ids) = a.idempotents() {
        obj.insert(
            "idempotents".into(),
            json!(ids.iter().map(vector_json).collect::<Vec<_>>()),
        );
    }
    if !a.block_idempotents().is_empty() {
        obj.insert(
            "blocks".into(),
            json!(a.block_idempotents().iter().map(vector_json).collect::<Vec<_>>()),
        );
    }
    obj.insert(
        "provenance".into(),
        serde_json::to_value(a.provenance()).expect("provenance serializes"),
    );
    Value::Object(obj)
}

/// Module body without the algebra reference.
fn module_body(m: &Module) -> Map<String, Value> {
    let mut obj = Map::new();
    obj.insert("dim".into(), json!(m.dim()));
    obj.insert(
        "action".into(),
        json!(m.actions().iter().map(matrix_json).collect::<Vec<_>>()),
    );
    obj
}

pub fn module_json(m: &Module, algebra_ref: &str) -> Value {
    let mut obj = Map::new();
    obj.insert("algebra".into(), json!(algebra_ref));
    obj.extend(module_body(m));
    Value::Object(obj)
}

pub fn extension_json(e: &RingExtension, base_ref: &str, total_ref: &str) -> Value {
    json!({ "base": base_ref, "total": total_ref, "embedding": matrix_json(e.embedding()) })
}

pub fn bimodule_json(b: &Bimodule, left_ref: &str, right_ref: &str) -> Value {
    json!({
        "left": left_ref,
        "right": right_ref,
        "dim": b.dim(),
        "leftAction": b.left_action().iter().map(matrix_json).collect::<Vec<_>>(),
        "rightAction": b.right_action().iter().map(matrix_json).collect::<Vec<_>>(),
    })
}

pub fn complex_json(c: &Complex, algebra_ref: &str) -> Value {
    let (lo, hi) = c.support();
    json!({
        "algebra": algebra_ref,
        "support": [lo, hi],
        "components": c.components().iter().map(|m| Value::Object(module_body(m))).collect::<Vec<_>>(),
        "differentials": c.differentials().iter().map(matrix_json).collect::<Vec<_>>(),
    })
}

pub fn graded_json(g: &GradedModule, algebra_ref: &str) -> Value {
    let (lo, hi) = g.support();
    json!({
        "algebra": algebra_ref,
        "support": [lo, hi],
        "components": g.components().iter().map(|m| Value::Object(module_body(m))).collect::<Vec<_>>(),
    })
}

/// Indented JSON with flat arrays kept on one line, plus a trailing newline.
pub fn to_file_text(v: &Value) -> String {
    let mut s = String::new();
    write_value(v, 0, &mut s);
    s.push('\n');
    s
}

fn write_value(v: &Value, depth: usize, out: &mut String) {
    let pad = |d: usize| "  ".repeat(d);
    match v {
        Value::Array(items) if items.iter().any(|x| x.is_array() || x.is_object()) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                write_value(x, depth + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push(']');
        }
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_value(x, depth + 1, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push('}');
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        other => out.push_str(&other.to_string()),
    }
}

#[cfg(test)]
mod tests;

/// File name of each bundled algebra under `corpus/`.
pub const CORPUS_ALGEBRA_FILES: &[(&str, &str)] = &[
    ("F2", "f2.alg"),
    ("F3", "f3.alg"),
    ("F7", "f7.alg"),
    ("Q", "q.alg"),
    ("F2[x]/x^2", "f2_trunc2.alg"),
    ("F2[x]/x^3", "f2_trunc3.alg"),
    ("F2[C2]", "f2_c2.alg"),
    ("F3[C3]", "f3_c3.alg"),
    ("F7[S3]", "f7_s3.alg"),
    ("A2", "a2.alg"),
    ("A3", "a3.alg"),
    ("nakayama", "nakayama.alg"),
    ("A2[x]/x^2", "a2_trunc2.alg"),
    ("M2(F2[x]/x^2)", "m2_f2_trunc2.alg"),
    ("F2xA2", "f2_x_a2.alg"),
];

pub const CORPUS_EXTENSION_FILES: &[(&str, &str)] = &[
    ("identity-A2", "identity_a2.ext"),
    ("F2-F2[x]/x^2", "f2_trunc2.ext"),
    ("F2-F2[x]/x^3", "f2_trunc3.ext"),
    ("F2-F2[C2]", "f2_c2.ext"),
    ("F3-F3[C3]", "f3_c3.ext"),
    ("A2-A2[x]/x^2", "a2_trunc.ext"),
    ("F2-A2", "f2_a2.ext"),
];

fn algebra_file(name: &str) -> &'static str {
    CORPUS_ALGEBRA_FILES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, f)| *f)
        .expect("every corpus algebra has a file")
}

fn algebra_file_of(a: &Arc<Algebra>) -> &'static str {
    CORPUS_ALGEBRA_FILES
        .iter()
        .find(|(n, _)| named_algebra(n).map(|b| b.same_as(a)).unwrap_or(false))
        .map(|(_, f)| *f)
        .expect("algebra belongs to the corpus")
}

/// The simple of `A2` that is not projective, and its projective cover.
pub fn a2_simple_and_cover() -> Result<(Module, Module)> {
    let a = named_algebra("A2")?;
    let s = crate::modrep::structural_modules(&a)?;
    let c = s
        .classes
        .iter()
        .find(|c| c.simple.dim() != c.projective.dim())
        .expect("A2 has a non-projective simple");
    Ok((c.simple.clone(), c.projective.clone()))
}

/// Contents of every file in `corpus/`, as `(file name, text)`.
pub fn corpus_files() -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    let mut put = |name: &str, v: Value| out.push((name.to_string(), to_file_text(&v)));
    for (name, file) in CORPUS_ALGEBRA_FILES {
        let a = named_algebra(name)?;
        put(file, algebra_json(&a));
    }
    for (name, file) in CORPUS_EXTENSION_FILES {
        let e = crate::corpus::named_extension(name)?;
        put(
            file,
            extension_json(&e.extension()?, algebra_file_of(&e.base), algebra_file_of(&e.total)),
        );
    }
    let (s1, p1) = a2_simple_and_cover()?;
    put("a2_s1.mod", module_json(&s1, "a2.alg"));
    put("a2_p1.mod", module_json(&p1, "a2.alg"));
    let c2 = named_algebra("F2[C2]")?;
    put(
        "f2_c2_trivial.mod",
        module_json(&crate::modrep::structural_modules(&c2)?.classes[0].simple, "f2_c2.alg"),
    );
    put(
        "a2.quiver",
        json!({ "field": { "char": 2 }, "vertices": 2, "arrows": [[1, 2, "a"]], "relations": [] }),
    );
    put(
        "nakayama.quiver",
        json!({
            "field": { "char": 2 },
            "vertices": 2,
            "arrows": [[1, 2, "a"], [2, 1, "b"]],
            "relations": [["a", "b"], ["b", "a"]],
        }),
    );
    let morita = crate::corpus::morita_pair()?;
    put(
        "morita_column.bimod",
        bimodule_json(
            &morita.bimodule,
            algebra_file("M2(F2[x]/x^2)"),
            algebra_file("F2[x]/x^2"),
        ),
    );
    let mut stalk = complex_json(&Complex::stalk(&s1, 0), "a2.alg");
    stalk["components"] = json!(["a2_s1.mod"]);
    put("a2_stalk_s1.cpx", stalk);
    let k = named_algebra("F2")?;
    let m = Module::regular(&k);
    let cone = Complex::new(&k, 0, vec![m.clone(), m], vec![Mat::identity(k.field(), 1)])?;
    put("k_cone.cpx", complex_json(&cone, "f2.alg"));
    let a2 = named_algebra("A2")?;
    put(
        "a2_graded.gr",
        graded_json(&crate::corpus::standard_graded(&a2)?[0], "a2.alg"),
    );
    Ok(out)
}
