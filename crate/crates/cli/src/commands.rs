use std::path::{Path, PathBuf};
use std::sync::Arc;

use frobgp_core::corpus::standard_modules;
use frobgp_core::dgcplx::{check_frobenius_pair_fu, componentwise_gp_check, functor_f, is_contractible, GradedModule};
use frobgp_core::frobenius::{
    counterexample_product, global_gdim_transfer, is_frobenius_bimodule, is_frobenius_extension,
    is_projective_certified, tri_equiv_conditions, verify_gpd_transfer, AdjointPair, FrobeniusVerdict, IndRes,
    TensorHom,
};
use frobgp_core::homology::{gid, gorenstein_profile, gpd, pd, resolve_projective, totalize_quasi_bicomplex, Complex};
use frobgp_core::io::Loader;
use frobgp_core::modrep::structural_modules;
use frobgp_core::suite::run_suite;
use frobgp_core::{Algebra, Error, Module, Result};

use crate::report::Report;

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "none".into(), |n| n.to_string())
}

fn flag(b: bool) -> String {
    if b { "yes" } else { "no" }.into()
}

fn joined(xs: impl IntoIterator<Item = usize>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn extension_of(path: &Path) -> &str {
    path.extension().and_then(|e| e.to_str()).unwrap_or("")
}

pub fn algebra_info(loader: &Loader, spec: &str) -> Result<Report> {
    let a = loader.algebra_spec(spec)?;
    let s = structural_modules(&a)?;
    let mut r = Report::new(
        "algebra-info",
        &[
            "field",
            "dim",
            "simples",
            "projectiveDims",
            "injectiveDims",
            "simpleDims",
            "constructor",
        ],
    );
    r.row(vec![
        a.field().to_string(),
        a.dim().to_string(),
        s.class_count().to_string(),
        joined(s.classes.iter().map(|c| c.projective.dim())),
        joined(s.classes.iter().map(|c| c.injective.dim())),
        joined(s.classes.iter().map(|c| c.simple.dim())),
        a.provenance().constructor.clone(),
    ]);
    Ok(r)
}

pub fn module_info(loader: &Loader, path: &Path) -> Result<Report> {
    let m = loader.module(path)?;
    let mut r = Report::new(
        "module-info",
        &[
            "dim",
            "algebraDim",
            "top",
            "socle",
            "radicalLayers",
            "projective",
            "injective",
        ],
    );
    r.row(vec![
        m.dim().to_string(),
        m.algebra().dim().to_string(),
        m.top().0.dim().to_string(),
        m.socle().0.dim().to_string(),
        joined(m.radical_series_dims()),
        flag(is_projective_certified(&m)?),
        flag(is_projective_certified(&m.dual())?),
    ]);
    Ok(r)
}

pub fn profile(loader: &Loader, spec: &str, bound: usize) -> Result<Report> {
    let a = loader.algebra_spec(spec)?;
    let p = gorenstein_profile(&a, bound)?;
    let mut r = Report::new("profile", &["spdi", "sidp", "gorensteinDim"]);
    r.row(vec![p.spdi.to_string(), p.sidp.to_string(), opt(p.gorenstein_dim())]);
    Ok(r)
}

pub fn gorenstein_dim(loader: &Loader, path: &Path, bound: usize, injective: bool) -> Result<Report> {
    let m = loader.module(path)?;
    let p = gorenstein_profile(m.algebra(), bound)?;
    if p.gorenstein_dim().is_none() {
        return Err(Error::ProfileNotCertified(format!(
            "spdi = {}, sidp = {}",
            p.spdi, p.sidp
        )));
    }
    let r = if injective {
        let mut r = Report::new("gid", &["gid", "id"]);
        r.row(vec![
            opt(gid(&m, &p)?),
            frobgp_core::homology::id(&m, bound)?.to_string(),
        ]);
        r
    } else {
        let mut r = Report::new("gpd", &["gpd", "pd"]);
        r.row(vec![opt(gpd(&m, &p)?), pd(&m, bound)?.to_string()]);
        r
    };
    Ok(r)
}

pub fn resolve(loader: &Loader, path: &Path, bound: usize) -> Result<Report> {
    let m = loader.module(path)?;
    let res = resolve_projective(&m, bound)?;
    let mut r = Report::new("resolve", &["degree", "dim", "summands"]);
    let mut k = 0;
    while let Some(t) = res.term(k) {
        let summands: Vec<String> = t.classes().iter().map(|c| format!("P{}", c + 1)).collect();
        r.row(vec![
            k.to_string(),
            t.module.dim().to_string(),
            if summands.is_empty() {
                "0".into()
            } else {
                summands.join("+")
            },
        ]);
        k += 1;
    }
    Ok(r)
}

pub fn totalize(loader: &Loader, path: &Path, bound: usize) -> Result<Report> {
    let m = loader.module(path)?;
    let p = gorenstein_profile(m.algebra(), bound)?;
    let t = totalize_quasi_bicomplex(&m, &p)?;
    let mut r = Report::new(
        "totalize",
        &[
            "depth",
            "columns",
            "identities",
            "dimZ0",
            "dimB0",
            "pdB0",
            "derivedBound",
            "gpd",
        ],
    );
    r.row(vec![
        t.quasi_bicomplex.depth.to_string(),
        t.quasi_bicomplex.columns.to_string(),
        t.identities_checked.to_string(),
        t.z0.dim().to_string(),
        t.b0.dim().to_string(),
        t.pd_b0.to_string(),
        t.derived_bound.to_string(),
        t.gpd.to_string(),
    ]);
    Ok(r)
}

pub fn frobenius_verify(loader: &Loader, path: &Path, seed: u64) -> Result<Report> {
    let v = match extension_of(path) {
        "ext" => is_frobenius_extension(&loader.extension(path)?, seed)?,
        "bimod" => is_frobenius_bimodule(&loader.bimodule(path)?, seed)?,
        other => return Err(unsupported(path, other, ".ext or .bimod")),
    };
    let mut r = Report::new("frobenius-verify", &["verdict", "detail"]);
    let detail = match &v {
        FrobeniusVerdict::Yes { witness } => format!("witness of dimension {}", witness.source().dim()),
        FrobeniusVerdict::No { reason } | FrobeniusVerdict::Inconclusive { reason } => reason.clone(),
    };
    r.row(vec![v.label().into(), detail]);
    if let FrobeniusVerdict::Inconclusive { reason } = &v {
        r.fail("frobenius-verdict-conclusive", reason);
    }
    Ok(r)
}

pub fn transfer_check(loader: &Loader, path: &Path, bound: usize, seed: u64) -> Result<Report> {
    let e = loader.extension(path)?;
    let rows = verify_gpd_transfer(
        &e,
        &standard_modules(e.total())?,
        &standard_modules(e.base())?,
        bound,
        seed,
    )?;
    let mut r = Report::new("transfer-check", &["module", "side", "gpdModule", "gpdImage", "agrees"]);
    for row in rows {
        r.row(vec![
            row.module.clone(),
            row.side.into(),
            opt(row.gpd_module),
            opt(row.gpd_image),
            flag(row.agrees()),
        ]);
    }
    Ok(r)
}

pub fn glgdim_check(loader: &Loader, path: &Path, bound: usize, seed: u64) -> Result<Report> {
    let e = loader.extension(path)?;
    let t = global_gdim_transfer(&e, bound, seed)?;
    let mut r = Report::new("glgdim-check", &["base", "total", "equal"]);
    r.row(vec![opt(t.base), opt(t.total), flag(t.equal())]);
    Ok(r)
}

pub fn counterexample(loader: &Loader, b: &str, b_prime: &str, module: &Path, bound: usize) -> Result<Report> {
    let b = loader.algebra_spec(b)?;
    let bp = loader.algebra_spec(b_prime)?;
    let m = loader.module(module)?;
    let c = counterexample_product(&b, &bp, &m, bound)?;
    let mut r = Report::new(
        "counterexample-product",
        &[
            "productDim",
            "moduleDim",
            "projectedDim",
            "projectedGp",
            "moduleGp",
            "adjunctions",
            "unitMono",
        ],
    );
    r.row(vec![
        c.product_dim.to_string(),
        c.module_dim.to_string(),
        c.projected_dim.to_string(),
        flag(c.projected_is_gp),
        flag(c.module_is_gp),
        flag(c.adjunctions_verified),
        flag(c.unit_mono_on_module),
    ]);
    if !c.certifies_failure() {
        r.fail(
            "faithfulness-needed-to-reflect-gorenstein-projectives",
            "the product does not exhibit a non-reflected module",
        );
    }
    Ok(r)
}

pub fn triequiv_check(loader: &Loader, path: &Path, bound: usize) -> Result<Report> {
    let pair: Box<dyn AdjointPair> = match extension_of(path) {
        "ext" => Box::new(IndRes {
            ext: loader.extension(path)?,
        }),
        "bimod" => Box::new(TensorHom::new(loader.bimodule(path)?, "bimodule")),
        other => return Err(unsupported(path, other, ".ext or .bimod")),
    };
    let t = tri_equiv_conditions(
        pair.as_ref(),
        &standard_modules(pair.source())?,
        &standard_modules(pair.target())?,
        bound,
    )?;
    let mut r = Report::new(
        "triequiv-check",
        &["side", "module", "gp", "defectDim", "defectPd", "defectGpd"],
    );
    for row in &t.rows {
        r.row(vec![
            row.side.into(),
            row.module.clone(),
            flag(row.is_gp),
            row.defect_dim.to_string(),
            row.defect_pd.to_string(),
            opt(row.defect_gpd),
        ]);
    }
    let conditions = [
        ("stable-gorenstein-projective-condition", t.stable_gp_condition),
        ("singularity-category-condition", t.singularity_condition),
        ("defect-condition", t.defect_condition),
        ("unit-and-counit-defects-projective", t.defects_projective),
    ];
    for (name, ok) in conditions {
        if !ok {
            r.fail(name, "fails on the module corpus");
        }
    }
    let differing: Vec<_> = t.stable_hom.iter().filter(|s| s.2 != s.3).collect();
    if let Some((x, y, before, after)) = differing.first() {
        r.fail(
            "stable-hom-preserved",
            format!(
                "{} of {} pairs differ, first ({x}, {y}): {before} before, {after} after",
                differing.len(),
                t.stable_hom.len()
            ),
        );
    }
    Ok(r)
}

enum Item {
    Complex(Complex),
    Graded(GradedModule),
}

impl Item {
    fn algebra(&self) -> &Arc<Algebra> {
        match self {
            Item::Complex(c) => c.algebra(),
            Item::Graded(g) => g.algebra(),
        }
    }
}

pub fn complex_check(loader: &Loader, paths: &[PathBuf], bound: usize) -> Result<Report> {
    let mut items = Vec::new();
    for p in paths {
        let item = match extension_of(p) {
            "cpx" => Item::Complex(loader.complex(p)?),
            "gr" => Item::Graded(loader.graded(p)?),
            other => return Err(unsupported(p, other, ".cpx or .gr")),
        };
        items.push((p.display().to_string(), item));
    }
    let mut r = Report::new("complex-check", &["file", "support", "contractible", "componentwiseGp"]);
    // Group by algebra, keeping first-appearance order.
    let mut groups: Vec<(Arc<Algebra>, Vec<usize>)> = Vec::new();
    for (i, (_, item)) in items.iter().enumerate() {
        match groups.iter_mut().find(|g| g.0.same_as(item.algebra())) {
            Some(g) => g.1.push(i),
            None => groups.push((item.algebra().clone(), vec![i])),
        }
    }
    let mut rows = vec![Vec::new(); items.len()];
    for (a, idx) in &groups {
        let profile = gorenstein_profile(a, bound)?;
        let mut graded = Vec::new();
        let mut complexes = Vec::new();
        for &i in idx {
            let (name, item) = &items[i];
            match item {
                Item::Complex(c) => {
                    let (lo, hi) = c.support();
                    let gp = match componentwise_gp_check(c, &profile) {
                        Ok(v) => flag(v.all_gp()),
                        Err(Error::PreconditionFailed(_)) => "uncertified".into(),
                        Err(e) => return Err(e),
                    };
                    let contractible = is_contractible(c)?.is_yes();
                    rows[i] = vec![name.clone(), format!("[{lo},{hi}]"), flag(contractible), gp];
                    complexes.push(rebased(c, a)?);
                }
                Item::Graded(g) => {
                    let (lo, hi) = g.support();
                    let contractible = is_contractible(&functor_f(g))?.is_yes();
                    if !contractible {
                        r.fail("free-functor-contractible", format!("F({name}) is not contractible"));
                    }
                    rows[i] = vec![name.clone(), format!("[{lo},{hi}]"), "-".into(), "-".into()];
                    graded.push(GradedModule::new(a, lo, rebased_modules(g.components(), a)?)?);
                }
            }
        }
        let fu = check_frobenius_pair_fu(&graded, &complexes)?;
        if !fu.all_pass() {
            r.fail("frobenius-pair-on-complexes", format!("{fu:?}"));
        }
    }
    for row in rows {
        r.row(row);
    }
    Ok(r)
}

/// The same complex over the representative algebra of its group.
fn rebased(c: &Complex, a: &Arc<Algebra>) -> Result<Complex> {
    Complex::new(
        a,
        c.support().0,
        rebased_modules(c.components(), a)?,
        c.differentials().to_vec(),
    )
}

fn rebased_modules(ms: &[Module], a: &Arc<Algebra>) -> Result<Vec<Module>> {
    ms.iter()
        .map(|m| Module::new(a.clone(), m.actions().to_vec()))
        .collect()
}

pub fn suite(bound: usize, seed: u64) -> Report {
    let mut r = Report::new("suite", &["criterion", "name", "result", "checks"]);
    for o in run_suite(bound, seed) {
        r.row(vec![
            o.id.to_string(),
            o.name.into(),
            if o.passed { "PASS" } else { "FAIL" }.into(),
            o.checks.to_string(),
        ]);
        for f in &o.failures {
            r.failures.push(format!("criterion {}: {f}", o.id));
        }
    }
    r
}

fn unsupported(path: &Path, ext: &str, expected: &str) -> Error {
    Error::parse(
        path.display().to_string(),
        "(file extension)",
        format!("expected {expected}, found `.{ext}`"),
    )
}
