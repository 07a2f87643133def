//! Reports comparing the two sides of an adjunction.

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{product, Algebra};
use crate::error::{Error, Result};
use crate::exactlin::Mat;
use crate::homology::{gorenstein_profile, gpd, is_gorenstein_projective, pd, Dim, GorensteinProfile, GpVerdict};
use crate::modrep::{hom_factorization, stable_hom_dim, structural_modules, Module};

use super::functors::{check_triangles, restrict, AdjointPair, IndRes, TensorHom};
use super::verify::{is_frobenius_extension, is_summand};
use super::{Bimodule, RingExtension};

#[derive(Clone, Debug, Serialize)]
pub struct FaithfulnessReport {
    pub pair: String,
    pub unit_mono: Vec<(String, bool)>,
    pub counit_epic: Vec<(String, bool)>,
    /// Source object, target object, both triangle identities.
    pub triangles: Vec<(String, String, bool)>,
    /// The unit is mono on an injective cogenerator, hence everywhere.
    pub unit_mono_everywhere: bool,
    /// The counit is epic on the regular module, hence everywhere.
    pub counit_epic_everywhere: bool,
    /// Every indecomposable projective of the source is a summand of `G` of the regular module.
    pub source_projectives_generated: bool,
    /// Every indecomposable projective of the target is a summand of `F` of the regular module.
    pub target_projectives_generated: bool,
}

impl FaithfulnessReport {
    pub fn triangles_hold(&self) -> bool {
        self.triangles.iter().all(|t| t.2)
    }

    /// Unit mono exactly when the source projectives are generated, and dually.
    pub fn equivalences_agree(&self) -> bool {
        self.unit_mono_everywhere == self.source_projectives_generated
            && self.counit_epic_everywhere == self.target_projectives_generated
            && (!self.unit_mono_everywhere || self.unit_mono.iter().all(|u| u.1))
            && (!self.counit_epic_everywhere || self.counit_epic.iter().all(|c| c.1))
    }

    pub fn all_pass(&self) -> bool {
        self.triangles_hold() && self.unit_mono_everywhere && self.counit_epic_everywhere && self.equivalences_agree()
    }
}

fn injective_cogenerator(a: &Arc<Algebra>) -> Module {
    Module::regular(&a.opposite()).dual()
}

fn all_projectives_summands(a: &Arc<Algebra>, m: &Module) -> Result<bool> {
    for c in &structural_modules(a)?.classes {
        if !is_summand(&c.projective, m)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn faithfulness_report(
    pair: &dyn AdjointPair,
    corpus_a: &[(String, Module)],
    corpus_b: &[(String, Module)],
) -> Result<FaithfulnessReport> {
    let (a, b) = (pair.source(), pair.target());
    let unit_mono = corpus_a
        .iter()
        .map(|(n, x)| Ok((n.clone(), pair.unit(x)?.is_injective())))
        .collect::<Result<Vec<_>>>()?;
    let counit_epic = corpus_b
        .iter()
        .map(|(n, y)| Ok((n.clone(), pair.counit(y)?.is_surjective())))
        .collect::<Result<Vec<_>>>()?;
    let mut triangles = Vec::new();
    let count = corpus_a.len().max(corpus_b.len());
    if !corpus_a.is_empty() && !corpus_b.is_empty() {
        for i in 0..count {
            let (nx, x) = &corpus_a[i % corpus_a.len()];
            let (ny, y) = &corpus_b[i % corpus_b.len()];
            triangles.push((nx.clone(), ny.clone(), check_triangles(pair, x, y)?.holds()));
        }
    }
    let unit_mono_everywhere = pair.unit(&injective_cogenerator(a))?.is_injective();
    let counit_epic_everywhere = pair.counit(&Module::regular(b))?.is_surjective();
    let source_projectives_generated = all_projectives_summands(a, &pair.right(&Module::regular(b))?)?;
    let target_projectives_generated = all_projectives_summands(b, &pair.left(&Module::regular(a))?)?;
    Ok(FaithfulnessReport {
        pair: pair.name(),
        unit_mono,
        counit_epic,
        triangles,
        unit_mono_everywhere,
        counit_epic_everywhere,
        source_projectives_generated,
        target_projectives_generated,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct TransferRow {
    pub module: String,
    /// Which algebra the module lives over: "total" or "base".
    pub side: &'static str,
    pub gpd_module: Option<usize>,
    pub gpd_image: Option<usize>,
}

impl TransferRow {
    pub fn agrees(&self) -> bool {
        self.gpd_module == self.gpd_image
    }
}

fn frobenius_precondition(ext: &RingExtension, seed: u64) -> Result<()> {
    let v = is_frobenius_extension(ext, seed)?;
    if !v.is_yes() {
        return Err(Error::PreconditionFailed(format!(
            "the extension is not certified Frobenius (verdict {})",
            v.label()
        )));
    }
    Ok(())
}

fn certified_profile(a: &Arc<Algebra>, bound: usize, which: &str) -> Result<GorensteinProfile> {
    let p = gorenstein_profile(a, bound)?;
    if p.gorenstein_dim().is_none() {
        return Err(Error::PreconditionFailed(format!(
            "the {which} algebra is not certified Gorenstein within {bound}"
        )));
    }
    Ok(p)
}

/// Gpd over the total algebra against Gpd of the restriction, and, when induction is
/// faithful, Gpd over the base against Gpd of the induced module.
pub fn verify_gpd_transfer(
    ext: &RingExtension,
    corpus_total: &[(String, Module)],
    corpus_base: &[(String, Module)],
    bound: usize,
    seed: u64,
) -> Result<Vec<TransferRow>> {
    frobenius_precondition(ext, seed)?;
    let pr = certified_profile(ext.base(), bound, "base")?;
    let ps = certified_profile(ext.total(), bound, "total")?;
    let pair = IndRes { ext: ext.clone() };
    let mut rows = Vec::new();
    for (name, m) in corpus_total {
        rows.push(TransferRow {
            module: name.clone(),
            side: "total",
            gpd_module: gpd(m, &ps)?,
            gpd_image: gpd(&restrict(ext, m)?, &pr)?,
        });
    }
    if pair.unit(&injective_cogenerator(ext.base()))?.is_injective() {
        for (name, x) in corpus_base {
            rows.push(TransferRow {
                module: name.clone(),
                side: "base",
                gpd_module: gpd(x, &pr)?,
                gpd_image: gpd(&pair.left(x)?, &ps)?,
            });
        }
    }
    if let Some(bad) = rows.iter().find(|r| !r.agrees()) {
        return Err(Error::violation(
            "gpd-preserved-by-faithful-frobenius-functor",
            format!(
                "{} ({}): {:?} vs {:?}",
                bad.module, bad.side, bad.gpd_module, bad.gpd_image
            ),
        ));
    }
    Ok(rows)
}

#[derive(Clone, Debug, Serialize)]
pub struct GdimTransfer {
    pub base: Option<usize>,
    pub total: Option<usize>,
}

impl GdimTransfer {
    pub fn equal(&self) -> bool {
        self.base == self.total
    }
}

pub fn global_gdim_transfer(ext: &RingExtension, bound: usize, seed: u64) -> Result<GdimTransfer> {
    frobenius_precondition(ext, seed)?;
    let pair = IndRes { ext: ext.clone() };
    if !pair.unit(&injective_cogenerator(ext.base()))?.is_injective() {
        return Err(Error::PreconditionFailed("induction is not faithful".into()));
    }
    if !pair.counit(&Module::regular(ext.total()))?.is_surjective() {
        return Err(Error::PreconditionFailed("restriction is not faithful".into()));
    }
    let t = GdimTransfer {
        base: gorenstein_profile(ext.base(), bound)?.gorenstein_dim(),
        total: gorenstein_profile(ext.total(), bound)?.gorenstein_dim(),
    };
    if !t.equal() {
        return Err(Error::violation(
            "global-gorenstein-dimension-preserved",
            format!("{:?} vs {:?}", t.base, t.total),
        ));
    }
    Ok(t)
}

#[derive(Clone, Debug, Serialize)]
pub struct CounterexampleReport {
    pub product_dim: usize,
    pub module_dim: usize,
    pub projected_dim: usize,
    pub projected_is_gp: bool,
    pub module_is_gp: bool,
    pub adjunctions_verified: bool,
    pub unit_mono_on_module: bool,
    pub source_projectives_generated: bool,
}

impl CounterexampleReport {
    /// The projection sends a non-GP module to a GP one while failing faithfulness.
    pub fn certifies_failure(&self) -> bool {
        self.projected_is_gp
            && !self.module_is_gp
            && self.adjunctions_verified
            && !self.unit_mono_on_module
            && !self.source_projectives_generated
    }
}

/// `e P` and `P e` for `P = b x b'` and `e = (1, 0)`, as bimodules realizing the projection
/// and the inclusion.
fn product_bimodules(b: &Arc<Algebra>, p: &Arc<Algebra>) -> Result<(Bimodule, Bimodule)> {
    let field = b.field();
    let db = b.dim();
    let zero = Mat::zeros(field, db, db);
    let first_only = |m: &dyn Fn(usize) -> Mat| -> Vec<Mat> {
        (0..p.dim()).map(|i| if i < db { m(i) } else { zero.clone() }).collect()
    };
    let pr_right = first_only(&|i| b.right_mult(&b.basis_vector(i)));
    let pr = Bimodule::new(b.clone(), p.clone(), b.left_all().to_vec(), pr_right)?;
    let inc_left = first_only(&|i| b.left(i).clone());
    let inc_right = (0..db).map(|i| b.right_mult(&b.basis_vector(i))).collect();
    let inc = Bimodule::new(p.clone(), b.clone(), inc_left, inc_right)?;
    Ok((pr, inc))
}

/// The product `b x b'` with the projection onto `b` and the inclusion of `b`, each
/// paired with its adjoint on the other side.
pub fn projection_inclusion(b: &Arc<Algebra>, b_prime: &Arc<Algebra>) -> Result<(Arc<Algebra>, TensorHom, TensorHom)> {
    let p = product(b, b_prime)?;
    let (pr, inc) = product_bimodules(b, &p)?;
    Ok((
        p,
        TensorHom::new(pr, "projection-inclusion"),
        TensorHom::new(inc, "inclusion-projection"),
    ))
}

pub fn counterexample_product(
    b: &Arc<Algebra>,
    b_prime: &Arc<Algebra>,
    bad: &Module,
    bound: usize,
) -> Result<CounterexampleReport> {
    if !bad.algebra().same_as(b_prime) && !bad.algebra().structurally_equal(b_prime) {
        return Err(Error::AlgebraMismatch);
    }
    let profile_bp = gorenstein_profile(b_prime, bound)?;
    if is_gorenstein_projective(bad, &profile_bp)?.is_yes() {
        return Err(Error::PreconditionFailed(
            "the chosen module is Gorenstein projective over the second factor".into(),
        ));
    }
    let (p, projection, inclusion) = projection_inclusion(b, b_prime)?;
    let profile_p = gorenstein_profile(&p, bound)?;
    let profile_b = gorenstein_profile(b, bound)?;

    let field = b.field();
    let db = b.dim();
    let action = (0..p.dim())
        .map(|i| {
            if i < db {
                Mat::zeros(field, bad.dim(), bad.dim())
            } else {
                bad.action(i - db).clone()
            }
        })
        .collect();
    let x = Module::new(p.clone(), action)?;
    let projected = projection.left(&x)?;

    let reg_b = Module::regular(b);
    let reg_p = Module::regular(&p);
    let adjunctions_verified = check_triangles(&projection, &x, &reg_b)?.holds()
        && check_triangles(&projection, &reg_p, &reg_b)?.holds()
        && check_triangles(&inclusion, &reg_b, &x)?.holds()
        && check_triangles(&inclusion, &reg_b, &reg_p)?.holds();
    let source_projectives_generated = all_projectives_summands(&p, &projection.right(&reg_b)?)?;
    Ok(CounterexampleReport {
        product_dim: p.dim(),
        module_dim: x.dim(),
        projected_dim: projected.dim(),
        projected_is_gp: is_gorenstein_projective(&projected, &profile_b)?.is_yes(),
        module_is_gp: matches!(is_gorenstein_projective(&x, &profile_p)?, GpVerdict::Yes),
        adjunctions_verified,
        unit_mono_on_module: projection.unit(&x)?.is_injective(),
        source_projectives_generated,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct TriEquivRow {
    /// "source" for `Cok(eta_X)`, "target" for `Ker(eps_Y)`.
    pub side: &'static str,
    pub module: String,
    pub is_gp: bool,
    pub defect_dim: usize,
    pub defect_pd: Dim,
    pub defect_gpd: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TriEquivReport {
    pub pair: String,
    pub rows: Vec<TriEquivRow>,
    pub stable_gp_condition: bool,
    pub singularity_condition: bool,
    pub defect_condition: bool,
    pub defects_projective: bool,
    /// (X, X', dim on the original side, dim after applying the functor).
    pub stable_hom: Vec<(String, String, usize, usize)>,
}

impl TriEquivReport {
    pub fn stable_hom_preserved(&self) -> bool {
        self.stable_hom.iter().all(|s| s.2 == s.3)
    }

    pub fn all_pass(&self) -> bool {
        self.stable_gp_condition
            && self.singularity_condition
            && self.defect_condition
            && self.defects_projective
            && self.stable_hom_preserved()
    }
}

/// Defects of the unit and counit, the conditions built from them, and stable Hom
/// dimensions compared through `F` on source pairs and through `G` on target pairs.
pub fn tri_equiv_conditions(
    pair: &dyn AdjointPair,
    corpus_a: &[(String, Module)],
    corpus_b: &[(String, Module)],
    bound: usize,
) -> Result<TriEquivReport> {
    let (a, b) = (pair.source(), pair.target());
    if !pair.unit(&injective_cogenerator(a))?.is_injective() {
        return Err(Error::PreconditionFailed("the left adjoint is not faithful".into()));
    }
    if !pair.counit(&Module::regular(b))?.is_surjective() {
        return Err(Error::PreconditionFailed("the right adjoint is not faithful".into()));
    }
    let pa = certified_profile(a, bound, "source")?;
    let pb = certified_profile(b, bound, "target")?;

    let mut rows = Vec::new();
    for (name, x) in corpus_a {
        let cok = hom_factorization(&pair.unit(x)?).cokernel;
        rows.push(TriEquivRow {
            side: "source",
            module: name.clone(),
            is_gp: is_gorenstein_projective(x, &pa)?.is_yes(),
            defect_dim: cok.dim(),
            defect_pd: pd(&cok, bound)?,
            defect_gpd: gpd(&cok, &pa)?,
        });
    }
    for (name, y) in corpus_b {
        let ker = hom_factorization(&pair.counit(y)?).kernel;
        rows.push(TriEquivRow {
            side: "target",
            module: name.clone(),
            is_gp: is_gorenstein_projective(y, &pb)?.is_yes(),
            defect_dim: ker.dim(),
            defect_pd: pd(&ker, bound)?,
            defect_gpd: gpd(&ker, &pb)?,
        });
    }
    let pd_at_most = |r: &TriEquivRow, k: usize| r.defect_pd.finite().is_some_and(|d| d <= k);
    let stable_gp_condition = rows.iter().filter(|r| r.is_gp).all(|r| match r.side {
        "source" => pd_at_most(r, 1),
        _ => pd_at_most(r, 0),
    });
    let singularity_condition = rows.iter().all(|r| r.defect_pd.is_finite());
    let defect_condition = rows.iter().all(|r| r.defect_gpd.is_some());
    let defects_projective = rows.iter().all(|r| pd_at_most(r, 0));

    let mut stable_hom = Vec::new();
    let images_a = corpus_a.iter().map(|(_, x)| pair.left(x)).collect::<Result<Vec<_>>>()?;
    for (i, (n1, x1)) in corpus_a.iter().enumerate() {
        for (j, (n2, x2)) in corpus_a.iter().enumerate() {
            stable_hom.push((
                n1.clone(),
                n2.clone(),
                stable_hom_dim(x1, x2)?,
                stable_hom_dim(&images_a[i], &images_a[j])?,
            ));
        }
    }
    let images_b = corpus_b
        .iter()
        .map(|(_, y)| pair.right(y))
        .collect::<Result<Vec<_>>>()?;
    for (i, (n1, y1)) in corpus_b.iter().enumerate() {
        for (j, (n2, y2)) in corpus_b.iter().enumerate() {
            stable_hom.push((
                n1.clone(),
                n2.clone(),
                stable_hom_dim(y1, y2)?,
                stable_hom_dim(&images_b[i], &images_b[j])?,
            ));
        }
    }
    Ok(TriEquivReport {
        pair: pair.name(),
        rows,
        stable_gp_condition,
        singularity_condition,
        defect_condition,
        defects_projective,
        stable_hom,
    })
}
