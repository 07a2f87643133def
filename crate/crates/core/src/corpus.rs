//! The bundled algebras, extensions and module lists.

use std::sync::Arc;

use crate::algebra::{
    cyclic_group_table, field_algebra, group_algebra, matrix_algebra, path_algebra, product, symmetric_group_table,
    truncated_extension, Algebra, Quiver, Relation, DEFAULT_MAX_PATH_LENGTH,
};
use crate::dgcplx::{functor_f, GradedModule};
use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, Mat};
use crate::frobenius::{column_bimodule, RingExtension, TensorHom};
use crate::homology::{resolve_projective, Complex};
use crate::modrep::{direct_sum, hom_space, is_isomorphic, structural_modules, Module};

/// Names accepted by [`named_algebra`], in display order.
pub const ALGEBRA_NAMES: &[&str] = &[
    "F2",
    "F3",
    "F7",
    "Q",
    "F2[x]/x^2",
    "F2[x]/x^3",
    "F2[C2]",
    "F3[C3]",
    "F7[S3]",
    "A2",
    "A3",
    "nakayama",
    "A2[x]/x^2",
    "M2(F2[x]/x^2)",
    "F2xA2",
];

fn f2() -> FieldSpec {
    FieldSpec::prime(2)
}

pub fn truncated_polynomial(field: FieldSpec, t: usize) -> Result<Arc<Algebra>> {
    Ok(truncated_extension(&field_algebra(field), t)?.algebra)
}

/// Linearly oriented `A_n` without relations.
pub fn linear_path_algebra(field: FieldSpec, n: usize) -> Result<Arc<Algebra>> {
    path_algebra(&crate::algebra::linear_quiver(n), field, DEFAULT_MAX_PATH_LENGTH)
}

/// Two vertices joined by arrows both ways, all paths of length two killed.
pub fn nakayama_cycle(field: FieldSpec) -> Result<Arc<Algebra>> {
    let q = Quiver::new(2, &[(0, 1, "a"), (1, 0, "b")])
        .with_relation(Relation::monomial(&["a", "b"], field))
        .with_relation(Relation::monomial(&["b", "a"], field));
    path_algebra(&q, field, DEFAULT_MAX_PATH_LENGTH)
}

pub fn named_algebra(name: &str) -> Result<Arc<Algebra>> {
    let k = f2();
    match name {
        "F2" => Ok(field_algebra(k)),
        "F3" => Ok(field_algebra(FieldSpec::prime(3))),
        "F7" => Ok(field_algebra(FieldSpec::prime(7))),
        "Q" => Ok(field_algebra(FieldSpec::rationals())),
        "F2[x]/x^2" => truncated_polynomial(k, 2),
        "F2[x]/x^3" => truncated_polynomial(k, 3),
        "F2[C2]" => group_algebra(&cyclic_group_table(2), k),
        "F3[C3]" => group_algebra(&cyclic_group_table(3), FieldSpec::prime(3)),
        "F7[S3]" => group_algebra(&symmetric_group_table(3), FieldSpec::prime(7)),
        "A2" => linear_path_algebra(k, 2),
        "A3" => linear_path_algebra(k, 3),
        "nakayama" => nakayama_cycle(k),
        "A2[x]/x^2" => Ok(truncated_extension(&linear_path_algebra(k, 2)?, 2)?.algebra),
        "M2(F2[x]/x^2)" => matrix_algebra(&truncated_polynomial(k, 2)?, 2),
        "F2xA2" => product(&field_algebra(k), &linear_path_algebra(k, 2)?),
        _ => Err(Error::InvalidAlgebra(format!("unknown corpus algebra `{name}`"))),
    }
}

/// A named ring extension `base -> total` given by its embedding matrix.
#[derive(Clone, Debug)]
pub struct CorpusExtension {
    pub name: &'static str,
    pub base: Arc<Algebra>,
    pub total: Arc<Algebra>,
    pub embedding: Mat,
}

impl CorpusExtension {
    pub fn extension(&self) -> Result<RingExtension> {
        RingExtension::new(self.base.clone(), self.total.clone(), self.embedding.clone())
    }
}

/// `M (x)_R -` for `R = F2[x]/x^2` and the column bimodule over `M2(R)`.
pub fn morita_pair() -> Result<TensorHom> {
    let r = truncated_polynomial(f2(), 2)?;
    let s = matrix_algebra(&r, 2)?;
    Ok(TensorHom::new(column_bimodule(&r, &s, 2)?, "morita-column"))
}

pub const EXTENSION_NAMES: &[&str] = &[
    "identity-A2",
    "F2-F2[x]/x^2",
    "F2-F2[x]/x^3",
    "F2-F2[C2]",
    "F3-F3[C3]",
    "A2-A2[x]/x^2",
    "F2-A2",
];

pub fn named_extension(name: &str) -> Result<CorpusExtension> {
    let k = f2();
    let (base, total, embedding) = match name {
        "identity-A2" => {
            let a = linear_path_algebra(k, 2)?;
            let e = Mat::identity(k, a.dim());
            (a.clone(), a, e)
        }
        "F2-F2[x]/x^2" | "F2-F2[x]/x^3" => {
            let t = if name.ends_with('2') { 2 } else { 3 };
            let base = field_algebra(k);
            let tr = truncated_extension(&base, t)?;
            (base, tr.algebra, tr.embedding)
        }
        "A2-A2[x]/x^2" => {
            let r = linear_path_algebra(k, 2)?;
            let tr = truncated_extension(&r, 2)?;
            (r, tr.algebra, tr.embedding)
        }
        "F2-F2[C2]" | "F3-F3[C3]" => {
            let (p, n) = if name.starts_with("F2") { (2, 2) } else { (3, 3) };
            let f = FieldSpec::prime(p);
            let s = group_algebra(&cyclic_group_table(n), f)?;
            let e = s.unit().clone();
            (field_algebra(f), s, e)
        }
        "F2-A2" => {
            let s = linear_path_algebra(k, 2)?;
            let e = s.unit().clone();
            (field_algebra(k), s, e)
        }
        _ => return Err(Error::InvalidAlgebra(format!("unknown corpus extension `{name}`"))),
    };
    let name = EXTENSION_NAMES.iter().copied().find(|n| *n == name).unwrap();
    Ok(CorpusExtension {
        name,
        base,
        total,
        embedding,
    })
}

/// Indecomposable projectives, injectives, simples and uniserial pieces, up to
/// isomorphism, followed by a few direct sums; at least eight entries.
pub fn standard_modules(a: &Arc<Algebra>) -> Result<Vec<(String, Module)>> {
    let s = structural_modules(a)?;
    let mut base: Vec<(String, Module)> = Vec::new();
    let push = |base: &mut Vec<(String, Module)>, name: String, m: Module| -> Result<()> {
        if m.is_zero() {
            return Ok(());
        }
        for (_, other) in base.iter() {
            if is_isomorphic(other, &m, 0)?.is_yes() {
                return Ok(());
            }
        }
        base.push((name, m));
        Ok(())
    };
    for (c, info) in s.classes.iter().enumerate() {
        let i = c + 1;
        push(&mut base, format!("S{i}"), info.simple.clone())?;
        push(&mut base, format!("P{i}"), info.projective.clone())?;
        push(&mut base, format!("I{i}"), info.injective.clone())?;
        let mut cur = info.projective.clone();
        let mut k = 1;
        loop {
            let rad = cur.radical_basis();
            if rad.cols() == 0 {
                break;
            }
            let (sub, _) = cur.submodule(&rad)?;
            push(&mut base, format!("rad^{k} P{i}"), sub.clone())?;
            let (q, _, _) = info.projective.quotient(&radical_power(&info.projective, k))?;
            push(&mut base, format!("P{i}/rad^{k}"), q)?;
            cur = sub;
            k += 1;
        }
    }
    let regular = Module::regular(a);
    let dual_regular = Module::regular(&a.opposite()).dual();
    let mut out = base.clone();
    out.push(("A".into(), regular));
    out.push(("DA".into(), dual_regular));
    // Pairwise sums of distinct pieces, then powers of the first piece.
    let mut sums = Vec::new();
    for i in 0..base.len() {
        for j in i + 1..base.len() {
            sums.push(vec![i, j]);
        }
    }
    let mut added = 0;
    let mut power = 2;
    while out.len() < 8 || added < 2 {
        let parts = if added < sums.len() {
            sums[added].clone()
        } else {
            power += 1;
            vec![0; power - 1]
        };
        let name = if parts.iter().all(|&p| p == parts[0]) {
            format!("{}^{}", base[parts[0]].0, parts.len())
        } else {
            parts.iter().map(|&p| base[p].0.as_str()).collect::<Vec<_>>().join("+")
        };
        let ms: Vec<&Module> = parts.iter().map(|&p| &base[p].1).collect();
        out.push((name, direct_sum(a, &ms).module));
        added += 1;
    }
    Ok(out)
}

fn radical_power(m: &Module, k: usize) -> Mat {
    let mut cur = Mat::identity(m.field(), m.dim());
    for _ in 0..k {
        let (sub, incl) = m.submodule(&cur).expect("invariant");
        cur = incl.matrix() * &sub.radical_basis();
    }
    cur
}

/// `A^rank` modulo the submodule generated by `relations` random vectors.
pub fn random_module<R: rand::Rng + ?Sized>(a: &Arc<Algebra>, rank: usize, relations: usize, rng: &mut R) -> Module {
    let free = Module::free(a, rank);
    let vs = Mat::random(a.field(), free.dim(), relations, rng);
    let sub = free.generated_by(&vs);
    free.quotient(&sub).expect("generated submodules are invariant").0
}

/// Algebras whose graded modules and complexes make up the complex corpus.
pub const COMPLEX_ALGEBRAS: &[&str] = &["F2[C2]", "A2", "F2[x]/x^2", "A3"];

/// A handful of graded modules built from the standard modules of `a`.
pub fn standard_graded(a: &Arc<Algebra>) -> Result<Vec<GradedModule>> {
    let s = structural_modules(a)?;
    let simple = s.classes[0].simple.clone();
    let proj = s.classes[0].projective.clone();
    let last = s.classes[s.class_count() - 1].simple.clone();
    Ok(vec![
        GradedModule::new(a, 0, vec![simple.clone(), proj.clone()])?,
        GradedModule::new(a, -1, vec![proj.clone()])?,
        GradedModule::new(a, 1, vec![Module::regular(a), last, simple])?,
        GradedModule::new(a, 2, vec![Module::regular(a), Module::zero(a), proj])?,
        GradedModule::zero(a),
    ])
}

/// Stalks, two-term complexes of maps, cones and truncated resolutions over `a`.
pub fn standard_complexes(a: &Arc<Algebra>) -> Result<Vec<Complex>> {
    let mods = standard_modules(a)?;
    let mut out: Vec<Complex> = mods.iter().take(3).map(|(_, m)| Complex::stalk(m, 0)).collect();
    let mut maps = 0;
    'outer: for (_, x) in &mods {
        for (_, y) in &mods {
            if let Some(f) = hom_space(x, y)?.into_iter().find(|f| !f.is_zero()) {
                if f.is_isomorphism() {
                    continue;
                }
                out.push(Complex::new(
                    a,
                    -1,
                    vec![x.clone(), y.clone()],
                    vec![f.matrix().clone()],
                )?);
                maps += 1;
                if maps == 2 {
                    break 'outer;
                }
            }
        }
    }
    out.push(functor_f(&standard_graded(a)?[0]));
    let s = &structural_modules(a)?.classes[0].simple;
    let r = resolve_projective(s, 1)?;
    if let (Some(d), Some(p0), Some(p1)) = (r.differential(1), r.term(0), r.term(1)) {
        out.push(Complex::new(
            a,
            -1,
            vec![p1.module.clone(), p0.module.clone()],
            vec![d.matrix().clone()],
        )?);
    }
    Ok(out)
}
