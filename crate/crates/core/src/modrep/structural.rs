//! Projective, simple and injective indecomposables; covers and envelopes.

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactlin::Mat;

use super::{hom_dim, hom_space, ModHom, Module};

/// Data attached to one isomorphism class of simple modules.
#[derive(Clone, Debug)]
pub struct ClassInfo {
    /// A primitive idempotent `e` with top(Ae) in this class.
    pub idempotent: Mat,
    /// `Ae`, with basis `e_i e` for the listed basis indices `i`.
    pub projective: Module,
    pub projective_indices: Vec<usize>,
    /// Coordinates of `e` in the basis of `Ae`.
    pub generator: Mat,
    pub simple: Module,
    /// `D(eA)`.
    pub injective: Module,
}

#[derive(Clone, Debug)]
pub struct Structural {
    pub classes: Vec<ClassInfo>,
    /// Class of each idempotent in the algebra's list.
    pub idempotent_class: Vec<usize>,
}

impl Structural {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }
}

/// Computed once per algebra and cached.
pub fn structural_modules(a: &Arc<Algebra>) -> Result<Arc<Structural>> {
    a.structural_cache().get_or_init(|| compute(a).map(Arc::new)).clone()
}

fn principal(a: &Arc<Algebra>, e: &Mat) -> (Module, Vec<usize>, Mat) {
    let re = a.right_mult(e);
    let idx = re.rref().pivots;
    let basis = re.select_cols(&idx);
    let (p, _) = Module::regular(a).submodule(&basis).expect("Ae is a left ideal");
    let generator = basis.solve_particular(e).expect("e lies in Ae");
    (p, idx, generator)
}

fn compute(a: &Arc<Algebra>) -> Result<Structural> {
    let ids = a
        .idempotents()
        .ok_or_else(|| Error::UnsupportedAlgebra("no complete set of primitive idempotents is known".into()))?;
    let op = a.opposite();
    let mut classes: Vec<ClassInfo> = Vec::new();
    let mut idempotent_class = Vec::with_capacity(ids.len());
    for e in ids {
        if let Some(c) = classes.iter().position(|c| !c.simple.act(e).is_zero()) {
            idempotent_class.push(c);
            continue;
        }
        let (projective, projective_indices, generator) = principal(a, e);
        let (simple, _) = projective.top();
        if hom_dim(&simple, &simple)? != 1 {
            return Err(Error::UnsupportedAlgebra(
                "top of an indecomposable projective is not a split simple module".into(),
            ));
        }
        let (p_op, _, _) = principal(&op, e);
        let injective = p_op.dual();
        idempotent_class.push(classes.len());
        classes.push(ClassInfo {
            idempotent: e.clone(),
            projective,
            projective_indices,
            generator,
            simple,
            injective,
        });
    }
    Ok(Structural {
        classes,
        idempotent_class,
    })
}

#[derive(Clone, Debug)]
pub struct Summand {
    pub class: usize,
    pub offset: usize,
}

/// A direct sum of indecomposable projectives `Ae_c`, with its decomposition.
#[derive(Clone, Debug)]
pub struct ProjModule {
    pub module: Module,
    pub summands: Vec<Summand>,
    structural: Arc<Structural>,
}

impl ProjModule {
    pub fn from_classes(a: &Arc<Algebra>, classes: &[usize]) -> Result<Self> {
        let structural = structural_modules(a)?;
        let parts: Vec<&Module> = classes.iter().map(|&c| &structural.classes[c].projective).collect();
        let module = super::direct_sum(a, &parts).module;
        let mut summands = Vec::with_capacity(classes.len());
        let mut offset = 0;
        for &class in classes {
            summands.push(Summand { class, offset });
            offset += structural.classes[class].projective.dim();
        }
        Ok(ProjModule {
            module,
            summands,
            structural,
        })
    }

    pub fn zero(a: &Arc<Algebra>) -> Result<Self> {
        ProjModule::from_classes(a, &[])
    }

    pub fn rank(&self) -> usize {
        self.summands.len()
    }

    pub fn classes(&self) -> Vec<usize> {
        self.summands.iter().map(|s| s.class).collect()
    }

    pub fn class_info(&self, class: usize) -> &ClassInfo {
        &self.structural.classes[class]
    }

    /// Generator of summand `s` in module coordinates.
    pub fn generator(&self, s: usize) -> Mat {
        let sm = &self.summands[s];
        let g = &self.structural.classes[sm.class].generator;
        let mut v = Mat::zeros(self.module.field(), self.module.dim(), 1);
        v.set_block(sm.offset, 0, g);
        v
    }

    pub fn generator_idempotent(&self, s: usize) -> &Mat {
        &self.structural.classes[self.summands[s].class].idempotent
    }

    /// The map sending generator `s` to `images[s]`, each of which must lie in `e_s N`.
    pub fn map_to(&self, n: &Module, images: &[Mat]) -> ModHom {
        assert_eq!(images.len(), self.summands.len());
        let field = n.field();
        let mut blocks = Vec::with_capacity(self.module.dim());
        for (sm, img) in self.summands.iter().zip(images) {
            debug_assert_eq!(&n.act(&self.structural.classes[sm.class].idempotent) * img, *img);
            for &i in &self.structural.classes[sm.class].projective_indices {
                blocks.push(n.action(i) * img);
            }
        }
        let matrix = Mat::hstack(field, n.dim(), &blocks.iter().collect::<Vec<_>>());
        ModHom::new_trusted(self.module.clone(), n.clone(), matrix)
    }

    /// Basis of Hom(P, N), via `Hom(Ae, N) = eN`.
    pub fn hom_basis(&self, n: &Module) -> Vec<ModHom> {
        let field = n.field();
        let mut out = Vec::new();
        for s in 0..self.summands.len() {
            let e = n.act(self.generator_idempotent(s));
            for w in e.column_space().columns() {
                let images: Vec<Mat> = (0..self.summands.len())
                    .map(|t| {
                        if t == s {
                            w.clone()
                        } else {
                            Mat::zeros(field, n.dim(), 1)
                        }
                    })
                    .collect();
                out.push(self.map_to(n, &images));
            }
        }
        out
    }

    /// Some `psi: P -> M` with `pi psi = phi`, if one exists.
    pub fn lift(&self, phi: &Mat, pi: &ModHom) -> Option<ModHom> {
        let m = pi.source();
        let mut images = Vec::with_capacity(self.summands.len());
        for s in 0..self.summands.len() {
            let y = phi * &self.generator(s);
            let e = m.act(self.generator_idempotent(s));
            let z = (pi.matrix() * &e).solve_particular(&y)?;
            images.push(&e * &z);
        }
        Some(self.map_to(m, &images))
    }
}

/// Projective cover `P -> M`.
pub fn cover(m: &Module) -> Result<(ProjModule, ModHom)> {
    let a = m.algebra();
    let structural = structural_modules(a)?;
    let field = m.field();
    let mut span = m.radical_basis();
    let mut classes = Vec::new();
    let mut images = Vec::new();
    for (c, info) in structural.classes.iter().enumerate() {
        let e = m.act(&info.idempotent);
        for v in e.column_space().columns() {
            if span.spans(&v) {
                continue;
            }
            span = Mat::hstack(field, m.dim(), &[&span, &v]);
            classes.push(c);
            images.push(v);
            if span.cols() == m.dim() {
                break;
            }
        }
    }
    let p = ProjModule::from_classes(a, &classes)?;
    let pi = p.map_to(m, &images);
    debug_assert!(pi.is_surjective());
    Ok((p, pi))
}

/// Injective envelope `M -> I`, dual to the cover of `D(M)`.
pub fn envelope(m: &Module) -> Result<(Module, ModHom)> {
    let (p, pi) = cover(&m.dual())?;
    let inj = p.module.dual();
    let iota = ModHom::new_trusted(m.clone(), inj.clone(), pi.matrix().transpose());
    Ok((inj, iota))
}

pub fn is_projective(m: &Module) -> Result<bool> {
    Ok(cover(m)?.0.module.dim() == m.dim())
}

/// Composition multiplicity of each simple class.
pub fn simple_multiplicities(m: &Module) -> Result<Vec<usize>> {
    let structural = structural_modules(m.algebra())?;
    Ok(structural.classes.iter().map(|c| m.act(&c.idempotent).rank()).collect())
}

/// dim Hom(M, N) minus the maps factoring through a projective.
pub fn stable_hom_dim(m: &Module, n: &Module) -> Result<usize> {
    let h = hom_dim(m, n)?;
    if h == 0 {
        return Ok(0);
    }
    let (p, pi) = cover(n)?;
    let through = hom_space(m, &p.module)?;
    if through.is_empty() {
        return Ok(h);
    }
    let vecs: Vec<Mat> = through.iter().map(|g| pi.compose(g).matrix().vectorize()).collect();
    let r = Mat::hstack(m.field(), m.dim() * n.dim(), &vecs.iter().collect::<Vec<_>>()).rank();
    Ok(h - r)
}
