//! Frobenius extensions and bimodules, and the projectivity and summand tests they rest on.

use std::sync::Arc;

use crate::algebra::tensor;
use crate::error::{Error, Result};
use crate::exactlin::Mat;
use crate::modrep::{cover, hom_space, is_isomorphic, IsoVerdict, ModHom, Module};

use super::functors::{coinduce, hom_basis_with_inverse, induce, restrict, transported};
use super::{Bimodule, RingExtension};

#[derive(Clone, Debug)]
pub enum FrobeniusVerdict {
    Yes { witness: ModHom },
    No { reason: String },
    Inconclusive { reason: String },
}

impl FrobeniusVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, FrobeniusVerdict::Yes { .. })
    }

    pub fn is_no(&self) -> bool {
        matches!(self, FrobeniusVerdict::No { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            FrobeniusVerdict::Yes { .. } => "yes",
            FrobeniusVerdict::No { .. } => "no",
            FrobeniusVerdict::Inconclusive { .. } => "inconclusive",
        }
    }
}

impl From<IsoVerdict> for FrobeniusVerdict {
    fn from(v: IsoVerdict) -> Self {
        match v {
            IsoVerdict::Yes(witness) => FrobeniusVerdict::Yes { witness },
            IsoVerdict::No(reason) => FrobeniusVerdict::No { reason },
            IsoVerdict::Inconclusive => FrobeniusVerdict::Inconclusive {
                reason: "isomorphism search exhausted its budget".into(),
            },
        }
    }
}

/// Whether some composite `X -> M -> X` through `m` is invertible, for `x` with local endomorphism ring.
pub fn is_summand(x: &Module, m: &Module) -> Result<bool> {
    if x.dim() == 0 {
        return Ok(true);
    }
    let ins = hom_space(x, m)?;
    if ins.is_empty() {
        return Ok(false);
    }
    let outs = hom_space(m, x)?;
    Ok(outs
        .iter()
        .any(|p| ins.iter().any(|i| (p.matrix() * i.matrix()).is_invertible())))
}

/// Projectivity decided twice: by the projective cover being an isomorphism, and by
/// splitting the surjection from a free module onto a generating set.
pub fn is_projective_certified(m: &Module) -> Result<bool> {
    let (p, pi) = cover(m)?;
    let by_cover = p.module.dim() == m.dim();
    let gens: Vec<Mat> = (0..p.rank()).map(|k| pi.matrix() * &p.generator(k)).collect();
    let by_splitting = splits_from_free(m, &gens)?;
    if by_cover != by_splitting {
        return Err(Error::violation(
            "projectivity-certificates-agree",
            format!("cover says {by_cover}, splitting says {by_splitting}"),
        ));
    }
    Ok(by_cover)
}

fn splits_from_free(m: &Module, gens: &[Mat]) -> Result<bool> {
    let a = m.algebra();
    let field = m.field();
    if m.dim() == 0 {
        return Ok(true);
    }
    let free = Module::free(a, gens.len());
    let blocks: Vec<Mat> = gens
        .iter()
        .map(|g| {
            let cols: Vec<Mat> = m.actions().iter().map(|act| act * g).collect();
            Mat::hstack(field, m.dim(), &cols.iter().collect::<Vec<_>>())
        })
        .collect();
    let pi = Mat::hstack(field, m.dim(), &blocks.iter().collect::<Vec<_>>());
    debug_assert!(ModHom::new(free.clone(), m.clone(), pi.clone()).is_ok());
    let sections = hom_space(m, &free)?;
    let n = m.dim() * m.dim();
    let vecs: Vec<Mat> = sections.iter().map(|s| (&pi * s.matrix()).vectorize()).collect();
    let system = Mat::hstack(field, n, &vecs.iter().collect::<Vec<_>>());
    Ok(system
        .solve_particular(&Mat::identity(field, m.dim()).vectorize())
        .is_some())
}

/// `Hom_R(S, R)` as an `S`-`R` bimodule: `(s f)(t) = f(t s)`, `(f r)(t) = f(t) r`.
fn dual_of_total(ext: &RingExtension) -> Result<Bimodule> {
    let s = ext.total();
    let r = ext.base();
    let res_s = restrict(ext, &Module::regular(s))?;
    let (basis, linv) = hom_basis_with_inverse(&res_s, &Module::regular(r))?;
    let left = (0..s.dim())
        .map(|i| {
            let rs = s.right_mult(&s.basis_vector(i));
            transported(&basis, &linv, |h| h * &rs)
        })
        .collect();
    let right = (0..r.dim())
        .map(|j| {
            let rr = r.right_mult(&r.basis_vector(j));
            transported(&basis, &linv, |h| &rr * h)
        })
        .collect();
    Bimodule::new(s.clone(), r.clone(), left, right)
}

pub fn is_frobenius_extension(ext: &RingExtension, seed: u64) -> Result<FrobeniusVerdict> {
    let res_s = restrict(ext, &Module::regular(ext.total()))?;
    if !is_projective_certified(&res_s)? {
        return Ok(FrobeniusVerdict::No {
            reason: "the total algebra is not projective over the base".into(),
        });
    }
    let s_bimod = ext.total_as_bimodule();
    let dual = dual_of_total(ext)?;
    let env = s_bimod.enveloping_algebra()?;
    let verdict = is_isomorphic(
        &s_bimod.as_enveloping_module(&env),
        &dual.as_enveloping_module(&env),
        seed,
    )?;
    Ok(verdict.into())
}

/// `Ind x` against `Coind x`.
pub fn ind_coind_witness(ext: &RingExtension, x: &Module, seed: u64) -> Result<IsoVerdict> {
    is_isomorphic(&induce(ext, x)?, &coinduce(ext, x)?, seed)
}

pub fn is_frobenius_bimodule(m: &Bimodule, seed: u64) -> Result<FrobeniusVerdict> {
    if !is_projective_certified(&m.as_left_module())? {
        return Ok(FrobeniusVerdict::No {
            reason: "the bimodule is not projective on the left".into(),
        });
    }
    if !is_projective_certified(&m.as_right_module())? {
        return Ok(FrobeniusVerdict::No {
            reason: "the bimodule is not projective on the right".into(),
        });
    }
    let s = m.left_algebra();
    let r = m.right_algebra();
    // Hom_S(M, S): (r f)(x) = f(x r), (f s)(x) = f(x) s.
    let (b1, l1) = hom_basis_with_inverse(&m.as_left_module(), &Module::regular(s))?;
    let left1 = (0..r.dim())
        .map(|i| transported(&b1, &l1, |h| h * &m.right_action()[i]))
        .collect();
    let right1 = (0..s.dim())
        .map(|j| {
            let rs = s.right_mult(&s.basis_vector(j));
            transported(&b1, &l1, |h| &rs * h)
        })
        .collect();
    // Hom_{R^op}(M, R): (r g)(x) = r g(x), (g s)(x) = g(s x).
    let r_right = Module::regular(&r.opposite());
    let (b2, l2) = hom_basis_with_inverse(&m.as_right_module(), &r_right)?;
    let left2 = (0..r.dim()).map(|i| transported(&b2, &l2, |h| r.left(i) * h)).collect();
    let right2 = (0..s.dim())
        .map(|j| transported(&b2, &l2, |h| h * &m.left_action()[j]))
        .collect();
    let h1 = Bimodule::new(r.clone(), s.clone(), left1, right1)?;
    let h2 = Bimodule::new(r.clone(), s.clone(), left2, right2)?;
    let env: Arc<_> = tensor(r, &s.opposite())?;
    Ok(is_isomorphic(&h1.as_enveloping_module(&env), &h2.as_enveloping_module(&env), seed)?.into())
}
