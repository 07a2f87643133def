//! Hom spaces and the kernel/image/cokernel of a map.

use crate::error::{Error, Result};
use crate::exactlin::Mat;

use super::{ModHom, Module};

/// Basis of Hom_A(m, n), from the linear system `X rho_m(g) = rho_n(g) X` over generators.
pub fn hom_space(m: &Module, n: &Module) -> Result<Vec<ModHom>> {
    if !m.same_algebra(n) {
        return Err(Error::AlgebraMismatch);
    }
    let field = m.field();
    let (dm, dn) = (m.dim(), n.dim());
    if dm == 0 || dn == 0 {
        return Ok(Vec::new());
    }
    let gens = m.algebra().generators();
    if gens.is_empty() {
        return Ok(identity_basis(m, n));
    }
    let im = Mat::identity(field, dm);
    let in_ = Mat::identity(field, dn);
    let blocks: Vec<Mat> = gens
        .iter()
        .map(|&g| &m.action(g).transpose().kron(&in_) - &im.kron(n.action(g)))
        .collect();
    let system = Mat::vstack(field, dm * dn, &blocks.iter().collect::<Vec<_>>());
    let kernel = system.kernel();
    Ok(kernel
        .columns()
        .into_iter()
        .map(|v| ModHom::new_trusted(m.clone(), n.clone(), Mat::unvectorize(&v, dn, dm)))
        .collect())
}

fn identity_basis(m: &Module, n: &Module) -> Vec<ModHom> {
    let field = m.field();
    let mut out = Vec::new();
    for j in 0..m.dim() {
        for i in 0..n.dim() {
            let mut x = Mat::zeros(field, n.dim(), m.dim());
            x.set(i, j, &field.one());
            out.push(ModHom::new_trusted(m.clone(), n.clone(), x));
        }
    }
    out
}

pub fn hom_dim(m: &Module, n: &Module) -> Result<usize> {
    hom_space(m, n).map(|b| b.len())
}

#[derive(Clone, Debug)]
pub struct HomFactorization {
    pub kernel: Module,
    pub kernel_inclusion: ModHom,
    pub image: Module,
    /// The corestriction `source -> image`.
    pub coimage_map: ModHom,
    pub image_inclusion: ModHom,
    pub cokernel: Module,
    pub cokernel_projection: ModHom,
}

pub fn hom_factorization(f: &ModHom) -> HomFactorization {
    let (kernel, kernel_inclusion) = f.source().submodule(&f.matrix().kernel()).expect("kernel is invariant");
    let (image, image_inclusion) = f
        .target()
        .submodule(&f.matrix().column_space())
        .expect("image is invariant");
    let linv = image_inclusion.matrix().left_inverse().expect("basis is independent");
    let coimage_map = ModHom::new_trusted(f.source().clone(), image.clone(), &linv * f.matrix());
    let (cokernel, cokernel_projection, _) = f
        .target()
        .quotient(image_inclusion.matrix())
        .expect("image is invariant");
    HomFactorization {
        kernel,
        kernel_inclusion,
        image,
        coimage_map,
        image_inclusion,
        cokernel,
        cokernel_projection,
    }
}
