//! Induction, restriction, coinduction and tensor-hom adjunctions.

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactlin::Mat;
use crate::modrep::{hom_space, ModHom, Module};

use super::{Bimodule, RingExtension};

/// An adjunction `F -| G` with `F: A-mod -> B-mod`, with exact unit and counit.
pub trait AdjointPair: Send + Sync {
    fn name(&self) -> String;
    fn source(&self) -> &Arc<Algebra>;
    fn target(&self) -> &Arc<Algebra>;
    fn left(&self, x: &Module) -> Result<Module>;
    fn right(&self, y: &Module) -> Result<Module>;
    fn left_map(&self, f: &ModHom) -> Result<ModHom>;
    fn right_map(&self, g: &ModHom) -> Result<ModHom>;
    /// `x -> G F x`.
    fn unit(&self, x: &Module) -> Result<ModHom>;
    /// `F G y -> y`.
    fn counit(&self, y: &Module) -> Result<ModHom>;
}

fn require(m: &Module, a: &Arc<Algebra>, what: &str) -> Result<()> {
    if m.algebra().same_as(a) || m.algebra().structurally_equal(a) {
        Ok(())
    } else {
        Err(Error::InvalidModule(format!("{what} lives over the wrong algebra")))
    }
}

/// `M (x)_R x` for a bimodule presented by its left action and right action.
/// Returns the quotient module, the projection from `M (x)_k x` and a section.
fn balanced_tensor(
    left_alg: &Arc<Algebra>,
    left: &[Mat],
    right: &[Mat],
    right_alg: &Arc<Algebra>,
    x: &Module,
) -> (Module, Mat, Mat) {
    let field = x.field();
    let dm = left.first().map_or(0, Mat::rows);
    let dx = x.dim();
    let total = dm * dx;
    let im = Mat::identity(field, dm);
    let ix = Mat::identity(field, dx);
    let raw_action: Vec<Mat> = left.iter().map(|l| l.kron(&ix)).collect();
    let raw = Module::new_trusted(left_alg.clone(), raw_action);
    let blocks: Vec<Mat> = right_alg
        .generators()
        .iter()
        .map(|&g| &right[g].kron(&ix) - &im.kron(x.action(g)))
        .collect();
    let relations = Mat::hstack(field, total, &blocks.iter().collect::<Vec<_>>());
    let (q, proj, section) = raw.quotient(&relations).expect("balancing relations are invariant");
    (q, proj.matrix().clone(), section)
}

/// Basis of `Hom(src, tgt)` as matrices, with a left inverse of the stacked vectorizations.
pub(super) fn hom_basis_with_inverse(src: &Module, tgt: &Module) -> Result<(Vec<Mat>, Mat)> {
    let basis: Vec<Mat> = hom_space(src, tgt)?.into_iter().map(|h| h.matrix().clone()).collect();
    let rows = src.dim() * tgt.dim();
    let vecs: Vec<Mat> = basis.iter().map(Mat::vectorize).collect();
    let stacked = Mat::hstack(src.field(), rows, &vecs.iter().collect::<Vec<_>>());
    let linv = stacked.left_inverse().expect("hom basis is independent");
    Ok((basis, linv))
}

/// Matrix of `h -> act(h)` on a hom basis.
pub(super) fn transported(basis: &[Mat], linv: &Mat, act: impl Fn(&Mat) -> Mat) -> Mat {
    coords(linv, basis.iter().map(act), basis.len())
}

/// Hom space with an action of `alg` given by `act(i, h)` on map matrices.
fn hom_module(
    src: &Module,
    tgt: &Module,
    alg: &Arc<Algebra>,
    act: impl Fn(usize, &Mat) -> Mat,
) -> Result<(Module, Vec<Mat>, Mat)> {
    let (basis, linv) = hom_basis_with_inverse(src, tgt)?;
    let action = (0..alg.dim())
        .map(|i| transported(&basis, &linv, |h| act(i, h)))
        .collect();
    Ok((Module::new_trusted(alg.clone(), action), basis, linv))
}

fn coords(linv: &Mat, maps: impl Iterator<Item = Mat>, n: usize) -> Mat {
    let field = linv.field();
    let cols: Vec<Mat> = maps.map(|h| linv * &h.vectorize()).collect();
    Mat::hstack(field, n, &cols.iter().collect::<Vec<_>>())
}

fn restricted_actions(ext: &RingExtension, y: &Module) -> Vec<Mat> {
    (0..ext.base().dim())
        .map(|i| y.act(&ext.embedding().column(i)))
        .collect()
}

/// Restriction of scalars along the extension.
pub fn restrict(ext: &RingExtension, y: &Module) -> Result<Module> {
    require(y, ext.total(), "restricted module")?;
    Ok(Module::new_trusted(ext.base().clone(), restricted_actions(ext, y)))
}

fn induce_parts(ext: &RingExtension, x: &Module) -> (Module, Mat, Mat) {
    let s = ext.total();
    let right: Vec<Mat> = (0..ext.base().dim())
        .map(|i| s.right_mult(&ext.embedding().column(i)))
        .collect();
    balanced_tensor(s, s.left_all(), &right, ext.base(), x)
}

/// `S (x)_R x`.
pub fn induce(ext: &RingExtension, x: &Module) -> Result<Module> {
    require(x, ext.base(), "induced module")?;
    Ok(induce_parts(ext, x).0)
}

fn coinduce_parts(ext: &RingExtension, x: &Module) -> Result<(Module, Vec<Mat>, Mat)> {
    let s = ext.total();
    let res_s = restrict(ext, &Module::regular(s))?;
    let rights: Vec<Mat> = (0..s.dim()).map(|i| s.right_mult(&s.basis_vector(i))).collect();
    hom_module(&res_s, x, s, |i, h| h * &rights[i])
}

/// `Hom_R(S, x)` with `(s h)(t) = h(t s)`.
pub fn coinduce(ext: &RingExtension, x: &Module) -> Result<Module> {
    require(x, ext.base(), "coinduced module")?;
    Ok(coinduce_parts(ext, x)?.0)
}

/// `Ind -| Res` for a ring extension.
#[derive(Clone, Debug)]
pub struct IndRes {
    pub ext: RingExtension,
}

impl AdjointPair for IndRes {
    fn name(&self) -> String {
        "induction-restriction".into()
    }

    fn source(&self) -> &Arc<Algebra> {
        self.ext.base()
    }

    fn target(&self) -> &Arc<Algebra> {
        self.ext.total()
    }

    fn left(&self, x: &Module) -> Result<Module> {
        induce(&self.ext, x)
    }

    fn right(&self, y: &Module) -> Result<Module> {
        restrict(&self.ext, y)
    }

    fn left_map(&self, f: &ModHom) -> Result<ModHom> {
        require(f.source(), self.source(), "map source")?;
        let (src, _, section) = induce_parts(&self.ext, f.source());
        let (tgt, proj, _) = induce_parts(&self.ext, f.target());
        let lifted = Mat::identity(f.matrix().field(), self.target().dim()).kron(f.matrix());
        Ok(ModHom::new_trusted(src, tgt, &(&proj * &lifted) * &section))
    }

    fn right_map(&self, g: &ModHom) -> Result<ModHom> {
        Ok(ModHom::new_trusted(
            self.right(g.source())?,
            self.right(g.target())?,
            g.matrix().clone(),
        ))
    }

    fn unit(&self, x: &Module) -> Result<ModHom> {
        require(x, self.source(), "unit argument")?;
        let (ind, proj, _) = induce_parts(&self.ext, x);
        let one = self.target().unit().kron(&Mat::identity(x.field(), x.dim()));
        Ok(ModHom::new_trusted(x.clone(), restrict(&self.ext, &ind)?, &proj * &one))
    }

    fn counit(&self, y: &Module) -> Result<ModHom> {
        require(y, self.target(), "counit argument")?;
        let res = restrict(&self.ext, y)?;
        let (ind, _, section) = induce_parts(&self.ext, &res);
        let mult = Mat::hstack(y.field(), y.dim(), &y.actions().iter().collect::<Vec<_>>());
        Ok(ModHom::new_trusted(ind, y.clone(), &mult * &section))
    }
}

/// `Res -| Coind` for a ring extension.
#[derive(Clone, Debug)]
pub struct ResCoind {
    pub ext: RingExtension,
}

impl AdjointPair for ResCoind {
    fn name(&self) -> String {
        "restriction-coinduction".into()
    }

    fn source(&self) -> &Arc<Algebra> {
        self.ext.total()
    }

    fn target(&self) -> &Arc<Algebra> {
        self.ext.base()
    }

    fn left(&self, y: &Module) -> Result<Module> {
        restrict(&self.ext, y)
    }

    fn right(&self, x: &Module) -> Result<Module> {
        coinduce(&self.ext, x)
    }

    fn left_map(&self, g: &ModHom) -> Result<ModHom> {
        Ok(ModHom::new_trusted(
            self.left(g.source())?,
            self.left(g.target())?,
            g.matrix().clone(),
        ))
    }

    fn right_map(&self, f: &ModHom) -> Result<ModHom> {
        require(f.source(), self.target(), "map source")?;
        let (src, basis, _) = coinduce_parts(&self.ext, f.source())?;
        let (tgt, _, linv) = coinduce_parts(&self.ext, f.target())?;
        let m = coords(&linv, basis.iter().map(|h| f.matrix() * h), tgt.dim());
        Ok(ModHom::new_trusted(src, tgt, m))
    }

    fn unit(&self, y: &Module) -> Result<ModHom> {
        require(y, self.source(), "unit argument")?;
        let res = restrict(&self.ext, y)?;
        let (co, _, linv) = coinduce_parts(&self.ext, &res)?;
        let field = y.field();
        let maps = (0..y.dim()).map(|b| {
            let w = Mat::unit_vector(field, y.dim(), b);
            let cols: Vec<Mat> = y.actions().iter().map(|m| m * &w).collect();
            Mat::hstack(field, y.dim(), &cols.iter().collect::<Vec<_>>())
        });
        let m = coords(&linv, maps, co.dim());
        Ok(ModHom::new_trusted(y.clone(), co, m))
    }

    fn counit(&self, x: &Module) -> Result<ModHom> {
        require(x, self.target(), "counit argument")?;
        let (co, basis, _) = coinduce_parts(&self.ext, x)?;
        let res = restrict(&self.ext, &co)?;
        let one = self.source().unit();
        let cols: Vec<Mat> = basis.iter().map(|h| h * one).collect();
        let m = Mat::hstack(x.field(), x.dim(), &cols.iter().collect::<Vec<_>>());
        Ok(ModHom::new_trusted(res, x.clone(), m))
    }
}

/// `M (x)_R - -| Hom_S(M, -)` for an `S`-`R` bimodule `M`.
#[derive(Clone, Debug)]
pub struct TensorHom {
    pub bimodule: Bimodule,
    pub label: String,
}

impl TensorHom {
    pub fn new(bimodule: Bimodule, label: impl Into<String>) -> Self {
        TensorHom {
            bimodule,
            label: label.into(),
        }
    }

    fn tensor_parts(&self, x: &Module) -> (Module, Mat, Mat) {
        let m = &self.bimodule;
        balanced_tensor(
            m.left_algebra(),
            m.left_action(),
            m.right_action(),
            m.right_algebra(),
            x,
        )
    }

    fn hom_parts(&self, y: &Module) -> Result<(Module, Vec<Mat>, Mat)> {
        let m = &self.bimodule;
        let right = m.right_action();
        hom_module(&m.as_left_module(), y, m.right_algebra(), |i, h| h * &right[i])
    }
}

impl AdjointPair for TensorHom {
    fn name(&self) -> String {
        self.label.clone()
    }

    fn source(&self) -> &Arc<Algebra> {
        self.bimodule.right_algebra()
    }

    fn target(&self) -> &Arc<Algebra> {
        self.bimodule.left_algebra()
    }

    fn left(&self, x: &Module) -> Result<Module> {
        require(x, self.source(), "tensored module")?;
        Ok(self.tensor_parts(x).0)
    }

    fn right(&self, y: &Module) -> Result<Module> {
        require(y, self.target(), "hom target")?;
        Ok(self.hom_parts(y)?.0)
    }

    fn left_map(&self, f: &ModHom) -> Result<ModHom> {
        require(f.source(), self.source(), "map source")?;
        let (src, _, section) = self.tensor_parts(f.source());
        let (tgt, proj, _) = self.tensor_parts(f.target());
        let lifted = Mat::identity(f.matrix().field(), self.bimodule.dim()).kron(f.matrix());
        Ok(ModHom::new_trusted(src, tgt, &(&proj * &lifted) * &section))
    }

    fn right_map(&self, g: &ModHom) -> Result<ModHom> {
        require(g.source(), self.target(), "map source")?;
        let (src, basis, _) = self.hom_parts(g.source())?;
        let (tgt, _, linv) = self.hom_parts(g.target())?;
        let m = coords(&linv, basis.iter().map(|h| g.matrix() * h), tgt.dim());
        Ok(ModHom::new_trusted(src, tgt, m))
    }

    fn unit(&self, x: &Module) -> Result<ModHom> {
        require(x, self.source(), "unit argument")?;
        let field = x.field();
        let (fx, proj, _) = self.tensor_parts(x);
        let (gfx, _, linv) = self.hom_parts(&fx)?;
        let im = Mat::identity(field, self.bimodule.dim());
        let maps = (0..x.dim()).map(|b| &proj * &im.kron(&Mat::unit_vector(field, x.dim(), b)));
        let m = coords(&linv, maps, gfx.dim());
        Ok(ModHom::new_trusted(x.clone(), gfx, m))
    }

    fn counit(&self, y: &Module) -> Result<ModHom> {
        require(y, self.target(), "counit argument")?;
        let field = y.field();
        let (gy, basis, _) = self.hom_parts(y)?;
        let (fgy, _, section) = self.tensor_parts(&gy);
        let mut cols = Vec::with_capacity(self.bimodule.dim() * basis.len());
        for a in 0..self.bimodule.dim() {
            for h in &basis {
                cols.push(h.column(a));
            }
        }
        let raw = Mat::hstack(field, y.dim(), &cols.iter().collect::<Vec<_>>());
        Ok(ModHom::new_trusted(fgy, y.clone(), &raw * &section))
    }
}

/// Outcome of the two triangle identities on a pair of test objects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleCheck {
    /// `eps_{F x} . F(eta_x) = id`.
    pub left: bool,
    /// `G(eps_y) . eta_{G y} = id`.
    pub right: bool,
}

impl TriangleCheck {
    pub fn holds(&self) -> bool {
        self.left && self.right
    }
}

pub fn check_triangles(pair: &dyn AdjointPair, x: &Module, y: &Module) -> Result<TriangleCheck> {
    let fx = pair.left(x)?;
    let f_eta = pair.left_map(&pair.unit(x)?)?;
    let eps_fx = pair.counit(&fx)?;
    let left = eps_fx.matrix().rows() == fx.dim()
        && f_eta.matrix().cols() == fx.dim()
        && (eps_fx.matrix() * f_eta.matrix()).is_identity();
    let gy = pair.right(y)?;
    let eta_gy = pair.unit(&gy)?;
    let g_eps = pair.right_map(&pair.counit(y)?)?;
    let right = g_eps.matrix().rows() == gy.dim()
        && eta_gy.matrix().cols() == gy.dim()
        && (g_eps.matrix() * eta_gy.matrix()).is_identity();
    Ok(TriangleCheck { left, right })
}
