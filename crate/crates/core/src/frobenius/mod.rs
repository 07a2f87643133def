//! Ring extensions, bimodules and the adjoint functors they induce.

mod functors;
mod reports;
mod verify;

use std::sync::Arc;

use crate::algebra::{tensor, Algebra};
use crate::error::{Error, Result};
use crate::exactlin::Mat;
use crate::modrep::Module;

pub use functors::{
    check_triangles, coinduce, induce, restrict, AdjointPair, IndRes, ResCoind, TensorHom, TriangleCheck,
};
pub use reports::{
    counterexample_product, faithfulness_report, global_gdim_transfer, projection_inclusion, tri_equiv_conditions,
    verify_gpd_transfer, CounterexampleReport, FaithfulnessReport, GdimTransfer, TransferRow, TriEquivReport,
    TriEquivRow,
};
pub use verify::{
    ind_coind_witness, is_frobenius_bimodule, is_frobenius_extension, is_projective_certified, is_summand,
    FrobeniusVerdict,
};

/// A unit-preserving injective algebra map `base -> total`.
#[derive(Clone, Debug)]
pub struct RingExtension {
    base: Arc<Algebra>,
    total: Arc<Algebra>,
    /// `dim total x dim base`.
    embedding: Mat,
}

impl RingExtension {
    pub fn new(base: Arc<Algebra>, total: Arc<Algebra>, embedding: Mat) -> Result<Self> {
        if base.field() != total.field() {
            return Err(Error::InvalidField("extension between different fields".into()));
        }
        if embedding.rows() != total.dim() || embedding.cols() != base.dim() {
            return Err(Error::InputShape(format!(
                "embedding is {}x{}, expected {}x{}",
                embedding.rows(),
                embedding.cols(),
                total.dim(),
                base.dim()
            )));
        }
        if &(&embedding * base.unit()) != total.unit() {
            return Err(Error::InvalidAlgebra("embedding does not preserve the unit".into()));
        }
        if embedding.rank() != base.dim() {
            return Err(Error::InvalidAlgebra("embedding is not injective".into()));
        }
        for i in 0..base.dim() {
            for j in 0..base.dim() {
                let lhs = &embedding * &base.product_of_basis(i, j);
                let rhs = total.mul(&embedding.column(i), &embedding.column(j));
                if lhs != rhs {
                    return Err(Error::InvalidAlgebra(format!(
                        "embedding is not multiplicative on ({}, {})",
                        base.label_of(i),
                        base.label_of(j)
                    )));
                }
            }
        }
        Ok(RingExtension { base, total, embedding })
    }

    pub fn identity(a: &Arc<Algebra>) -> Self {
        RingExtension {
            base: a.clone(),
            total: a.clone(),
            embedding: Mat::identity(a.field(), a.dim()),
        }
    }

    pub fn base(&self) -> &Arc<Algebra> {
        &self.base
    }

    pub fn total(&self) -> &Arc<Algebra> {
        &self.total
    }

    pub fn embedding(&self) -> &Mat {
        &self.embedding
    }

    /// Image of a base element in the total algebra.
    pub fn image(&self, r: &Mat) -> Mat {
        &self.embedding * r
    }

    /// The total algebra as a bimodule over itself on the left and the base on the right.
    pub fn total_as_bimodule(&self) -> Bimodule {
        let s = &self.total;
        let left = s.left_all().to_vec();
        let right = (0..self.base.dim())
            .map(|i| s.right_mult(&self.embedding.column(i)))
            .collect();
        Bimodule::new_trusted(s.clone(), self.base.clone(), left, right)
    }
}

/// A left `left`-, right `right`-bimodule given by action matrices; the right
/// action matrix of `r` sends `m` to `m r`.
#[derive(Clone, Debug)]
pub struct Bimodule {
    left: Arc<Algebra>,
    right: Arc<Algebra>,
    dim: usize,
    left_action: Vec<Mat>,
    right_action: Vec<Mat>,
}

impl Bimodule {
    pub fn new(left: Arc<Algebra>, right: Arc<Algebra>, left_action: Vec<Mat>, right_action: Vec<Mat>) -> Result<Self> {
        if left.field() != right.field() {
            return Err(Error::InvalidField("bimodule over different fields".into()));
        }
        let b = Bimodule::assemble(left, right, left_action, right_action)?;
        b.left_module_checked()?;
        b.right_module_checked()?;
        for &g in b.left.generators() {
            for &h in b.right.generators() {
                if &b.left_action[g] * &b.right_action[h] != &b.right_action[h] * &b.left_action[g] {
                    return Err(Error::InvalidModule(format!(
                        "left action of {} and right action of {} do not commute",
                        b.left.label_of(g),
                        b.right.label_of(h)
                    )));
                }
            }
        }
        Ok(b)
    }

    pub(crate) fn new_trusted(
        left: Arc<Algebra>,
        right: Arc<Algebra>,
        left_action: Vec<Mat>,
        right_action: Vec<Mat>,
    ) -> Self {
        let b = Bimodule::assemble(left, right, left_action, right_action).expect("bimodule shapes");
        debug_assert!(b.left_module_checked().is_ok() && b.right_module_checked().is_ok());
        b
    }

    fn assemble(
        left: Arc<Algebra>,
        right: Arc<Algebra>,
        left_action: Vec<Mat>,
        right_action: Vec<Mat>,
    ) -> Result<Self> {
        let dim = left_action.first().map_or(0, Mat::rows);
        if left_action.len() != left.dim() || right_action.len() != right.dim() {
            return Err(Error::InvalidModule(
                "one action matrix per basis element is required".into(),
            ));
        }
        if left_action
            .iter()
            .chain(&right_action)
            .any(|m| m.rows() != dim || m.cols() != dim)
        {
            return Err(Error::InvalidModule(
                "action matrices must be square of one size".into(),
            ));
        }
        Ok(Bimodule {
            left,
            right,
            dim,
            left_action,
            right_action,
        })
    }

    fn left_module_checked(&self) -> Result<Module> {
        Module::new(self.left.clone(), self.left_action.clone())
    }

    fn right_module_checked(&self) -> Result<Module> {
        Module::new(self.right.opposite(), self.right_action.clone())
    }

    pub fn left_algebra(&self) -> &Arc<Algebra> {
        &self.left
    }

    pub fn right_algebra(&self) -> &Arc<Algebra> {
        &self.right
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn left_action(&self) -> &[Mat] {
        &self.left_action
    }

    pub fn right_action(&self) -> &[Mat] {
        &self.right_action
    }

    /// The underlying left module.
    pub fn as_left_module(&self) -> Module {
        Module::new_trusted(self.left.clone(), self.left_action.clone())
    }

    /// The underlying right module, as a left module over the opposite algebra.
    pub fn as_right_module(&self) -> Module {
        Module::new_trusted(self.right.opposite(), self.right_action.clone())
    }

    /// A left module over `tensor(left, right^op)`, which must be `enveloping`.
    pub fn as_enveloping_module(&self, enveloping: &Arc<Algebra>) -> Module {
        let action = self
            .left_action
            .iter()
            .flat_map(|l| self.right_action.iter().map(move |r| l * r))
            .collect();
        Module::new_trusted(enveloping.clone(), action)
    }

    pub fn enveloping_algebra(&self) -> Result<Arc<Algebra>> {
        tensor(&self.left, &self.right.opposite())
    }

    /// Right action of an arbitrary element of the right algebra.
    pub fn right_act(&self, r: &Mat) -> Mat {
        let coeffs: Vec<_> = (0..self.right.dim()).map(|i| r.get(i, 0)).collect();
        let refs: Vec<&Mat> = self.right_action.iter().collect();
        Mat::linear_combination(self.left.field(), self.dim, self.dim, &coeffs, &refs)
    }
}

/// The column bimodule `R^n` over `M_n(R)` on the left and `R` on the right.
pub fn column_bimodule(r: &Arc<Algebra>, matrix: &Arc<Algebra>, n: usize) -> Result<Bimodule> {
    let field = r.field();
    let d = r.dim();
    if matrix.dim() != n * n * d {
        return Err(Error::InvalidAlgebra("not a matrix algebra of the given size".into()));
    }
    let mut left = Vec::with_capacity(n * n * d);
    for p in 0..n {
        for q in 0..n {
            let mut e = Mat::zeros(field, n, n);
            e.set(p, q, &field.one());
            for i in 0..d {
                left.push(e.kron(r.left(i)));
            }
        }
    }
    let right = (0..d)
        .map(|i| Mat::identity(field, n).kron(&r.right_mult(&r.basis_vector(i))))
        .collect();
    Bimodule::new(matrix.clone(), r.clone(), left, right)
}

#[cfg(test)]
mod tests;
