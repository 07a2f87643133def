//! Finite-dimensional left modules given by full action matrices.

mod hom;
mod iso;
mod structural;

use std::fmt;
use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, Mat, Scalar};

pub use hom::{hom_dim, hom_factorization, hom_space, HomFactorization};
pub use iso::{is_isomorphic, IsoVerdict};
pub use structural::{
    cover, envelope, is_projective, simple_multiplicities, stable_hom_dim, structural_modules, ClassInfo, ProjModule,
    Structural, Summand,
};

/// A left module: `action[i]` is the matrix of basis element `e_i`.
#[derive(Clone)]
pub struct Module {
    algebra: Arc<Algebra>,
    dim: usize,
    action: Arc<[Mat]>,
}

impl Module {
    /// Checks shapes, the unit law and compatibility with the structure constants.
    pub fn new(algebra: Arc<Algebra>, action: Vec<Mat>) -> Result<Self> {
        let m = Module::assemble(algebra, action)?;
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn new_trusted(algebra: Arc<Algebra>, action: Vec<Mat>) -> Self {
        let m = Module::assemble(algebra, action).expect("consistent module shapes");
        #[cfg(debug_assertions)]
        m.validate().expect("constructed module is valid");
        m
    }

    fn assemble(algebra: Arc<Algebra>, action: Vec<Mat>) -> Result<Self> {
        if action.len() != algebra.dim() {
            return Err(Error::InvalidModule(format!(
                "{} action matrices for an algebra of dimension {}",
                action.len(),
                algebra.dim()
            )));
        }
        let dim = action.first().map(|m| m.rows()).unwrap_or(0);
        if action
            .iter()
            .any(|m| m.rows() != dim || m.cols() != dim || m.field() != algebra.field())
        {
            return Err(Error::InvalidModule(
                "action matrices must be square of one size".into(),
            ));
        }
        Ok(Module {
            algebra,
            dim,
            action: action.into(),
        })
    }

    fn validate(&self) -> Result<()> {
        let a = &self.algebra;
        if !self.act(a.unit()).is_identity() {
            return Err(Error::InvalidModule("the unit does not act as the identity".into()));
        }
        for &g in a.generators() {
            for j in 0..a.dim() {
                let lhs = &self.action[g] * &self.action[j];
                let rhs = self.act(&a.product_of_basis(g, j));
                if lhs != rhs {
                    return Err(Error::InvalidModule(format!(
                        "action of {} * {} is not the product of the actions",
                        a.label_of(g),
                        a.label_of(j)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    pub fn action(&self, i: usize) -> &Mat {
        &self.action[i]
    }

    pub fn actions(&self) -> &[Mat] {
        &self.action
    }

    /// Action of an arbitrary algebra element.
    pub fn act(&self, x: &Mat) -> Mat {
        let coeffs: Vec<Scalar> = (0..self.algebra.dim()).map(|i| x.get(i, 0)).collect();
        let refs: Vec<&Mat> = self.action.iter().collect();
        Mat::linear_combination(self.field(), self.dim, self.dim, &coeffs, &refs)
    }

    pub fn same_algebra(&self, other: &Module) -> bool {
        self.algebra.same_as(&other.algebra)
    }

    pub fn zero(algebra: &Arc<Algebra>) -> Module {
        let f = algebra.field();
        Module::new_trusted(algebra.clone(), vec![Mat::zeros(f, 0, 0); algebra.dim()])
    }

    /// The algebra acting on itself by left multiplication.
    pub fn regular(algebra: &Arc<Algebra>) -> Module {
        Module::new_trusted(algebra.clone(), algebra.left_all().to_vec())
    }

    pub fn free(algebra: &Arc<Algebra>, rank: usize) -> Module {
        let r = Module::regular(algebra);
        direct_sum(algebra, &vec![&r; rank]).module
    }

    /// Restriction of the action to an invariant subspace with basis `basis`.
    pub fn submodule(&self, basis: &Mat) -> Result<(Module, ModHom)> {
        let basis = basis.column_space();
        let linv = basis
            .left_inverse()
            .ok_or_else(|| Error::InvalidModule("degenerate subspace basis".into()))?;
        let mut action = Vec::with_capacity(self.action.len());
        for m in self.action.iter() {
            let img = m * &basis;
            if !basis.spans(&img) {
                return Err(Error::InvalidModule("subspace is not invariant".into()));
            }
            action.push(&linv * &img);
        }
        let sub = Module::new_trusted(self.algebra.clone(), action);
        let incl = ModHom::new_trusted(sub.clone(), self.clone(), basis);
        Ok((sub, incl))
    }

    /// Quotient by an invariant subspace; also returns a linear section of the projection.
    pub fn quotient(&self, sub: &Mat) -> Result<(Module, ModHom, Mat)> {
        let field = self.field();
        let sub = sub.column_space();
        for m in self.action.iter() {
            if !sub.spans(&(m * &sub)) {
                return Err(Error::InvalidModule("subspace is not invariant".into()));
            }
        }
        let comp = sub.complement_basis();
        let k = comp.cols();
        let t = Mat::hstack(field, self.dim, &[&sub, &comp]);
        let tinv = t.inverse().expect("complement completes a basis");
        let proj = tinv.submatrix(sub.cols(), k, 0, self.dim);
        let action = self.action.iter().map(|m| &(&proj * m) * &comp).collect();
        let q = Module::new_trusted(self.algebra.clone(), action);
        let p = ModHom::new_trusted(self.clone(), q.clone(), proj);
        Ok((q, p, comp))
    }

    /// The dual space as a left module over the opposite algebra.
    pub fn dual(&self) -> Module {
        let op = self.algebra.opposite();
        let action = self.action.iter().map(Mat::transpose).collect();
        Module::new_trusted(op, action)
    }

    /// Basis of the submodule generated by the columns of `vs`.
    pub fn generated_by(&self, vs: &Mat) -> Mat {
        let parts: Vec<Mat> = self.action.iter().map(|m| m * vs).collect();
        Mat::hstack(self.field(), self.dim, &parts.iter().collect::<Vec<_>>()).column_space()
    }

    /// Basis of rad(A) M.
    pub fn radical_basis(&self) -> Mat {
        self.span_under_radical(&Mat::identity(self.field(), self.dim))
    }

    fn span_under_radical(&self, space: &Mat) -> Mat {
        let rad = self.algebra.radical();
        let parts: Vec<Mat> = (0..rad.cols()).map(|k| &self.act(&rad.column(k)) * space).collect();
        Mat::hstack(self.field(), self.dim, &parts.iter().collect::<Vec<_>>()).column_space()
    }

    /// Vectors killed by the radical.
    pub fn socle_basis(&self) -> Mat {
        let rad = self.algebra.radical();
        let parts: Vec<Mat> = (0..rad.cols()).map(|k| self.act(&rad.column(k))).collect();
        if parts.is_empty() {
            return Mat::identity(self.field(), self.dim);
        }
        Mat::vstack(self.field(), self.dim, &parts.iter().collect::<Vec<_>>()).kernel()
    }

    pub fn top(&self) -> (Module, ModHom) {
        let (q, p, _) = self.quotient(&self.radical_basis()).expect("radical is invariant");
        (q, p)
    }

    pub fn socle(&self) -> (Module, ModHom) {
        self.submodule(&self.socle_basis()).expect("socle is invariant")
    }

    /// Dimensions of M, rad M, rad^2 M, ... down to 0.
    pub fn radical_series_dims(&self) -> Vec<usize> {
        let mut dims = vec![self.dim];
        let mut cur = Mat::identity(self.field(), self.dim);
        while cur.cols() > 0 {
            let next = self.span_under_radical(&cur);
            if next.cols() == cur.cols() {
                break;
            }
            dims.push(next.cols());
            cur = next;
        }
        dims
    }

    /// Dimensions of soc M, soc^2 M, ... up to M.
    pub fn socle_series_dims(&self) -> Vec<usize> {
        let mut dims = Vec::new();
        let mut m = self.clone();
        let mut acc = 0;
        while m.dim > 0 {
            let s = m.socle_basis();
            if s.cols() == 0 {
                break;
            }
            acc += s.cols();
            dims.push(acc);
            m = m.quotient(&s).expect("socle is invariant").0;
        }
        dims
    }
}

impl PartialEq for Module {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.same_algebra(other) && self.action == other.action
    }
}

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Module(dim {} over {:?})", self.dim, self.algebra)
    }
}

/// A module homomorphism; `matrix` is `dim target x dim source`.
#[derive(Clone, PartialEq)]
pub struct ModHom {
    source: Module,
    target: Module,
    matrix: Mat,
}

impl ModHom {
    pub fn new(source: Module, target: Module, matrix: Mat) -> Result<Self> {
        if !source.same_algebra(&target) {
            return Err(Error::AlgebraMismatch);
        }
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::InvalidHom(format!(
                "matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.dim(),
                source.dim()
            )));
        }
        let h = ModHom { source, target, matrix };
        if !h.intertwines() {
            return Err(Error::InvalidHom("matrix does not commute with the action".into()));
        }
        Ok(h)
    }

    pub(crate) fn new_trusted(source: Module, target: Module, matrix: Mat) -> Self {
        debug_assert_eq!((matrix.rows(), matrix.cols()), (target.dim(), source.dim()));
        let h = ModHom { source, target, matrix };
        debug_assert!(h.intertwines(), "constructed map is not a module homomorphism");
        h
    }

    pub fn intertwines(&self) -> bool {
        let a = self.source.algebra();
        a.generators()
            .iter()
            .all(|&g| &self.matrix * self.source.action(g) == self.target.action(g) * &self.matrix)
    }

    pub fn source(&self) -> &Module {
        &self.source
    }

    pub fn target(&self) -> &Module {
        &self.target
    }

    pub fn matrix(&self) -> &Mat {
        &self.matrix
    }

    pub fn identity(m: &Module) -> ModHom {
        ModHom::new_trusted(m.clone(), m.clone(), Mat::identity(m.field(), m.dim()))
    }

    pub fn zero(source: &Module, target: &Module) -> ModHom {
        ModHom::new_trusted(
            source.clone(),
            target.clone(),
            Mat::zeros(source.field(), target.dim(), source.dim()),
        )
    }

    /// `self` after `first`.
    pub fn compose(&self, first: &ModHom) -> ModHom {
        assert_eq!(first.target.dim(), self.source.dim(), "composable maps");
        ModHom::new_trusted(first.source.clone(), self.target.clone(), &self.matrix * &first.matrix)
    }

    pub fn add(&self, other: &ModHom) -> ModHom {
        ModHom::new_trusted(self.source.clone(), self.target.clone(), &self.matrix + &other.matrix)
    }

    pub fn sub(&self, other: &ModHom) -> ModHom {
        ModHom::new_trusted(self.source.clone(), self.target.clone(), &self.matrix - &other.matrix)
    }

    pub fn scale(&self, s: &Scalar) -> ModHom {
        ModHom::new_trusted(self.source.clone(), self.target.clone(), self.matrix.scale(s))
    }

    pub fn neg(&self) -> ModHom {
        ModHom::new_trusted(self.source.clone(), self.target.clone(), -&self.matrix)
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.source.dim() == self.target.dim() && self.is_injective()
    }

    /// The transpose, a map between the duals.
    pub fn dual(&self) -> ModHom {
        ModHom::new_trusted(self.target.dual(), self.source.dual(), self.matrix.transpose())
    }
}

impl fmt::Debug for ModHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ModHom({} -> {}) {:?}",
            self.source.dim(),
            self.target.dim(),
            self.matrix
        )
    }
}

/// A direct sum with its structure maps.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub module: Module,
    pub injections: Vec<ModHom>,
    pub projections: Vec<ModHom>,
}

pub fn direct_sum(algebra: &Arc<Algebra>, parts: &[&Module]) -> DirectSum {
    let field = algebra.field();
    let total: usize = parts.iter().map(|m| m.dim()).sum();
    let action = (0..algebra.dim())
        .map(|i| Mat::block_diag(field, &parts.iter().map(|m| m.action(i)).collect::<Vec<_>>()))
        .collect();
    let module = Module::new_trusted(algebra.clone(), action);
    let mut injections = Vec::new();
    let mut projections = Vec::new();
    let mut off = 0;
    for m in parts {
        let mut inj = Mat::zeros(field, total, m.dim());
        inj.set_block(off, 0, &Mat::identity(field, m.dim()));
        projections.push(ModHom::new_trusted(module.clone(), (*m).clone(), inj.transpose()));
        injections.push(ModHom::new_trusted((*m).clone(), module.clone(), inj));
        off += m.dim();
    }
    DirectSum {
        module,
        injections,
        projections,
    }
}

/// Checks `0 -> a -f-> b -g-> c -> 0` is exact.
pub fn is_short_exact(f: &ModHom, g: &ModHom) -> bool {
    let b = f.target().dim();
    g.source().dim() == b
        && (g.matrix() * f.matrix()).is_zero()
        && f.is_injective()
        && g.is_surjective()
        && f.rank() + g.rank() == b
}

#[cfg(test)]
mod tests;
