use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactlin::Mat;
use crate::modrep::{ModHom, Module};

/// A bounded cochain complex supported on `lo..lo + components.len()`.
#[derive(Clone, Debug)]
pub struct Complex {
    algebra: Arc<Algebra>,
    lo: i64,
    components: Vec<Module>,
    /// `differentials[k]` maps degree `lo + k` to `lo + k + 1`.
    differentials: Vec<Mat>,
}

impl Complex {
    pub fn new(algebra: &Arc<Algebra>, lo: i64, components: Vec<Module>, differentials: Vec<Mat>) -> Result<Self> {
        if differentials.len() + 1 != components.len().max(1) {
            return Err(Error::InputShape(format!(
                "{} components need {} differentials, got {}",
                components.len(),
                components.len().saturating_sub(1),
                differentials.len()
            )));
        }
        for (k, d) in differentials.iter().enumerate() {
            let h = ModHom::new(components[k].clone(), components[k + 1].clone(), d.clone())?;
            if k > 0 && !(d * &differentials[k - 1]).is_zero() {
                return Err(Error::violation(
                    "differential-squares-to-zero",
                    format!("at degree {}", lo + k as i64),
                ));
            }
            debug_assert!(h.intertwines());
        }
        if components.iter().any(|c| !c.algebra().same_as(algebra)) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(Complex {
            algebra: algebra.clone(),
            lo,
            components,
            differentials,
        })
    }

    pub fn zero(algebra: &Arc<Algebra>) -> Self {
        Complex {
            algebra: algebra.clone(),
            lo: 0,
            components: Vec::new(),
            differentials: Vec::new(),
        }
    }

    /// The complex with `m` in degree `n` and zero elsewhere.
    pub fn stalk(m: &Module, n: i64) -> Self {
        Complex {
            algebra: m.algebra().clone(),
            lo: n,
            components: vec![m.clone()],
            differentials: Vec::new(),
        }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    /// Inclusive support bounds; empty complexes report `(lo, lo - 1)`.
    pub fn support(&self) -> (i64, i64) {
        (self.lo, self.lo + self.components.len() as i64 - 1)
    }

    pub fn components(&self) -> &[Module] {
        &self.components
    }

    pub fn differentials(&self) -> &[Mat] {
        &self.differentials
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Module::is_zero)
    }

    pub fn component(&self, n: i64) -> Module {
        let k = n - self.lo;
        if k >= 0 && (k as usize) < self.components.len() {
            self.components[k as usize].clone()
        } else {
            Module::zero(&self.algebra)
        }
    }

    /// The differential leaving degree `n`.
    pub fn differential(&self, n: i64) -> Mat {
        let k = n - self.lo;
        if k >= 0 && (k as usize) < self.differentials.len() {
            self.differentials[k as usize].clone()
        } else {
            let f = self.algebra.field();
            Mat::zeros(f, self.component(n + 1).dim(), self.component(n).dim())
        }
    }

    pub fn differential_hom(&self, n: i64) -> ModHom {
        ModHom::new_trusted(self.component(n), self.component(n + 1), self.differential(n))
    }

    pub fn cohomology_dim(&self, n: i64) -> usize {
        let out = self.differential(n).rank();
        let inc = self.differential(n - 1).rank();
        self.component(n).dim() - out - inc
    }

    /// H^n as a module, the cycles modulo the boundaries.
    pub fn cohomology(&self, n: i64) -> Result<Module> {
        let x = self.component(n);
        let (z, incl) = x.submodule(&self.differential(n).kernel())?;
        let b = self.differential(n - 1).column_space();
        let linv = incl.matrix().left_inverse().expect("independent basis");
        Ok(z.quotient(&(&linv * &b))?.0)
    }

    /// Same components one degree lower, differentials negated.
    pub fn shift(&self) -> Complex {
        Complex {
            algebra: self.algebra.clone(),
            lo: self.lo - 1,
            components: self.components.clone(),
            differentials: self.differentials.iter().map(|d| -d).collect(),
        }
    }
}
