use std::sync::Arc;

use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactlin::Mat;
use crate::modrep::{cover, hom_space, structural_modules, ModHom, Module, ProjModule};

use super::{ext_dims, id, pd, resolve_projective, Dim};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GorensteinProfile {
    /// Supremum of pd over the indecomposable injectives.
    pub spdi: Dim,
    /// Supremum of id over the indecomposable projectives.
    pub sidp: Dim,
    pub bound: usize,
}

impl GorensteinProfile {
    /// The common finite value of spdi and sidp.
    pub fn gorenstein_dim(&self) -> Option<usize> {
        match (self.spdi, self.sidp) {
            (Dim::Finite(a), Dim::Finite(b)) if a == b => Some(a),
            _ => None,
        }
    }

    /// The profile of the opposite algebra.
    pub fn opposite(&self) -> GorensteinProfile {
        GorensteinProfile {
            spdi: self.sidp,
            sidp: self.spdi,
            bound: self.bound,
        }
    }
}

pub fn gorenstein_profile(a: &Arc<Algebra>, bound: usize) -> Result<GorensteinProfile> {
    if bound == 0 {
        return Err(Error::InputShape("bound must be at least 1".into()));
    }
    let s = structural_modules(a)?;
    let mut spdi = Dim::Finite(0);
    let mut sidp = Dim::Finite(0);
    for c in &s.classes {
        spdi = spdi.max(pd(&c.injective, bound)?);
        sidp = sidp.max(id(&c.projective, bound)?);
    }
    if let (Dim::Finite(x), Dim::Finite(y)) = (spdi, sidp) {
        if x != y {
            return Err(Error::violation(
                "spdi-equals-sidp",
                format!("spdi = {x} but sidp = {y}"),
            ));
        }
    }
    Ok(GorensteinProfile { spdi, sidp, bound })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GpVerdict {
    Yes,
    /// Ext^degree(M, A) is nonzero.
    No {
        degree: usize,
    },
    /// Ext^i(M, A) vanishes for 1 <= i <= depth but the algebra is not certified Gorenstein.
    UnknownAtDepth(usize),
}

impl GpVerdict {
    pub fn is_yes(self) -> bool {
        self == GpVerdict::Yes
    }
}

pub fn is_gorenstein_projective(m: &Module, profile: &GorensteinProfile) -> Result<GpVerdict> {
    let a = m.algebra();
    let regular = Module::regular(a);
    let (depth, certified) = match profile.gorenstein_dim() {
        Some(d) => (d, true),
        None => (profile.bound, false),
    };
    let ext = ext_dims(m, &regular, depth)?;
    if let Some(i) = (1..=depth).find(|&i| ext[i] != 0) {
        return Ok(GpVerdict::No { degree: i });
    }
    if !certified {
        return Ok(GpVerdict::UnknownAtDepth(depth));
    }
    complete_resolution_check(m, depth.max(1))?;
    Ok(GpVerdict::Yes)
}

/// Minimal left add(A)-approximation `M -> Q` built from generators of
/// Hom(M, A) as a right module.
fn left_approximation(m: &Module) -> Result<(ProjModule, ModHom)> {
    let a = m.algebra();
    let field = m.field();
    let regular = Module::regular(a);
    let basis = hom_space(m, &regular)?;
    let n = a.dim() * m.dim();
    let op = a.opposite();
    if basis.is_empty() {
        let q = ProjModule::zero(a)?;
        let z = ModHom::zero(m, &q.module);
        return Ok((q, z));
    }
    let vecs: Vec<Mat> = basis.iter().map(|f| f.matrix().vectorize()).collect();
    let b = Mat::hstack(field, n, &vecs.iter().collect::<Vec<_>>());
    let linv = b.left_inverse().expect("hom basis is independent");
    // Right multiplication by a_i acts on Hom(M, A) by postcomposition.
    let action: Vec<Mat> = (0..a.dim())
        .map(|i| {
            let r = a.right_mult(&a.basis_vector(i));
            let cols: Vec<Mat> = basis.iter().map(|f| &linv * &(&r * f.matrix()).vectorize()).collect();
            Mat::hstack(field, basis.len(), &cols.iter().collect::<Vec<_>>())
        })
        .collect();
    let h = Module::new_trusted(op.clone(), action);
    let (p_op, pi) = cover(&h)?;
    let s = structural_modules(a)?;
    let mut q_classes = Vec::new();
    let mut blocks = Vec::new();
    for t in 0..p_op.rank() {
        let class = p_op.summands[t].class;
        let g = pi.matrix() * &p_op.generator(t);
        let f = Mat::unvectorize(&(&b * &g), a.dim(), m.dim());
        let info = &s.classes[class];
        let pb = a.right_mult(&info.idempotent).select_cols(&info.projective_indices);
        let coords = pb.left_inverse().expect("independent basis");
        debug_assert!(pb.spans(&f));
        q_classes.push(class);
        blocks.push(&coords * &f);
    }
    let q = ProjModule::from_classes(a, &q_classes)?;
    let matrix = Mat::vstack(field, m.dim(), &blocks.iter().collect::<Vec<_>>());
    let map = ModHom::new_trusted(m.clone(), q.module.clone(), matrix);
    Ok((q, map))
}

/// Splices a projective resolution of M with `steps` successive left
/// add(A)-approximations and checks the window is exact and stays exact
/// under Hom(-, A).
pub fn complete_resolution_check(m: &Module, steps: usize) -> Result<()> {
    let a = m.algebra();
    let regular = Module::regular(a);
    let ext = ext_dims(m, &regular, steps)?;
    if let Some(i) = (1..=steps).find(|&i| ext[i] != 0) {
        return Err(Error::violation(
            "complete-resolution-window",
            format!("Ext^{i}(M, A) is nonzero on the resolution side"),
        ));
    }
    let mut cur = m.clone();
    for step in 0..steps {
        let (q, f) = left_approximation(&cur)?;
        if !f.is_injective() {
            return Err(Error::violation(
                "complete-resolution-window",
                format!("approximation {step} is not injective"),
            ));
        }
        let h_cur = hom_space(&cur, &regular)?.len();
        let restricted: Vec<Mat> = q
            .hom_basis(&regular)
            .iter()
            .map(|g| (g.matrix() * f.matrix()).vectorize())
            .collect();
        let r = if restricted.is_empty() {
            0
        } else {
            Mat::hstack(m.field(), a.dim() * cur.dim(), &restricted.iter().collect::<Vec<_>>()).rank()
        };
        if r != h_cur {
            return Err(Error::violation(
                "complete-resolution-window",
                format!("Hom(-, A) is not exact at step {step}"),
            ));
        }
        let (_, proj, _) = q.module.quotient(f.matrix())?;
        cur = proj.target().clone();
    }
    Ok(())
}

/// Gpd(M) for a certified Gorenstein algebra, via syzygies and cross-checked
/// against the top nonvanishing Ext^i(M, A).
pub fn gpd(m: &Module, profile: &GorensteinProfile) -> Result<Option<usize>> {
    let Some(d) = profile.gorenstein_dim() else {
        return Ok(None);
    };
    let regular = Module::regular(m.algebra());
    let ext = ext_dims(m, &regular, d)?;
    let support = (1..=d).rev().find(|&i| ext[i] != 0).unwrap_or(0);
    let res = resolve_projective(m, d)?;
    let mut by_syzygy = None;
    for n in 0..=d {
        let omega = match res.syzygy(n) {
            Some(x) => x.clone(),
            None => Module::zero(m.algebra()),
        };
        let e = ext_dims(&omega, &regular, d)?;
        if (1..=d).all(|i| e[i] == 0) {
            by_syzygy = Some(n);
            break;
        }
    }
    let Some(g) = by_syzygy else {
        return Err(Error::violation(
            "gpd-bounded-by-gorenstein-dimension",
            format!("no syzygy up to {d} is Gorenstein projective"),
        ));
    };
    if g != support {
        return Err(Error::violation(
            "gpd-equals-ext-support",
            format!("syzygy test gives {g}, Ext support gives {support}"),
        ));
    }
    Ok(Some(g))
}

/// Gid(M) as Gpd of the dual over the opposite algebra.
pub fn gid(m: &Module, profile: &GorensteinProfile) -> Result<Option<usize>> {
    gpd(&m.dual(), &profile.opposite())
}
