use crate::error::{Error, Result};
use crate::exactlin::Mat;
use crate::modrep::{cover, hom_factorization, hom_space, ModHom, Module, ProjModule};

use super::Dim;

/// A minimal projective resolution `... -> P_1 -> P_0 -> M -> 0`, truncated.
#[derive(Clone, Debug)]
pub struct ProjResolution {
    pub module: Module,
    pub terms: Vec<ProjModule>,
    pub augmentation: ModHom,
    /// `differentials[k]` maps `P_{k+1}` to `P_k`.
    pub differentials: Vec<ModHom>,
    /// `syzygies[k]` is the inclusion of the kernel of `P_k -> P_{k-1}` (or of the augmentation).
    pub syzygies: Vec<ModHom>,
    /// Whether some syzygy vanished, so that the resolution is finite.
    pub complete: bool,
}

impl ProjResolution {
    /// The n-th syzygy; the 0-th is the module itself.
    pub fn syzygy(&self, n: usize) -> Option<&Module> {
        match n {
            0 => Some(&self.module),
            _ => self.syzygies.get(n - 1).map(|h| h.source()),
        }
    }

    pub fn term(&self, k: usize) -> Option<&ProjModule> {
        self.terms.get(k)
    }

    /// The map `P_k -> P_{k-1}` for `k >= 1`.
    pub fn differential(&self, k: usize) -> Option<&ModHom> {
        k.checked_sub(1).and_then(|i| self.differentials.get(i))
    }

    /// Length of a complete resolution.
    pub fn length(&self) -> Option<usize> {
        self.complete.then(|| self.terms.len().saturating_sub(1))
    }

    fn verify(&self) -> Result<()> {
        let bad = |k: usize| Error::violation("resolution-exactness", format!("not exact at P_{k}"));
        if !self.augmentation.is_surjective() {
            return Err(bad(0));
        }
        let mut prev_rank = self.augmentation.rank();
        for (k, d) in self.differentials.iter().enumerate() {
            let before = if k == 0 {
                &self.augmentation
            } else {
                &self.differentials[k - 1]
            };
            if !(before.matrix() * d.matrix()).is_zero() || d.rank() + prev_rank != self.terms[k].module.dim() {
                return Err(bad(k));
            }
            prev_rank = d.rank();
        }
        Ok(())
    }
}

/// Computes `P_0, ..., P_depth` and the syzygy after `P_depth`.
pub fn resolve_projective(m: &Module, depth: usize) -> Result<ProjResolution> {
    let (p0, aug) = cover(m)?;
    let mut terms = vec![p0];
    let mut differentials = Vec::new();
    let mut syzygies = Vec::new();
    let mut last = aug.clone();
    let mut complete = false;
    loop {
        let f = hom_factorization(&last);
        let incl = f.kernel_inclusion;
        syzygies.push(incl.clone());
        if incl.source().is_zero() {
            complete = true;
            break;
        }
        if terms.len() > depth {
            break;
        }
        let (p, pi) = cover(incl.source())?;
        let d = incl.compose(&pi);
        terms.push(p);
        differentials.push(d.clone());
        last = d;
    }
    let res = ProjResolution {
        module: m.clone(),
        terms,
        augmentation: aug,
        differentials,
        syzygies,
        complete,
    };
    res.verify()?;
    Ok(res)
}

/// A minimal injective coresolution `0 -> M -> I^0 -> I^1 -> ...`, truncated.
#[derive(Clone, Debug)]
pub struct InjResolution {
    pub module: Module,
    pub terms: Vec<Module>,
    pub coaugmentation: ModHom,
    /// `differentials[k]` maps `I^k` to `I^{k+1}`.
    pub differentials: Vec<ModHom>,
    pub complete: bool,
}

impl InjResolution {
    pub fn length(&self) -> Option<usize> {
        self.complete.then(|| self.terms.len().saturating_sub(1))
    }
}

/// Dual of the projective resolution of `D(M)` over the opposite algebra.
pub fn resolve_injective(m: &Module, depth: usize) -> Result<InjResolution> {
    let r = resolve_projective(&m.dual(), depth)?;
    let terms: Vec<Module> = r.terms.iter().map(|p| p.module.dual()).collect();
    let coaugmentation = ModHom::new_trusted(m.clone(), terms[0].clone(), r.augmentation.matrix().transpose());
    let differentials = r
        .differentials
        .iter()
        .enumerate()
        .map(|(k, d)| ModHom::new_trusted(terms[k].clone(), terms[k + 1].clone(), d.matrix().transpose()))
        .collect();
    Ok(InjResolution {
        module: m.clone(),
        terms,
        coaugmentation,
        differentials,
        complete: r.complete,
    })
}

/// pd(M): the least n whose syzygy is projective, searched for n < bound.
pub fn pd(m: &Module, bound: usize) -> Result<Dim> {
    if m.is_zero() {
        return Ok(Dim::Finite(0));
    }
    let r = resolve_projective(m, bound.saturating_sub(1))?;
    Ok(match r.length() {
        Some(n) if n < bound => Dim::Finite(n),
        _ => Dim::AtLeast(bound),
    })
}

/// id(M) as pd of the dual over the opposite algebra.
pub fn id(m: &Module, bound: usize) -> Result<Dim> {
    pd(&m.dual(), bound)
}

fn rank_of(cols: Vec<Mat>, rows: usize, field: crate::exactlin::FieldSpec) -> usize {
    if cols.is_empty() {
        return 0;
    }
    Mat::hstack(field, rows, &cols.iter().collect::<Vec<_>>()).rank()
}

/// dim Ext^i(M, N) for i = 0..=max_i, from a projective resolution of M.
pub fn ext_dims(m: &Module, n: &Module, max_i: usize) -> Result<Vec<usize>> {
    if !m.same_algebra(n) {
        return Err(Error::AlgebraMismatch);
    }
    let r = resolve_projective(m, max_i + 1)?;
    let field = m.field();
    let h: Vec<usize> = (0..=max_i + 1)
        .map(|j| r.term(j).map_or(0, |p| p.hom_basis(n).len()))
        .collect();
    // rk[j] = rank of Hom(P_{j-1}, N) -> Hom(P_j, N), evaluated on the generators of P_j.
    let mut rk = vec![0usize; max_i + 2];
    for (j, slot) in rk.iter_mut().enumerate().skip(1) {
        let (Some(d), Some(p), Some(prev)) = (r.differential(j), r.term(j), r.term(j - 1)) else {
            continue;
        };
        let gens: Vec<Mat> = (0..p.rank()).map(|s| d.matrix() * &p.generator(s)).collect();
        let cols: Vec<Mat> = prev
            .hom_basis(n)
            .iter()
            .map(|f| {
                let vals: Vec<Mat> = gens.iter().map(|g| f.matrix() * g).collect();
                Mat::vstack(field, 1, &vals.iter().collect::<Vec<_>>())
            })
            .collect();
        *slot = rank_of(cols, n.dim() * p.rank(), field);
    }
    Ok((0..=max_i).map(|i| h[i] - rk[i + 1] - rk[i]).collect())
}

/// dim Ext^i(M, N) for i = 0..=max_i, from an injective coresolution of N.
pub fn ext_dims_injective(m: &Module, n: &Module, max_i: usize) -> Result<Vec<usize>> {
    if !m.same_algebra(n) {
        return Err(Error::AlgebraMismatch);
    }
    let r = resolve_injective(n, max_i + 1)?;
    let field = m.field();
    let homs: Vec<Vec<ModHom>> = (0..=max_i + 1)
        .map(|j| r.terms.get(j).map_or(Ok(Vec::new()), |t| hom_space(m, t)))
        .collect::<Result<_>>()?;
    let mut rk = vec![0usize; max_i + 2];
    for (j, slot) in rk.iter_mut().enumerate().skip(1) {
        let (Some(d), Some(t)) = (r.differentials.get(j - 1), r.terms.get(j)) else {
            continue;
        };
        let cols = homs[j - 1].iter().map(|f| d.compose(f).matrix().vectorize()).collect();
        *slot = rank_of(cols, t.dim() * m.dim(), field);
    }
    Ok((0..=max_i).map(|i| homs[i].len() - rk[i + 1] - rk[i]).collect())
}

pub fn ext_dim(m: &Module, n: &Module, i: usize) -> Result<usize> {
    Ok(ext_dims(m, n, i)?[i])
}
