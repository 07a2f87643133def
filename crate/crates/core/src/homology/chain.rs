use crate::error::{Error, Result};
use crate::exactlin::Mat;
use crate::modrep::{ModHom, ProjModule};

use super::ProjResolution;

fn zero_map(p: &ProjModule, q: Option<&ProjModule>) -> Mat {
    let rows = q.map_or(0, |q| q.module.dim());
    Mat::zeros(p.module.field(), rows, p.module.dim())
}

/// Maps `f_k: P_k -> Q_k` over `f: M -> N`, for every computed term of `source`.
pub fn lift_chain_map(f: &ModHom, source: &ProjResolution, target: &ProjResolution) -> Result<Vec<Mat>> {
    if f.source().dim() != source.module.dim() || f.target().dim() != target.module.dim() {
        return Err(Error::LiftFailed("map does not connect the resolved modules".into()));
    }
    let mut out: Vec<Mat> = Vec::with_capacity(source.terms.len());
    for (k, p) in source.terms.iter().enumerate() {
        let (phi, through) = if k == 0 {
            (f.matrix() * source.augmentation.matrix(), Some(&target.augmentation))
        } else {
            (
                &out[k - 1] * source.differential(k).unwrap().matrix(),
                target.differential(k),
            )
        };
        let lifted = match through {
            Some(pi) => p
                .lift(&phi, pi)
                .ok_or_else(|| Error::LiftFailed(format!("no lift in degree {k}")))?
                .matrix()
                .clone(),
            None if phi.is_zero() => zero_map(p, target.term(k)),
            None => return Err(Error::LiftFailed(format!("target resolution ends before degree {k}"))),
        };
        out.push(lifted);
    }
    let res = (0..out.len()).all(|k| {
        if k == 0 {
            target.augmentation.matrix() * &out[0] == f.matrix() * source.augmentation.matrix()
        } else {
            match target.differential(k) {
                Some(d) => d.matrix() * &out[k] == &out[k - 1] * source.differential(k).unwrap().matrix(),
                None => (&out[k - 1] * source.differential(k).unwrap().matrix()).is_zero(),
            }
        }
    });
    if !res {
        return Err(Error::violation("chain-map-commutes", "lifted squares do not commute"));
    }
    Ok(out)
}

/// A homotopy `s_k: P_k -> Q_{k+1}` with `phi_k = d s_k + s_{k-1} d`, for a chain
/// map whose composite with the target augmentation vanishes.
pub fn nullhomotopy(phi: &[Mat], source: &ProjResolution, target: &ProjResolution) -> Result<Vec<Mat>> {
    if let Some(p0) = phi.first() {
        if !(target.augmentation.matrix() * p0).is_zero() {
            return Err(Error::NoHomotopy("the map is nonzero after augmentation".into()));
        }
    }
    let mut s: Vec<Mat> = Vec::with_capacity(phi.len());
    for (k, p) in source.terms.iter().enumerate().take(phi.len()) {
        let mut rhs = phi[k].clone();
        if k > 0 {
            rhs = &rhs - &(&s[k - 1] * source.differential(k).unwrap().matrix());
        }
        let sk = match target.differential(k + 1) {
            Some(d) => p
                .lift(&rhs, d)
                .ok_or_else(|| Error::NoHomotopy(format!("inconsistent system in degree {k}")))?
                .matrix()
                .clone(),
            None if rhs.is_zero() => zero_map(p, target.term(k + 1)),
            None => return Err(Error::NoHomotopy(format!("nothing to absorb degree {k}"))),
        };
        s.push(sk);
    }
    for k in 0..s.len() {
        let mut total = match target.differential(k + 1) {
            Some(d) => d.matrix() * &s[k],
            None => Mat::zeros(phi[k].field(), phi[k].rows(), phi[k].cols()),
        };
        if k > 0 {
            total = &total + &(&s[k - 1] * source.differential(k).unwrap().matrix());
        }
        if total != phi[k] {
            return Err(Error::violation("homotopy-identity", format!("fails in degree {k}")));
        }
    }
    Ok(s)
}
