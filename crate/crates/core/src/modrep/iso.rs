//! Deciding whether two modules are isomorphic.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::exactlin::{random_scalar, Mat, Scalar};

use super::{hom_dim, hom_space, ModHom, Module};

const RANDOM_TRIALS: usize = 64;
const EXHAUSTIVE_LIMIT: u64 = 1 << 20;

#[derive(Clone, Debug)]
pub enum IsoVerdict {
    Yes(ModHom),
    /// The reason names the invariant that differs.
    No(String),
    Inconclusive,
}

impl IsoVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, IsoVerdict::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, IsoVerdict::No(_))
    }
}

pub fn is_isomorphic(m: &Module, n: &Module, seed: u64) -> Result<IsoVerdict> {
    if m.dim() != n.dim() {
        return Ok(IsoVerdict::No(format!("dimensions {} and {}", m.dim(), n.dim())));
    }
    if m.dim() == 0 {
        return Ok(IsoVerdict::Yes(ModHom::zero(m, n)));
    }
    let em = hom_dim(m, m)?;
    let en = hom_dim(n, n)?;
    if em != en {
        return Ok(IsoVerdict::No(format!("endomorphism dimensions {em} and {en}")));
    }
    let (rm, rn) = (m.radical_series_dims(), n.radical_series_dims());
    if rm != rn {
        return Ok(IsoVerdict::No(format!("radical series {rm:?} and {rn:?}")));
    }
    let (sm, sn) = (m.socle_series_dims(), n.socle_series_dims());
    if sm != sn {
        return Ok(IsoVerdict::No(format!("socle series {sm:?} and {sn:?}")));
    }
    let basis = hom_space(m, n)?;
    if basis.len() != em {
        return Ok(IsoVerdict::No(format!(
            "dim Hom(M,N) = {} but dim End(M) = {em}",
            basis.len()
        )));
    }
    let field = m.field();
    let mats: Vec<&Mat> = basis.iter().map(|h| h.matrix()).collect();
    let combine = |coeffs: &[Scalar]| Mat::linear_combination(field, n.dim(), m.dim(), coeffs, &mats);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_TRIALS {
        let coeffs: Vec<Scalar> = (0..basis.len()).map(|_| random_scalar(field, &mut rng)).collect();
        let x = combine(&coeffs);
        if x.is_invertible() {
            return Ok(IsoVerdict::Yes(ModHom::new_trusted(m.clone(), n.clone(), x)));
        }
    }
    if let Some(q) = field.order() {
        let total = q.checked_pow(basis.len() as u32);
        if let Some(total) = total.filter(|&t| t <= EXHAUSTIVE_LIMIT) {
            for code in 0..total {
                let mut c = code;
                let coeffs: Vec<Scalar> = (0..basis.len())
                    .map(|_| {
                        let d = c % q;
                        c /= q;
                        field.from_i64(d as i64)
                    })
                    .collect();
                let x = combine(&coeffs);
                if x.is_invertible() {
                    return Ok(IsoVerdict::Yes(ModHom::new_trusted(m.clone(), n.clone(), x)));
                }
            }
            return Ok(IsoVerdict::No(
                "no invertible map in an exhaustive search of Hom(M,N)".into(),
            ));
        }
    }
    Ok(IsoVerdict::Inconclusive)
}
