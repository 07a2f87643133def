use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, Mat};
use crate::modrep::{is_short_exact, ModHom, Module, ProjModule};

use super::{
    gpd, is_gorenstein_projective, lift_chain_map, pd, resolve_injective, resolve_projective, Complex, Dim,
    GorensteinProfile, ProjResolution,
};

/// Projectives `P^{i,-r}` for columns `0 <= i < columns` and rows `0 <= r <= depth`,
/// with maps `d_l` of bidegree `(l, 1 - l)`.
#[derive(Clone, Debug)]
pub struct QuasiBicomplex {
    pub columns: usize,
    pub depth: usize,
    /// `components[i][r]` is `P^{i,-r}`.
    pub components: Vec<Vec<ProjModule>>,
    /// `maps[(l, i, r)]` is `d_l` leaving `P^{i,-r}`.
    pub maps: BTreeMap<(usize, usize, usize), Mat>,
    /// `P^{i,0} -> I^i`.
    pub augmentations: Vec<ModHom>,
}

impl QuasiBicomplex {
    fn dim(&self, i: usize, r: usize) -> usize {
        self.components
            .get(i)
            .and_then(|c| c.get(r))
            .map_or(0, |p| p.module.dim())
    }

    /// `d_l` leaving `P^{i,-r}`; zero when not stored.
    pub fn map(&self, l: usize, i: usize, r: usize, field: FieldSpec) -> Mat {
        if let Some(m) = self.maps.get(&(l, i, r)) {
            return m.clone();
        }
        let rows = match (r + l).checked_sub(1) {
            Some(t) => self.dim(i + l, t),
            None => 0,
        };
        Mat::zeros(field, rows, self.dim(i, r))
    }

    /// Checks `sum_k d_k d_{l-k} = 0` at every bidegree of the window; returns the count checked.
    pub fn verify_identities(&self, field: FieldSpec) -> Result<usize> {
        let mut checked = 0;
        for l in 0..self.columns {
            for i in 0..self.columns - l {
                for r in 0..=self.depth {
                    let Some(t) = (r + l).checked_sub(2) else { continue };
                    if t > self.depth {
                        continue;
                    }
                    let mut sum = Mat::zeros(field, self.dim(i + l, t), self.dim(i, r));
                    for k in 0..=l {
                        let first = self.map(l - k, i, r, field);
                        let Some(mid) = (r + l - k).checked_sub(1) else {
                            continue;
                        };
                        if mid > self.depth {
                            continue;
                        }
                        let second = self.map(k, i + l - k, mid, field);
                        sum = &sum + &(&second * &first);
                    }
                    if !sum.is_zero() {
                        return Err(Error::violation(
                            "quasi-bicomplex-identity",
                            format!("sum of d_k d_(l-k) nonzero for l = {l} at P^({i},{})", -(r as i64)),
                        ));
                    }
                    checked += 1;
                }
            }
        }
        Ok(checked)
    }
}

#[derive(Clone, Debug)]
pub struct Totalization {
    pub quasi_bicomplex: QuasiBicomplex,
    /// Supported on degrees `-depth ..= depth + 1`.
    pub total: Complex,
    pub z0: Module,
    pub b0: Module,
    pub b0_inclusion: ModHom,
    pub z0_to_m: ModHom,
    pub pd_b0: Dim,
    /// The bound on Gpd(M) read off from the sequence `0 -> B^0 -> Z^0 -> M -> 0`.
    pub derived_bound: usize,
    pub gpd: usize,
    pub identities_checked: usize,
}

fn sign(r: usize) -> bool {
    r % 2 == 1
}

pub fn totalize_quasi_bicomplex(m: &Module, profile: &GorensteinProfile) -> Result<Totalization> {
    let d = profile
        .gorenstein_dim()
        .ok_or_else(|| Error::ProfileNotCertified(format!("spdi = {}, sidp = {}", profile.spdi, profile.sidp)))?;
    let a: &Arc<Algebra> = m.algebra();
    let field = m.field();
    let columns = 2 * d + 2;
    let inj = resolve_injective(m, columns - 1)?;
    let column_module = |i: usize| inj.terms.get(i).cloned().unwrap_or_else(|| Module::zero(a));

    let resolutions: Vec<ProjResolution> = (0..columns)
        .map(|i| resolve_projective(&column_module(i), d))
        .collect::<Result<_>>()?;
    for (i, r) in resolutions.iter().enumerate() {
        if !r.length().is_some_and(|n| n <= d) {
            return Err(Error::violation(
                "injectives-have-pd-at-most-d",
                format!("I^{i} has projective dimension above {d}"),
            ));
        }
    }
    let mut components = Vec::with_capacity(columns);
    for r in &resolutions {
        let mut col = Vec::with_capacity(d + 1);
        for k in 0..=d {
            col.push(match r.term(k) {
                Some(p) => p.clone(),
                None => ProjModule::zero(a)?,
            });
        }
        components.push(col);
    }
    let mut qb = QuasiBicomplex {
        columns,
        depth: d,
        components,
        maps: BTreeMap::new(),
        augmentations: resolutions.iter().map(|r| r.augmentation.clone()).collect(),
    };

    for (i, res) in resolutions.iter().enumerate() {
        for r in 1..=d {
            if let Some(dd) = res.differential(r) {
                qb.maps.insert((0, i, r), dd.matrix().clone());
            }
        }
    }
    for i in 0..columns - 1 {
        let partial = inj
            .differentials
            .get(i)
            .cloned()
            .unwrap_or_else(|| ModHom::zero(&column_module(i), &column_module(i + 1)));
        let dh = lift_chain_map(&partial, &resolutions[i], &resolutions[i + 1])?;
        for (r, x) in dh.into_iter().enumerate().take(d + 1) {
            qb.maps.insert((1, i, r), if sign(r) { -&x } else { x });
        }
    }
    for l in 2..columns {
        for i in 0..columns - l {
            for r in 0..=d {
                let t = r + l - 2;
                let rows = qb.dim(i + l, t);
                let mut rhs = Mat::zeros(field, rows, qb.dim(i, r));
                for k in 1..l {
                    let mid = r + l - k - 1;
                    if mid > d {
                        continue;
                    }
                    rhs = &rhs - &(&qb.map(k, i + l - k, mid, field) * &qb.map(l - k, i, r, field));
                }
                if r >= 1 {
                    rhs = &rhs - &(&qb.map(l, i, r - 1, field) * &qb.map(0, i, r, field));
                }
                let p = &qb.components[i][r];
                let lifted = match resolutions[i + l].differential(t + 1) {
                    Some(d0) => p.lift(&rhs, d0).map(|h| h.matrix().clone()),
                    None if rhs.is_zero() => Some(Mat::zeros(field, qb.dim(i + l, t + 1), qb.dim(i, r))),
                    None => None,
                };
                let x = lifted.ok_or_else(|| {
                    Error::violation(
                        "quasi-bicomplex-identity",
                        format!("d_{l} cannot be solved at P^({i},{})", -(r as i64)),
                    )
                })?;
                if t < d {
                    qb.maps.insert((l, i, r), x);
                }
            }
        }
    }
    let identities_checked = qb.verify_identities(field)?;

    // Total complex on degrees -d ..= d + 1.
    let lo = -(d as i64);
    let hi = d as i64 + 1;
    let blocks = |s: i64| -> Vec<(usize, usize)> {
        (0..=d)
            .filter_map(|r| {
                let i = s + r as i64;
                (0..columns as i64).contains(&i).then_some((i as usize, r))
            })
            .collect()
    };
    let mut modules = Vec::new();
    let mut layouts = Vec::new();
    for s in lo..=hi {
        let b = blocks(s);
        let classes: Vec<usize> = b.iter().flat_map(|&(i, r)| qb.components[i][r].classes()).collect();
        modules.push(ProjModule::from_classes(a, &classes)?.module);
        layouts.push(b);
    }
    let mut diffs = Vec::new();
    for k in 0..layouts.len() - 1 {
        let (src, tgt) = (&layouts[k], &layouts[k + 1]);
        let mut dmat = Mat::zeros(field, modules[k + 1].dim(), modules[k].dim());
        let mut col = 0;
        for &(i, r) in src {
            let mut row = 0;
            for &(i2, r2) in tgt {
                if i2 >= i && r2 + 1 == r + (i2 - i) {
                    dmat.set_block(row, col, &qb.map(i2 - i, i, r, field));
                }
                row += qb.dim(i2, r2);
            }
            col += qb.dim(i, r);
        }
        diffs.push(dmat);
    }
    let total = Complex::new(a, lo, modules, diffs)?;
    for s in lo..hi {
        if s != 0 && total.cohomology_dim(s) != 0 {
            return Err(Error::violation(
                "total-complex-acyclic",
                format!("H^{s} of the total complex is nonzero"),
            ));
        }
    }

    let q0 = total.component(0);
    let (z0, z_incl) = q0.submodule(&total.differential(0).kernel())?;
    let b_basis = total.differential(-1).column_space();
    let z_linv = z_incl.matrix().left_inverse().expect("independent basis");
    let (b0, b0_inclusion) = z0.submodule(&(&z_linv * &b_basis))?;
    // Q^0 starts with the block P^{0,0}.
    let p00 = qb.dim(0, 0);
    let proj = Mat::identity(field, q0.dim()).submatrix(0, p00, 0, q0.dim());
    let coaug_linv = inj
        .coaugmentation
        .matrix()
        .left_inverse()
        .expect("coaugmentation is injective");
    let to_m = &(&(&coaug_linv * qb.augmentations[0].matrix()) * &proj) * z_incl.matrix();
    let z0_to_m = ModHom::new(z0.clone(), m.clone(), to_m)?;
    let image_ok = inj
        .coaugmentation
        .matrix()
        .spans(&(&(qb.augmentations[0].matrix() * &proj) * z_incl.matrix()));
    if !image_ok || !is_short_exact(&b0_inclusion, &z0_to_m) {
        return Err(Error::violation(
            "cocycles-modulo-boundaries-recover-module",
            "0 -> B^0 -> Z^0 -> M -> 0 is not exact",
        ));
    }

    let pd_b0 = pd(&b0, profile.bound)?;
    let ok = if d == 0 {
        b0.is_zero()
    } else {
        pd_b0.finite().is_some_and(|p| p < d)
    };
    if !ok {
        return Err(Error::violation(
            "boundaries-have-small-pd",
            format!("pd(B^0) = {pd_b0} with d = {d}"),
        ));
    }
    let gp = is_gorenstein_projective(&z0, profile)?;
    if !gp.is_yes() {
        return Err(Error::violation(
            "cocycles-are-gorenstein-projective",
            format!("{gp:?}"),
        ));
    }
    let derived_bound = if b0.is_zero() { 0 } else { pd_b0.finite().unwrap() + 1 };
    let g = gpd(m, profile)?.expect("certified profile");
    if !(g <= derived_bound && derived_bound <= d) {
        return Err(Error::violation(
            "totalization-bounds-gpd",
            format!("gpd = {g}, derived bound = {derived_bound}, d = {d}"),
        ));
    }
    Ok(Totalization {
        quasi_bicomplex: qb,
        total,
        z0,
        b0,
        b0_inclusion,
        z0_to_m,
        pd_b0,
        derived_bound,
        gpd: g,
        identities_checked,
    })
}
