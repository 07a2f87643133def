//! Resolutions, Ext, Gorenstein dimensions and the totalization of a
//! quasi-bicomplex built from an injective coresolution.

mod chain;
mod complex;
mod profile;
mod resolution;
mod totalize;

use std::fmt;

use serde::Serialize;

pub use chain::{lift_chain_map, nullhomotopy};
pub use complex::Complex;
pub use profile::{
    complete_resolution_check, gid, gorenstein_profile, gpd, is_gorenstein_projective, GorensteinProfile, GpVerdict,
};
pub use resolution::{
    ext_dim, ext_dims, ext_dims_injective, id, pd, resolve_injective, resolve_projective, InjResolution, ProjResolution,
};
pub use totalize::{totalize_quasi_bicomplex, QuasiBicomplex, Totalization};

/// A dimension that is either known or only bounded below by a search bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Dim {
    Finite(usize),
    AtLeast(usize),
}

impl Dim {
    pub fn finite(self) -> Option<usize> {
        match self {
            Dim::Finite(n) => Some(n),
            Dim::AtLeast(_) => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Dim::Finite(_))
    }

    /// Supremum, where an unbounded value absorbs finite ones.
    pub fn max(self, other: Dim) -> Dim {
        match (self, other) {
            (Dim::Finite(a), Dim::Finite(b)) => Dim::Finite(a.max(b)),
            (Dim::AtLeast(a), Dim::AtLeast(b)) => Dim::AtLeast(a.max(b)),
            (Dim::AtLeast(a), Dim::Finite(b)) | (Dim::Finite(b), Dim::AtLeast(a)) => Dim::AtLeast(a.max(b)),
        }
    }
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dim::Finite(n) => write!(f, "{n}"),
            Dim::AtLeast(n) => write!(f, ">={n}"),
        }
    }
}
