//! Exact-arithmetic workbench for Gorenstein homological algebra over
//! finite-dimensional algebras.

pub mod algebra;
pub mod corpus;
pub mod dgcplx;
pub mod error;
pub mod exactlin;
pub mod frobenius;
pub mod homology;
pub mod io;
pub mod modrep;
pub mod suite;

pub use algebra::{Algebra, Provenance};
pub use error::{Error, Result};
pub use exactlin::{FieldSpec, Mat, Scalar};
pub use modrep::{ModHom, Module};
