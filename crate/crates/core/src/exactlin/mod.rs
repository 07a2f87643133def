//! Exact dense linear algebra over F_p and Q.

mod field;
mod mat;
pub mod oracle;

pub(crate) use field::mod_inv;
pub use field::{is_canonical, FieldSpec, Scalar};
pub use mat::{random_scalar, Mat, Rref, Solution};

#[cfg(test)]
mod tests;
