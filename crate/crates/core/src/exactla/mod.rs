//! Exact scalar arithmetic and canonical linear algebra over Q, GF(p), and
//! cyclotomic fields.

pub mod mat;
pub mod scalar;
pub mod subspace;

pub use mat::{tensor_index, tensor_index_inv, Mat};
pub use scalar::{cyclotomic_polynomial, euler_phi, is_prime, FieldSpec, Scalar};
pub use subspace::{image, kernel, quotient_basis, Subspace};
