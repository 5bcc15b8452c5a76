//! Coalgebras, algebras, and Hopf algebras by structure constants, with the
//! invariants built from them: duals, radicals, wedges, coradical and
//! standard filtrations, the Hopf coradical, and `J_omega`.

pub mod dual;
pub mod filtration;
pub mod ideal;
pub mod radical;
pub mod types;
pub mod validate;

pub use dual::{dual_algebra, dual_coalgebra, dual_hopf};
pub use filtration::{
    coradical, coradical_filtration, hopf_coradical, standard_filtration, sub_hopf_algebra,
    subalgebra_generated, verify_hopf_filtration, wedge, wedge_via_kernel, FiltrationFailure,
};
pub use ideal::{gr_dual_compat, j_omega, GrDualCompat};
pub use radical::{jacobson_radical, quotient_algebra, radical_certificate};
pub use types::{AlgebraData, Coalgebra, Filtration, HopfAlgebra, HopfCoradicalResult};
pub use validate::{validate_algebra, validate_coalgebra, validate_hopf, Violation};
