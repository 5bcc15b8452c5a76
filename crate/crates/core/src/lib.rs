//! Exact computer algebra for finite-dimensional coalgebras and Hopf algebras.
//!
//! Everything is represented by structure constants over an exact field
//! (`Q`, `GF(p)`, or a cyclotomic field `Q(zeta_n)`) and every operation is a
//! pure function on immutable data, so results are reproducible bit for bit.
//! The crate is `no_std` compatible (with `alloc`); IO, file formats and the
//! CLI live in the companion `hopf-lab` crate.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod cofrob;
pub mod corpus;
pub mod error;
pub mod exactla;
pub mod graded;
pub mod nichols;
pub mod structures;

pub use error::{Error, Result};
pub use exactla::{FieldSpec, Mat, Scalar, Subspace};
pub use structures::{AlgebraData, Coalgebra, Filtration, HopfAlgebra, HopfCoradicalResult};
