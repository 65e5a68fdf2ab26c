//! Semisimple cyclotomic Hecke algebras in seminormal form, the hash
//! involution and the irreducible modules of the alternating subalgebra.

pub mod error;
pub mod exec;
pub mod alternating;
pub mod cli;
pub mod hecke;
pub mod linalg;
pub mod reference;
pub mod scalars;
pub mod seminormal;
pub mod tableaux;

pub use error::{Error, Result};
pub use exec::Execution;
pub use scalars::{AlgebraParams, Scalar, Xi};
