//! Finite fields and dense linear algebra over them.

mod field;
mod matrix;
mod triangular;

pub use field::{Elem, Field, MAX_ORDER};
pub use matrix::{Matrix, Rref};
pub use triangular::UpperTriangular;

