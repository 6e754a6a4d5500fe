//! Linear codes in Niederreiter–Rosenbloom–Tsfasman (NRT) spaces: the NRT
//! metric over a disjoint union of `n` chains of length `m`, its linear
//! isometry group, and a standard form for generator matrices whose every
//! reduction comes with an exactly checkable equivalence witness.
//!
//! ```
//! use nrtform::{codetools, is_nrt_triangular, nrt_triangular_form, CodeSpace, Field, Matrix};
//!
//! let f = Field::new(2).unwrap();
//! let space = CodeSpace::new(&f, 4, 2).unwrap();
//! let g = Matrix::from_rows(&f, &[[1, 1, 1, 0, 1, 1, 1, 1], [0, 0, 0, 0, 1, 1, 0, 0]]).unwrap();
//! let out = nrt_triangular_form(&g, &space).unwrap();
//! assert!(is_nrt_triangular(&out.matrix, &space).unwrap().holds());
//! assert!(codetools::verify_witness(&g, &out.matrix, &out.witness).unwrap());
//! ```

pub mod algebra;
pub mod codetools;
pub mod error;
pub mod format;
pub mod metric;
pub mod reduction;
pub mod symmetry;

pub use algebra::{Elem, Field, Matrix, UpperTriangular};
pub use error::{Error, Result};
pub use metric::{ideal_weight, nrt_distance, nrt_weight, nrt_weight_chain, CodeSpace, WeightProfile};
pub use reduction::{
    block_reduce, is_nrt_triangular, is_tm_reduced, nrt_triangular_form, one_chain_standard_form, tm_reduce,
    BlockSplit, Reduction, ReductionWitness,
};
pub use symmetry::{map_to_canonical, Isometry};
