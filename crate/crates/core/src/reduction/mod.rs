//! Standard forms for generator matrices and the predicates that recognise them.
//!
//! Every reduction returns a [`ReductionWitness`]: an invertible row
//! transform `S` and an isometry `φ` with `output = S · φ(input)` exactly.

mod block;
mod shapes;
mod tm;
mod triangular;

use crate::algebra::Matrix;
use crate::error::{Error, Result};
use crate::metric::CodeSpace;
use crate::symmetry::Isometry;

pub use block::{block_reduce, is_admissible, is_block_reduced, one_chain_standard_form, OneChainForm};
pub use shapes::{bidimensional_type, two_chain_form, BidimensionalType, TwoChainForm};
pub use tm::{is_tm_reduced, tm_reduce, tm_reduced_row_order};
pub use triangular::{
    is_nrt_triangular, nrt_triangular_form, nrt_triangular_form_traced, BlockShape, Condition, StepRecord,
    TriangularForm, TriangularReport, Violation,
};

/// Split of the k rows of a block into `s1` protected top rows and `s2`
/// free bottom rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockSplit {
    s1: usize,
    s2: usize,
}

impl BlockSplit {
    pub fn new(s1: usize, s2: usize) -> BlockSplit {
        BlockSplit { s1, s2 }
    }

    /// Split of `k` rows with the first `s1` protected.
    pub fn protecting(k: usize, s1: usize) -> Result<BlockSplit> {
        if s1 > k {
            return Err(Error::DimensionMismatch(format!("cannot protect {s1} of {k} rows")));
        }
        Ok(BlockSplit { s1, s2: k - s1 })
    }

    pub fn s1(&self) -> usize {
        self.s1
    }

    pub fn s2(&self) -> usize {
        self.s2
    }

    pub fn rows(&self) -> usize {
        self.s1 + self.s2
    }
}

/// Certificate that `output = row_transform · iso(input)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionWitness {
    pub row_transform: Matrix,
    pub iso: Isometry,
}

impl ReductionWitness {
    pub fn new(row_transform: Matrix, iso: Isometry) -> Result<ReductionWitness> {
        if row_transform.rows() != row_transform.cols() {
            return Err(Error::DimensionMismatch(format!(
                "row transform must be square, got {}x{}",
                row_transform.rows(),
                row_transform.cols()
            )));
        }
        if row_transform.field() != iso.space().field() {
            return Err(Error::FieldMismatch {
                left: row_transform.field().order(),
                right: iso.space().field().order(),
            });
        }
        Ok(ReductionWitness { row_transform, iso })
    }

    pub fn space(&self) -> &CodeSpace {
        self.iso.space()
    }

    /// `row_transform · iso(g)`.
    pub fn apply(&self, g: &Matrix) -> Result<Matrix> {
        self.row_transform.mul(&self.iso.apply(g)?)
    }
}

/// A reduced matrix with its witness.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub matrix: Matrix,
    pub witness: ReductionWitness,
}
