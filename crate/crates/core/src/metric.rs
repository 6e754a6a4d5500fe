//! NRT weight and distance on F_q^{mn}, seen as n chains of length m.
//!
//! Vectors are laid out chain by chain: coordinates `j*m .. (j+1)*m`
//! (0-based) form chain `j`, and position `i` inside a block is level `i + 1`
//! of that chain.

use std::collections::BTreeSet;

use crate::algebra::{Elem, Field, Matrix};
use crate::error::{Error, Result};

/// The ambient space: `n` disjoint chains of length `m` over GF(q).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeSpace {
    field: Field,
    m: usize,
    n: usize,
}

impl CodeSpace {
    pub fn new(field: &Field, m: usize, n: usize) -> Result<CodeSpace> {
        if m == 0 || n == 0 {
            return Err(Error::DimensionMismatch(format!("chain length and count must be positive (m={m}, n={n})")));
        }
        Ok(CodeSpace { field: field.clone(), m, n })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Chain length m.
    pub fn chain_len(&self) -> usize {
        self.m
    }

    /// Number of chains n.
    pub fn chains(&self) -> usize {
        self.n
    }

    /// Ambient dimension m * n.
    pub fn dim(&self) -> usize {
        self.m * self.n
    }

    /// Column range of chain `j` (0-based).
    pub fn block(&self, j: usize) -> std::ops::Range<usize> {
        j * self.m..(j + 1) * self.m
    }

    pub(crate) fn check_matrix(&self, g: &Matrix) -> Result<()> {
        if g.field() != &self.field {
            return Err(Error::FieldMismatch { left: g.field().order(), right: self.field.order() });
        }
        if g.cols() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "matrix has {} columns but the space has m*n = {}",
                g.cols(),
                self.dim()
            )));
        }
        Ok(())
    }

    pub(crate) fn check_same(&self, other: &CodeSpace) -> Result<()> {
        if self != other {
            return Err(Error::SpaceMismatch(format!(
                "(q={}, m={}, n={}) vs (q={}, m={}, n={})",
                self.field.order(),
                self.m,
                self.n,
                other.field.order(),
                other.m,
                other.n
            )));
        }
        Ok(())
    }
}

/// Per-chain NRT weights of a vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightProfile {
    blocks: Vec<usize>,
}

impl WeightProfile {
    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn total(&self) -> usize {
        self.blocks.iter().sum()
    }

    /// The per-chain weights as a sorted multiset.
    pub fn multiset(&self) -> Vec<usize> {
        let mut v = self.blocks.clone();
        v.sort_unstable();
        v
    }
}

/// Weight of a single chain block: the largest 1-based index of a nonzero
/// coordinate, or 0 for the zero vector.
pub fn nrt_weight_chain(v: &[Elem]) -> usize {
    v.iter().rposition(|&x| x != 0).map_or(0, |i| i + 1)
}

pub(crate) fn row_profile(row: &[Elem], m: usize) -> WeightProfile {
    WeightProfile { blocks: row.chunks(m).map(nrt_weight_chain).collect() }
}

pub(crate) fn row_weight(row: &[Elem], m: usize) -> usize {
    row.chunks(m).map(nrt_weight_chain).sum()
}

fn check_vector(v: &Matrix, space: &CodeSpace) -> Result<()> {
    space.check_matrix(v)?;
    if v.rows() != 1 {
        return Err(Error::DimensionMismatch(format!("expected a row vector, got {} rows", v.rows())));
    }
    Ok(())
}

pub fn nrt_weight(v: &Matrix, space: &CodeSpace) -> Result<WeightProfile> {
    check_vector(v, space)?;
    Ok(row_profile(v.row(0), space.chain_len()))
}

/// d(u, v) = w(u - v).
pub fn nrt_distance(u: &Matrix, v: &Matrix, space: &CodeSpace) -> Result<usize> {
    check_vector(u, space)?;
    check_vector(v, space)?;
    let f = space.field();
    let diff: Vec<Elem> = u.row(0).iter().zip(v.row(0)).map(|(&a, &b)| f.sub(a, b)).collect();
    Ok(row_weight(&diff, space.chain_len()))
}

/// Size of the poset ideal generated by the support of `v`, computed
/// directly on the poset of points (level, chain).
pub fn ideal_weight(v: &Matrix, space: &CodeSpace) -> Result<usize> {
    check_vector(v, space)?;
    let m = space.chain_len();
    let support = v
        .row(0)
        .iter()
        .enumerate()
        .filter(|(_, &x)| x != 0)
        .map(|(c, _)| (c % m + 1, c / m));
    let mut ideal = BTreeSet::new();
    for (level, chain) in support {
        // everything below x_(level, chain) in its chain
        for below in 1..=level {
            ideal.insert((below, chain));
        }
    }
    Ok(ideal.len())
}
