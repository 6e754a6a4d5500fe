//! Exact, bounded brute-force analytics over the row space of a generator
//! matrix, and witness verification.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Elem, Field, Matrix};
use crate::error::{Error, Result};
use crate::metric::{row_weight, CodeSpace};
use crate::reduction::ReductionWitness;

/// Largest number of codewords any enumeration will visit.
pub const ENUMERATION_LIMIT: u64 = 1 << 24;

/// `q^rank`, or `None` past the enumeration limit.
fn code_size(q: u32, rank: usize) -> Option<u64> {
    let mut size: u64 = 1;
    for _ in 0..rank {
        size = size.checked_mul(u64::from(q)).filter(|&s| s <= ENUMERATION_LIMIT)?;
    }
    Some(size)
}

/// Every codeword of a row space, each exactly once, starting with zero.
///
/// Message vectors over an echelon basis are visited in mixed-radix order;
/// each step updates the current codeword by the change in one coordinate.
pub struct Codewords {
    field: Field,
    basis: Vec<Vec<Elem>>,
    digits: Vec<Elem>,
    current: Vec<Elem>,
    remaining: u64,
}

impl Codewords {
    pub fn new(g: &Matrix) -> Result<Codewords> {
        let r = g.rref();
        let field = g.field().clone();
        let size = code_size(field.order(), r.rank).ok_or(Error::TooLarge { q: field.order(), rank: r.rank })?;
        let basis = (0..r.rank).map(|i| r.reduced.row(i).to_vec()).collect();
        Ok(Codewords {
            digits: vec![0; r.rank],
            current: vec![0; g.cols()],
            field,
            basis,
            remaining: size,
        })
    }

    /// Number of codewords not yet visited.
    pub fn remaining(&self) -> u64 {
        self.remaining
    }

    /// Advances to the next codeword without allocating.
    pub fn next_codeword(&mut self) -> Option<&[Elem]> {
        if self.remaining == 0 {
            return None;
        }
        let total = code_size(self.field.order(), self.basis.len()).expect("checked at construction");
        if self.remaining < total {
            self.step();
        }
        self.remaining -= 1;
        Some(&self.current)
    }

    fn step(&mut self) {
        let f = &self.field;
        let q = f.order();
        for (i, d) in self.digits.iter_mut().enumerate() {
            let old = *d;
            let new = if old + 1 == q { 0 } else { old + 1 };
            *d = new;
            let delta = f.sub(new, old);
            for (c, &b) in self.current.iter_mut().zip(&self.basis[i]) {
                if b != 0 {
                    *c = f.add(*c, f.mul(delta, b));
                }
            }
            if new != 0 {
                break;
            }
        }
    }
}

impl Iterator for Codewords {
    type Item = Matrix;

    fn next(&mut self) -> Option<Matrix> {
        let field = self.field.clone();
        let row = self.next_codeword()?.to_vec();
        Some(Matrix::from_vec(&field, 1, row.len(), row).expect("row length matches"))
    }
}

/// All codewords of the row space of `g` as 1-row matrices.
pub fn enumerate_codewords(g: &Matrix, space: &CodeSpace) -> Result<Codewords> {
    space.check_matrix(g)?;
    Codewords::new(g)
}

/// Number of codewords of each total NRT weight `0..=m·n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDistribution {
    counts: Vec<u64>,
}

impl WeightDistribution {
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn count(&self, weight: usize) -> u64 {
        self.counts.get(weight).copied().unwrap_or(0)
    }

    /// Total number of codewords, `q^rank`.
    pub fn size(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Smallest nonzero weight attained, if any.
    pub fn min_nonzero(&self) -> Option<usize> {
        (1..self.counts.len()).find(|&w| self.counts[w] > 0)
    }

    /// `(weight, count)` pairs with nonzero count.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.counts.iter().enumerate().filter(|(_, &c)| c > 0).map(|(w, &c)| (w, c))
    }
}

impl fmt::Display for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (w, c) in self.nonzero() {
            writeln!(f, "{w} {c}")?;
        }
        Ok(())
    }
}

pub fn weight_distribution(g: &Matrix, space: &CodeSpace) -> Result<WeightDistribution> {
    let mut words = enumerate_codewords(g, space)?;
    let m = space.chain_len();
    let mut counts = vec![0u64; space.dim() + 1];
    while let Some(c) = words.next_codeword() {
        counts[row_weight(c, m)] += 1;
    }
    Ok(WeightDistribution { counts })
}

pub fn min_distance(g: &Matrix, space: &CodeSpace) -> Result<usize> {
    space.check_matrix(g)?;
    if g.rank() == 0 {
        return Err(Error::ZeroCode);
    }
    Ok(weight_distribution(g, space)?.min_nonzero().expect("nonzero code"))
}

/// Checks `g_out = S · φ(g_in)` entrywise, `S` invertible, and agreement of
/// the reduced row echelon forms of `g_out` and `φ(g_in)`.
pub fn verify_witness(g_in: &Matrix, g_out: &Matrix, w: &ReductionWitness) -> Result<bool> {
    let space = w.space();
    space.check_matrix(g_in)?;
    space.check_matrix(g_out)?;
    let s = &w.row_transform;
    if g_out.rows() != g_in.rows() || s.rows() != g_in.rows() {
        return Err(Error::DimensionMismatch(format!(
            "{} input rows, {} output rows, {}x{} row transform",
            g_in.rows(),
            g_out.rows(),
            s.rows(),
            s.cols()
        )));
    }
    if !s.is_invertible() {
        return Ok(false);
    }
    let moved = w.iso.apply(g_in)?;
    if &s.mul(&moved)? != g_out {
        return Ok(false);
    }
    Ok(g_out.rref().reduced == moved.rref().reduced)
}

/// True iff every chain meets the support of some generator row.
pub fn is_nondegenerate(g: &Matrix, space: &CodeSpace) -> bool {
    space.check_matrix(g).is_ok()
        && (0..space.chains()).all(|j| (0..g.rows()).any(|r| g.row(r)[space.block(j)].iter().any(|&x| x != 0)))
}

/// Uniformly random `rows x cols` matrix.
pub fn random_matrix_with<R: Rng>(field: &Field, rows: usize, cols: usize, rng: &mut R) -> Matrix {
    let q = field.order();
    let data = (0..rows * cols).map(|_| rng.gen_range(0..q)).collect();
    Matrix::from_vec(field, rows, cols, data).expect("sizes match")
}

/// Reproducible random `k`-row generator matrix over `space`.
pub fn random_matrix(space: &CodeSpace, k: usize, seed: u64) -> Matrix {
    random_matrix_with(space.field(), k, space.dim(), &mut ChaCha8Rng::seed_from_u64(seed))
}
