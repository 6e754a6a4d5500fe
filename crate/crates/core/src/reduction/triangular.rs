//! NRT-triangular form of a full generator matrix `[G_1 | … | G_n]`.

use std::fmt;

use crate::algebra::{Matrix, UpperTriangular};
use crate::error::Result;
use crate::metric::{nrt_weight_chain, CodeSpace};
use crate::symmetry::Isometry;

use super::block::{is_canonical_row, reduce_block, split_shape, Work};
use super::tm::is_tm_reduced;
use super::{Reduction, ReductionWitness};

/// One pass of the block-by-block algorithm.
#[derive(Clone, Debug)]
pub struct StepRecord {
    /// Output position of the block handled in this step (0-based).
    pub position: usize,
    /// Chain of the input this block came from (0-based).
    pub chain: usize,
    /// Protected rows when the step ran.
    pub s1: usize,
    /// Block columns (0-based) of the canonical rows added by this step.
    pub pivots: Vec<usize>,
    /// Row transform applied during this step.
    pub row_transform: Matrix,
}

/// Output of [`nrt_triangular_form_traced`].
#[derive(Clone, Debug)]
pub struct TriangularForm {
    pub matrix: Matrix,
    pub witness: ReductionWitness,
    pub steps: Vec<StepRecord>,
}

/// Brings `g` to NRT-triangular form.
///
/// Blocks are fixed left to right. At each step the unprocessed block whose
/// free (unprotected) rows have the smallest rank is moved into place, ties
/// broken by the smaller rank of the whole block and then by position. The
/// block is then reduced with the rows that already carry canonical
/// vectors protected, and the new canonical rows join the protected set.
pub fn nrt_triangular_form(g: &Matrix, space: &CodeSpace) -> Result<Reduction> {
    let form = run(g, space, false)?;
    Ok(Reduction { matrix: form.matrix, witness: form.witness })
}

/// Like [`nrt_triangular_form`], also recording the row transform of every step.
pub fn nrt_triangular_form_traced(g: &Matrix, space: &CodeSpace) -> Result<TriangularForm> {
    run(g, space, true)
}

fn swap_blocks(g: &mut Matrix, a: usize, b: usize, m: usize) {
    for r in 0..g.rows() {
        let row = g.row_mut(r);
        for c in 0..m {
            row.swap(a * m + c, b * m + c);
        }
    }
}

fn run(g: &Matrix, space: &CodeSpace, trace: bool) -> Result<TriangularForm> {
    space.check_matrix(g)?;
    let (k, m, n) = (g.rows(), space.chain_len(), space.chains());
    let field = space.field();
    let full_rank: Vec<usize> = (0..n).map(|j| g.rank_of(0..k, space.block(j))).collect();
    let mut origin: Vec<usize> = (0..n).collect();
    let mut transforms = vec![UpperTriangular::identity(field, m); n];
    let mut work = Work::new(g.clone());
    let mut steps = Vec::new();
    let mut s1 = 0;

    for i in 0..n {
        let sel = (i..n)
            .min_by_key(|&j| (work.g.rank_of(s1..k, space.block(j)), full_rank[origin[j]], j))
            .expect("at least one unprocessed block");
        if sel != i {
            swap_blocks(&mut work.g, i, sel, m);
            origin.swap(i, sel);
            transforms.swap(i, sel);
        }
        if trace {
            work.step = Some(Matrix::identity(field, k));
        }
        let step = reduce_block(&mut work, i * m, m, s1);
        transforms[i] = step.t.mul(&transforms[i])?;
        if let Some(st) = work.step.take() {
            steps.push(StepRecord { position: i, chain: origin[i], s1, pivots: step.pivots.clone(), row_transform: st });
        }
        s1 += step.pivots.len();
    }

    let mut perm = vec![0; n];
    for (pos, &src) in origin.iter().enumerate() {
        perm[src] = pos;
    }
    let iso = Isometry::new(space, perm, transforms)?;
    let witness = ReductionWitness::new(work.s, iso)?;
    Ok(TriangularForm { matrix: work.g, witness, steps })
}

/// The three defining conditions of the NRT-triangular form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Condition {
    /// Trailing zero rows never increase from one block to the next.
    BlockEchelon,
    /// Nonzero rows of the first block are canonical vectors of increasing weight.
    FirstBlock,
    /// Each later block is T_m-reduced or of the `[[A, B], [J, 0]]` shape.
    LaterBlocks,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::BlockEchelon => "block echelon",
            Condition::FirstBlock => "first block canonical",
            Condition::LaterBlocks => "later blocks reduced",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub condition: Condition,
    /// 1-based chain index.
    pub chain: usize,
    pub message: String,
}

/// How a block satisfied (or failed) its condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlockShape {
    /// First block: `rank` canonical rows on top.
    Canonical { rank: usize },
    TmReduced,
    /// `[[A, B], [J, 0]]` with `protected` top rows and `J` of width `width`.
    Split { protected: usize, width: usize },
    Invalid,
}

/// Per-condition diagnostics from [`is_nrt_triangular`].
#[derive(Clone, Debug)]
pub struct TriangularReport {
    /// Trailing zero rows of each block.
    pub trailing_zeros: Vec<usize>,
    pub shapes: Vec<BlockShape>,
    pub violations: Vec<Violation>,
}

impl TriangularReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn condition_holds(&self, c: Condition) -> bool {
        self.violations.iter().all(|v| v.condition != c)
    }
}

impl fmt::Display for TriangularReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in [Condition::BlockEchelon, Condition::FirstBlock, Condition::LaterBlocks] {
            let verdict = if self.condition_holds(c) { "ok" } else { "FAILED" };
            writeln!(f, "({}) {c}: {verdict}", c as usize + 1)?;
            for v in self.violations.iter().filter(|v| v.condition == c) {
                writeln!(f, "    chain {}: {}", v.chain, v.message)?;
            }
        }
        for (j, s) in self.shapes.iter().enumerate() {
            let desc = match s {
                BlockShape::Canonical { rank } => format!("{rank} canonical rows"),
                BlockShape::TmReduced => "T_m-reduced".to_string(),
                BlockShape::Split { protected, width } => {
                    format!("[[A, B], [J, 0]] with {protected} protected rows, J of width {width}")
                }
                BlockShape::Invalid => "invalid".to_string(),
            };
            writeln!(f, "chain {}: {desc} (trailing zero rows: {})", j + 1, self.trailing_zeros[j])?;
        }
        write!(f, "NRT-triangular: {}", if self.holds() { "yes" } else { "no" })
    }
}

fn trailing_zero_rows(g: &Matrix, cols: std::ops::Range<usize>) -> usize {
    (0..g.rows()).rev().take_while(|&r| g.row(r)[cols.clone()].iter().all(|&x| x == 0)).count()
}

/// Checks the NRT-triangular conditions, reporting every violation.
///
/// The protected rows of block `i` are inferred as `k - z_{i-1}`, where
/// `z_{i-1}` counts the trailing zero rows of the previous block. The row
/// permutation allowed in "T_m-reduced" is applied per block and virtually.
pub fn is_nrt_triangular(g: &Matrix, space: &CodeSpace) -> Result<TriangularReport> {
    space.check_matrix(g)?;
    let (k, n) = (g.rows(), space.chains());
    let zeros: Vec<usize> = (0..n).map(|j| trailing_zero_rows(g, space.block(j))).collect();
    let mut violations = Vec::new();
    let mut shapes = Vec::with_capacity(n);

    for j in 1..n {
        if zeros[j] > zeros[j - 1] {
            violations.push(Violation {
                condition: Condition::BlockEchelon,
                chain: j + 1,
                message: format!(
                    "last {} rows are zero here but chain {} has only {} trailing zero rows",
                    zeros[j],
                    j,
                    zeros[j - 1]
                ),
            });
        }
    }

    let first = g.submatrix(0..k, space.block(0));
    let rank = k - zeros[0];
    let mut first_ok = true;
    let mut prev_level = 0;
    for r in 0..rank {
        let row = first.row(r);
        let problem = if !is_canonical_row(row) {
            Some(format!("row {} is not a canonical vector", r + 1))
        } else {
            let level = nrt_weight_chain(row);
            let bad = level <= prev_level;
            prev_level = level;
            bad.then(|| format!("row {} is out of increasing weight order", r + 1))
        };
        if let Some(message) = problem {
            first_ok = false;
            violations.push(Violation { condition: Condition::FirstBlock, chain: 1, message });
        }
    }
    shapes.push(if first_ok { BlockShape::Canonical { rank } } else { BlockShape::Invalid });

    for j in 1..n {
        let block = g.submatrix(0..k, space.block(j));
        if is_tm_reduced(&block) {
            shapes.push(BlockShape::TmReduced);
            continue;
        }
        let protected = k - zeros[j - 1];
        match split_shape(&block, protected, false) {
            Ok(width) => shapes.push(BlockShape::Split { protected, width }),
            Err(why) => {
                shapes.push(BlockShape::Invalid);
                violations.push(Violation {
                    condition: Condition::LaterBlocks,
                    chain: j + 1,
                    message: format!("not T_m-reduced, and with {protected} protected rows: {why}"),
                });
            }
        }
    }

    Ok(TriangularReport { trailing_zeros: zeros, shapes, violations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Field;

    fn golden_space() -> CodeSpace {
        CodeSpace::new(&Field::new(2).unwrap(), 4, 2).unwrap()
    }

    fn golden_input(s: &CodeSpace) -> Matrix {
        Matrix::from_rows(
            s.field(),
            &[
                [1, 1, 1, 0, 1, 1, 1, 1],
                [1, 0, 1, 0, 0, 1, 1, 0],
                [1, 1, 1, 0, 0, 1, 1, 1],
                [0, 0, 0, 0, 1, 1, 0, 0],
            ],
        )
        .unwrap()
    }

    fn golden_form(s: &CodeSpace) -> Matrix {
        Matrix::from_rows(
            s.field(),
            &[
                [0, 1, 0, 0, 0, 0, 0, 1],
                [0, 0, 1, 0, 0, 0, 1, 0],
                [0, 0, 0, 0, 1, 0, 0, 0],
                [0, 0, 0, 0, 0, 1, 0, 0],
            ],
        )
        .unwrap()
    }

    #[test]
    fn predicate_on_golden_matrices() {
        let s = golden_space();
        let r2 = is_nrt_triangular(&golden_form(&s), &s).unwrap();
        assert!(r2.holds(), "{r2}");
        assert_eq!(r2.shapes[1], BlockShape::TmReduced);
        let r1 = is_nrt_triangular(&golden_input(&s), &s).unwrap();
        assert!(!r1.holds());
        assert!(!r1.condition_holds(Condition::FirstBlock));
        assert!(is_nrt_triangular(&Matrix::zeros(s.field(), 4, 8), &s).unwrap().holds());
    }

    #[test]
    fn golden_input_reduces_to_the_known_form() {
        let s = golden_space();
        let g = golden_input(&s);
        let out = nrt_triangular_form(&g, &s).unwrap();
        assert_eq!(out.witness.apply(&g).unwrap(), out.matrix);
        assert_eq!(out.matrix, golden_form(&s));
    }

    #[test]
    fn block_echelon_violation() {
        let s = golden_space();
        let g = Matrix::from_rows(s.field(), &[[1, 0, 0, 0, 1, 0, 0, 0], [0, 1, 0, 0, 0, 0, 0, 0]]).unwrap();
        let r = is_nrt_triangular(&g, &s).unwrap();
        assert!(!r.condition_holds(Condition::BlockEchelon));
        assert_eq!(r.trailing_zeros, vec![0, 1]);
    }

    #[test]
    fn traced_steps_cover_every_block() {
        let s = golden_space();
        let form = nrt_triangular_form_traced(&golden_input(&s), &s).unwrap();
        assert_eq!(form.steps.len(), 2);
        assert_eq!(form.steps[0].s1, 0);
        assert_eq!(form.steps[1].s1, 2);
        assert_eq!(form.steps[1].pivots, vec![0, 1]);
    }
}
