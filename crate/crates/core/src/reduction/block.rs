//! Reduction of one block under T_m together with admissible row operations.

use crate::algebra::{Matrix, UpperTriangular};
use crate::error::{Error, Result};
use crate::metric::CodeSpace;
use crate::symmetry::Isometry;

use super::tm::{is_tm_reduced, reduce_columns};
use super::{BlockSplit, Reduction, ReductionWitness};

/// A matrix under reduction plus the row transforms applied to it so far.
pub(crate) struct Work {
    pub g: Matrix,
    /// Accumulated row transform: `g = s · (column-transformed input)`.
    pub s: Matrix,
    /// Row transform of the current step only, when tracing.
    pub step: Option<Matrix>,
}

impl Work {
    pub fn new(g: Matrix) -> Work {
        let s = Matrix::identity(g.field(), g.rows());
        Work { g, s, step: None }
    }

    fn add_row(&mut self, dst: usize, src: usize, c: u32) {
        self.g.add_row_multiple(dst, src, c);
        self.s.add_row_multiple(dst, src, c);
        if let Some(st) = &mut self.step {
            st.add_row_multiple(dst, src, c);
        }
    }

    fn scale_row(&mut self, r: usize, c: u32) {
        self.g.scale_row(r, c);
        self.s.scale_row(r, c);
        if let Some(st) = &mut self.step {
            st.scale_row(r, c);
        }
    }

    fn reorder_rows(&mut self, order: &[usize]) {
        if order.iter().enumerate().all(|(i, &r)| i == r) {
            return;
        }
        self.g = self.g.permute_rows(order);
        self.s = self.s.permute_rows(order);
        if let Some(st) = &mut self.step {
            *st = st.permute_rows(order);
        }
    }
}

/// Result of reducing one block in place.
pub(crate) struct BlockStep {
    pub t: UpperTriangular,
    /// Block-relative (0-based) columns of the new canonical rows, ascending.
    /// Those rows now sit at `s1 .. s1 + pivots.len()`.
    pub pivots: Vec<usize>,
}

fn block_row_is_zero(g: &Matrix, r: usize, offset: usize, m: usize) -> bool {
    g.row(r)[offset..offset + m].iter().all(|&x| x == 0)
}

/// Reduces the block at `offset` with the top `s1` rows protected.
///
/// If the bottom rows vanish on the block, the block is T_m-reduced.
/// Otherwise the bottom rows are brought to distinct canonical vectors in
/// increasing order (zero rows sink), the top rows are cleared above each
/// of them, and the top rows are T_m-reduced on the remaining columns with
/// transforms that fix the canonical rows.
pub(crate) fn reduce_block(work: &mut Work, offset: usize, m: usize, s1: usize) -> BlockStep {
    let k = work.g.rows();
    let field = work.g.field().clone();
    if (s1..k).all(|r| block_row_is_zero(&work.g, r, offset, m)) {
        let rows: Vec<usize> = (0..k).collect();
        let cols: Vec<usize> = (0..m).collect();
        let t = reduce_columns(&mut work.g, offset, m, &rows, &cols);
        return BlockStep { t, pivots: Vec::new() };
    }

    // bottom rows: echelon form keyed on the last nonzero entry, scanning
    // levels from the top of the chain down
    let mut pivot_of: Vec<Option<usize>> = vec![None; k];
    for c in (0..m).rev() {
        let Some(pr) = (s1..k).find(|&r| pivot_of[r].is_none() && work.g.get(r, offset + c) != 0) else {
            continue;
        };
        let inv = field.inv(work.g.get(pr, offset + c)).expect("pivot is nonzero");
        work.scale_row(pr, inv);
        for r in s1..k {
            let v = work.g.get(r, offset + c);
            if r != pr && v != 0 {
                work.add_row(r, pr, field.neg(v));
            }
        }
        pivot_of[pr] = Some(c);
    }
    let mut pivot_rows: Vec<(usize, usize)> = (s1..k).filter_map(|r| pivot_of[r].map(|c| (c, r))).collect();
    pivot_rows.sort_unstable();
    let pivots: Vec<usize> = pivot_rows.iter().map(|&(c, _)| c).collect();

    // T_m element turning each pivot row into its canonical vector: column b
    // absorbs -u[b] times the pivot column of every row u with u[b] != 0
    let mut is_pivot = vec![false; m];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut t1 = Matrix::identity(&field, m);
    for &(c, r) in &pivot_rows {
        for b in (0..c).filter(|&b| !is_pivot[b]) {
            let u = work.g.get(r, offset + b);
            if u != 0 {
                t1.set(b, c, field.neg(u));
            }
        }
    }
    let t1 = UpperTriangular::from_matrix_unchecked(t1);
    if !t1.is_identity() {
        for r in 0..k {
            t1.apply_in_place(&mut work.g.row_mut(r)[offset..offset + m]);
        }
    }

    let mut order: Vec<usize> = (0..s1).collect();
    order.extend(pivot_rows.iter().map(|&(_, r)| r));
    order.extend((s1..k).filter(|&r| pivot_of[r].is_none()));
    work.reorder_rows(&order);

    // admissible operations: kill the top rows above every canonical row
    for (l, &c) in pivots.iter().enumerate() {
        let src = s1 + l;
        for r in 0..s1 {
            let v = work.g.get(r, offset + c);
            if v != 0 {
                work.add_row(r, src, field.neg(v));
            }
        }
    }

    let top: Vec<usize> = (0..s1).collect();
    let free: Vec<usize> = (0..m).filter(|&c| !is_pivot[c]).collect();
    let t2 = reduce_columns(&mut work.g, offset, m, &top, &free);
    let t = t2.mul(&t1).expect("same field and size");
    BlockStep { t, pivots }
}

/// True iff `s` has the block form `[[I_{s1}, *], [0, invertible]]`, i.e.
/// lies in the group generated by (s1, s2)-admissible row operations.
pub fn is_admissible(s: &Matrix, split: BlockSplit) -> bool {
    let k = split.rows();
    if s.rows() != k || s.cols() != k {
        return false;
    }
    let s1 = split.s1();
    for r in 0..s1 {
        for c in 0..s1 {
            if s.get(r, c) != u32::from(r == c) {
                return false;
            }
        }
    }
    for r in s1..k {
        for c in 0..s1 {
            if s.get(r, c) != 0 {
                return false;
            }
        }
    }
    s.rank_of(s1..k, s1..k) == k - s1
}

/// Standard form of a code over a single chain.
#[derive(Clone, Debug)]
pub struct OneChainForm {
    /// Rows `e_{i_1}, …, e_{i_r}` followed by zero rows.
    pub matrix: Matrix,
    pub witness: ReductionWitness,
    /// The nonzero weights attained by the code, ascending (1-based).
    pub weights: Vec<usize>,
}

/// Reduces a one-chain code to canonical rows `e_{i_1}; …; e_{i_r}`, where
/// `i_1 < … < i_r` are exactly the nonzero weights attained by the code.
pub fn one_chain_standard_form(m: &Matrix, space: &CodeSpace) -> Result<OneChainForm> {
    if space.chains() != 1 {
        return Err(Error::SpaceMismatch(format!(
            "one-chain standard form needs n = 1, got n = {}",
            space.chains()
        )));
    }
    space.check_matrix(m)?;
    let mut work = Work::new(m.clone());
    let step = reduce_block(&mut work, 0, space.chain_len(), 0);
    let weights = step.pivots.iter().map(|c| c + 1).collect();
    let iso = Isometry::new(space, vec![0], vec![step.t])?;
    Ok(OneChainForm { matrix: work.g, witness: ReductionWitness::new(work.s, iso)?, weights })
}

/// Reduces a k x m block under T_m and (s1, s2)-admissible row operations.
///
/// With zero bottom rows the output is T_m-reduced. Otherwise it has the
/// shape `[[A, B], [J, 0]]`, checked by [`is_block_reduced`]. The witness
/// lives in the one-chain space (q, m, 1) and its row transform is
/// admissible for `split`.
pub fn block_reduce(m: &Matrix, split: BlockSplit) -> Result<Reduction> {
    if split.rows() != m.rows() {
        return Err(Error::DimensionMismatch(format!(
            "split {}+{} does not match {} rows",
            split.s1(),
            split.s2(),
            m.rows()
        )));
    }
    let space = CodeSpace::new(m.field(), m.cols(), 1)?;
    let mut work = Work::new(m.clone());
    let step = reduce_block(&mut work, 0, m.cols(), split.s1());
    let iso = Isometry::new(&space, vec![0], vec![step.t])?;
    Ok(Reduction { matrix: work.g, witness: ReductionWitness::new(work.s, iso)? })
}

fn canonical_level(row: &[u32]) -> Option<usize> {
    let mut nz = row.iter().enumerate().filter(|(_, &x)| x != 0);
    match (nz.next(), nz.next()) {
        (Some((i, &1)), None) => Some(i + 1),
        _ => None,
    }
}

pub(crate) fn is_canonical_row(row: &[u32]) -> bool {
    canonical_level(row).is_some()
}

/// Checks the `[[A, B], [J, 0]]` shape with `s1` protected rows and returns
/// the width `w` of `J`, or a description of the first failed requirement.
///
/// `J` is the bottom-left `s2 x w` corner where `w` is the largest weight
/// among the bottom rows, so its last column is nonzero by construction.
pub(crate) fn split_shape(block: &Matrix, s1: usize, require_sink: bool) -> std::result::Result<usize, String> {
    let k = block.rows();
    let m = block.cols();
    let mut levels = Vec::new();
    let mut seen_zero = false;
    for r in s1..k {
        let row = block.row(r);
        if row.iter().all(|&x| x == 0) {
            seen_zero = true;
            continue;
        }
        if require_sink && seen_zero {
            return Err(format!("zero row above nonzero row {} in the bottom part", r + 1));
        }
        let Some(level) = canonical_level(row) else {
            return Err(format!("bottom row {} is not a canonical vector", r + 1));
        };
        if levels.last().is_some_and(|&prev| prev >= level) {
            return Err(format!("bottom row {} breaks increasing weight order", r + 1));
        }
        levels.push(level);
    }
    let Some(&w) = levels.last() else {
        return Err("bottom rows are all zero".into());
    };
    for &level in &levels {
        if (0..s1).any(|r| block.get(r, level - 1) != 0) {
            return Err(format!("A has a nonzero entry above the pivot of J in column {level}"));
        }
    }
    if !is_tm_reduced(&block.submatrix(0..s1, 0..w)) {
        return Err("A is not T_m-reduced".into());
    }
    if !is_tm_reduced(&block.submatrix(0..s1, w..m)) {
        return Err("B is not T_m-reduced".into());
    }
    Ok(w)
}

/// Shape produced by [`block_reduce`]: T_m-reduced when the bottom rows
/// are zero, otherwise `[[A, B], [J, 0]]` with the nonzero rows of `J`
/// distinct canonical vectors in increasing order above any zero rows,
/// the last column of `J` nonzero, `A` zero above each pivot of `J`, and
/// `A`, `B` T_m-reduced.
pub fn is_block_reduced(m: &Matrix, split: BlockSplit) -> bool {
    if split.rows() != m.rows() {
        return false;
    }
    if (split.s1()..m.rows()).all(|r| m.row_is_zero(r)) {
        is_tm_reduced(m)
    } else {
        split_shape(m, split.s1(), true).is_ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Field;

    fn gf(q: u64) -> Field {
        Field::new(q).unwrap()
    }

    fn check(input: &Matrix, out: &Reduction) {
        let w = &out.witness;
        let img = w.iso.apply(input).unwrap();
        assert_eq!(w.row_transform.mul(&img).unwrap(), out.matrix);
    }

    #[test]
    fn golden_first_block() {
        let f = gf(2);
        let m = Matrix::from_rows(&f, &[[1, 1, 1, 0], [1, 0, 1, 0], [1, 1, 1, 0], [0, 0, 0, 0]]).unwrap();
        let space = CodeSpace::new(&f, 4, 1).unwrap();
        let form = one_chain_standard_form(&m, &space).unwrap();
        assert_eq!(form.weights, vec![2, 3]);
        let expected = Matrix::from_rows(&f, &[[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 0], [0, 0, 0, 0]]).unwrap();
        assert_eq!(form.matrix, expected);
        assert!(form.witness.row_transform.is_invertible());
    }

    #[test]
    fn identity_is_already_canonical() {
        let f = gf(3);
        let m = Matrix::identity(&f, 4);
        let form = one_chain_standard_form(&m, &CodeSpace::new(&f, 4, 1).unwrap()).unwrap();
        assert_eq!(form.matrix, m);
        assert_eq!(form.weights, vec![1, 2, 3, 4]);
    }

    #[test]
    fn one_chain_needs_one_chain() {
        let f = gf(2);
        let m = Matrix::zeros(&f, 2, 4);
        let err = one_chain_standard_form(&m, &CodeSpace::new(&f, 2, 2).unwrap()).unwrap_err();
        assert!(matches!(err, Error::SpaceMismatch(_)));
    }

    #[test]
    fn golden_second_block() {
        // block 2 of the intermediate matrix, with the first two rows protected
        let f = gf(2);
        let m = Matrix::from_rows(&f, &[[1, 1, 1, 1], [0, 1, 1, 0], [1, 0, 0, 0], [1, 1, 0, 0]]).unwrap();
        let split = BlockSplit::new(2, 2);
        let out = block_reduce(&m, split).unwrap();
        check(&m, &out);
        assert!(is_admissible(&out.witness.row_transform, split));
        assert!(is_block_reduced(&out.matrix, split));
        assert_eq!(out.matrix.row(2), &[1, 0, 0, 0]);
        assert_eq!(out.matrix.row(3), &[0, 1, 0, 0]);
        for r in 0..2 {
            assert_eq!(&out.matrix.row(r)[..2], &[0, 0]);
        }
    }

    #[test]
    fn zero_bottom_gives_tm_reduced() {
        let f = gf(3);
        let m = Matrix::from_rows(&f, &[[2, 1, 1], [1, 2, 0], [0, 0, 0]]).unwrap();
        let out = block_reduce(&m, BlockSplit::new(2, 1)).unwrap();
        check(&m, &out);
        assert!(is_tm_reduced(&out.matrix));
        assert!(out.matrix.row_is_zero(2));
        assert!(out.witness.row_transform == Matrix::identity(&f, 3));
    }

    #[test]
    fn admissibility() {
        let f = gf(2);
        let id = Matrix::identity(&f, 3);
        assert!(is_admissible(&id, BlockSplit::new(1, 2)));
        let swap = Matrix::from_rows(&f, &[[0, 1, 0], [1, 0, 0], [0, 0, 1]]).unwrap();
        assert!(is_admissible(&swap, BlockSplit::new(0, 3)));
        assert!(!is_admissible(&swap, BlockSplit::new(1, 2)));
        let upper = Matrix::from_rows(&f, &[[1, 1, 1], [0, 0, 1], [0, 1, 0]]).unwrap();
        assert!(is_admissible(&upper, BlockSplit::new(1, 2)));
        let singular = Matrix::from_rows(&f, &[[1, 0, 0], [0, 1, 1], [0, 1, 1]]).unwrap();
        assert!(!is_admissible(&singular, BlockSplit::new(1, 2)));
    }

    #[test]
    fn split_shape_diagnostics() {
        let f = gf(2);
        let bad = Matrix::from_rows(&f, &[[1, 0, 0], [0, 1, 0], [1, 0, 0]]).unwrap();
        assert!(split_shape(&bad, 2, true).unwrap_err().contains("above the pivot"));
        let unsorted = Matrix::from_rows(&f, &[[0, 0, 1], [0, 1, 0], [1, 0, 0]]).unwrap();
        assert!(split_shape(&unsorted, 1, true).is_err());
        let sunk = Matrix::from_rows(&f, &[[0, 0, 1], [0, 0, 0], [1, 0, 0]]).unwrap();
        assert!(split_shape(&sunk, 1, true).is_err());
        assert_eq!(split_shape(&sunk, 1, false), Ok(1));
    }
}
