//! Recognisers for the special shapes taken by two-chain and two-row codes.

use crate::algebra::{Elem, Matrix};
use crate::metric::{nrt_weight_chain, CodeSpace};

use super::block::is_canonical_row;
use super::tm::is_tm_reduced;

/// Shape of a generator matrix over two chains.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwoChainForm {
    /// `[A_1 | A_2]`.
    Plain,
    /// `[[A_1, A_2], [0, A_3]]` where `A_1` and `A_2` have `split` rows.
    Stacked { split: usize },
}

/// Canonical rows (ignoring zero rows when `allow_zero`) of strictly
/// increasing weight.
fn canonical_increasing(rows: impl Iterator<Item = Vec<Elem>>, allow_zero: bool) -> bool {
    let mut prev = 0;
    for row in rows {
        if row.iter().all(|&x| x == 0) {
            if allow_zero {
                continue;
            }
            return false;
        }
        if !is_canonical_row(&row) {
            return false;
        }
        let w = nrt_weight_chain(&row);
        if w <= prev {
            return false;
        }
        prev = w;
    }
    true
}

/// Classifies `g` against the two standard forms for codes over two chains.
///
/// `Stacked`: the trailing zero rows of `A_1` split the matrix; `A_3` below
/// them is canonical with increasing weight, `A_2` is T_m-reduced and
/// vanishes above every nonzero column of `A_3`. `Plain`: nonzero rows of
/// `A_1` are canonical with increasing weight and `A_2` is T_m-reduced.
/// `Stacked` is reported whenever it applies.
pub fn two_chain_form(g: &Matrix, space: &CodeSpace) -> Option<TwoChainForm> {
    if space.chains() != 2 || space.check_matrix(g).is_err() {
        return None;
    }
    let k = g.rows();
    let (b1, b2) = (space.block(0), space.block(1));
    let rows_of = |rows: std::ops::Range<usize>, cols: std::ops::Range<usize>| {
        rows.map(move |r| g.row(r)[cols.clone()].to_vec())
    };
    let zeros = (0..k).rev().take_while(|&r| g.row(r)[b1.clone()].iter().all(|&x| x == 0)).count();
    let split = k - zeros;
    if zeros > 0 {
        let a2 = g.submatrix(0..split, b2.clone());
        let a3 = g.submatrix(split..k, b2.clone());
        let stacked = canonical_increasing(rows_of(0..split, b1.clone()), false)
            && canonical_increasing(rows_of(split..k, b2.clone()), false)
            && is_tm_reduced(&a2)
            && (0..a3.cols())
                .all(|c| (0..a3.rows()).all(|r| a3.get(r, c) == 0) || (0..split).all(|r| a2.get(r, c) == 0));
        if stacked {
            return Some(TwoChainForm::Stacked { split });
        }
    }
    let plain = canonical_increasing(rows_of(0..k, b1), true) && is_tm_reduced(&g.submatrix(0..k, b2));
    plain.then_some(TwoChainForm::Plain)
}

/// The five admissible shapes of a 2-row block. Indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BidimensionalType {
    Null,
    /// `[e_i; 0]`.
    Top(usize),
    /// `[0; e_i]`.
    Bottom(usize),
    /// `[e_k; e_j]`, `k != j`.
    Pair { top: usize, bottom: usize },
    /// `[e_k + λ e_j; e_j]`, `k < j`, `λ != 0`.
    Mixed { k: usize, j: usize, lambda: Elem },
}

fn canonical_index(row: &[Elem]) -> Option<usize> {
    is_canonical_row(row).then(|| nrt_weight_chain(row))
}

/// Which of the five types the 2-row `block` is, if any.
pub fn bidimensional_type(block: &Matrix) -> Option<BidimensionalType> {
    if block.rows() != 2 {
        return None;
    }
    let (top, bottom) = (block.row(0), block.row(1));
    let zero = |r: &[Elem]| r.iter().all(|&x| x == 0);
    match (zero(top), zero(bottom)) {
        (true, true) => return Some(BidimensionalType::Null),
        (false, true) => return canonical_index(top).map(BidimensionalType::Top),
        (true, false) => return canonical_index(bottom).map(BidimensionalType::Bottom),
        _ => {}
    }
    let j = canonical_index(bottom)?;
    if let Some(k) = canonical_index(top) {
        return (k != j).then_some(BidimensionalType::Pair { top: k, bottom: j });
    }
    let lambda = top[j - 1];
    let support: Vec<usize> = (0..top.len()).filter(|&c| top[c] != 0).collect();
    match support[..] {
        [a, b] if b == j - 1 && top[a] == 1 && lambda != 0 => Some(BidimensionalType::Mixed { k: a + 1, j, lambda }),
        _ => None,
    }
}
