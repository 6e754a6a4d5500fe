//! T_m-reduction of a single block (k x m matrix under `M -> M T^t`).

use crate::algebra::{Matrix, UpperTriangular};
use crate::symmetry::map_to_canonical;

/// Decides T_m-reducedness and, when it holds, returns a row order that
/// exhibits it: row `i` of the reordered matrix is row `order[i]`.
///
/// Nonzero columns are scanned left to right. Each must have an entry equal
/// to 1 in a row outside the union of the supports of the earlier nonzero
/// columns; that row becomes the column's pivot. Rows that never pivot go
/// first, then pivots in column order.
pub fn tm_reduced_row_order(m: &Matrix) -> Option<Vec<usize>> {
    let k = m.rows();
    let mut covered = vec![false; k];
    let mut pivots = Vec::new();
    for c in 0..m.cols() {
        if (0..k).all(|r| m.get(r, c) == 0) {
            continue;
        }
        let p = (0..k).find(|&r| !covered[r] && m.get(r, c) == 1)?;
        pivots.push(p);
        for (r, cov) in covered.iter_mut().enumerate() {
            *cov |= m.get(r, c) != 0;
        }
    }
    let mut order: Vec<usize> = (0..k).filter(|r| !pivots.contains(r)).collect();
    order.extend(pivots);
    Some(order)
}

/// True iff, modulo a permutation of rows, every nonzero column is
/// `(c_1, …, c_{w-1}, 1, 0, …, 0)` with the pivot levels `w` strictly
/// increasing from left to right.
pub fn is_tm_reduced(m: &Matrix) -> bool {
    tm_reduced_row_order(m).is_some()
}

/// Reduces `m` under the column action of T_m. Returns `(m T^t, T)`.
pub fn tm_reduce(m: &Matrix) -> (Matrix, UpperTriangular) {
    let mut out = m.clone();
    let rows: Vec<usize> = (0..m.rows()).collect();
    let cols: Vec<usize> = (0..m.cols()).collect();
    let t = reduce_columns(&mut out, 0, m.cols(), &rows, &cols);
    (out, t)
}

/// T_m-reduces the submatrix of `g` on `rows` and the block-relative
/// columns `cols` (ascending) of the block starting at `offset`.
///
/// Only triangular transforms supported on `cols` are used, so every other
/// column of the block is untouched. They are applied to all rows of `g`;
/// callers guarantee rows outside `rows` vanish on `cols`. Returns the
/// accumulated m x m transform.
pub(crate) fn reduce_columns(
    g: &mut Matrix,
    offset: usize,
    m: usize,
    rows: &[usize],
    cols: &[usize],
) -> UpperTriangular {
    let field = g.field().clone();
    let mut total = UpperTriangular::identity(&field, m);
    let mut active = rows.to_vec();
    let mut limit = cols.len();
    loop {
        // heaviest row on the first `limit` sub-chain levels; ties go to the
        // highest row index
        let mut best: Option<(usize, usize)> = None;
        for (slot, &r) in active.iter().enumerate() {
            let row = g.row(r);
            let w = (0..limit).rev().find(|&p| row[offset + cols[p]] != 0).map_or(0, |p| p + 1);
            if w > 0 && best.is_none_or(|(bw, _)| w >= bw) {
                best = Some((w, slot));
            }
        }
        let Some((w, slot)) = best else { break };
        let r = active.remove(slot);
        let sub: Vec<_> = cols[..w].iter().map(|&c| g.get(r, offset + c)).collect();
        let local = map_to_canonical(&sub, &field).expect("selected row is nonzero on the sub-chain");
        apply_on_columns(g, offset, &cols[..w], &local);
        total = embed_at(&local, &cols[..w], m).mul(&total).expect("same field and size");
        limit = w - 1;
    }
    total
}

/// Applies `t` (of size `cols.len()`) to the listed block columns of every row.
pub(crate) fn apply_on_columns(g: &mut Matrix, offset: usize, cols: &[usize], t: &UpperTriangular) {
    let mut buf = vec![0; cols.len()];
    for r in 0..g.rows() {
        let row = g.row_mut(r);
        let mut nonzero = false;
        for (b, &c) in buf.iter_mut().zip(cols) {
            *b = row[offset + c];
            nonzero |= *b != 0;
        }
        if !nonzero {
            continue;
        }
        t.apply_in_place(&mut buf);
        for (&b, &c) in buf.iter().zip(cols) {
            row[offset + c] = b;
        }
    }
}

/// The m x m matrix acting as `t` on the positions `cols` and as the
/// identity elsewhere. Upper triangular because `cols` is ascending.
pub(crate) fn embed_at(t: &UpperTriangular, cols: &[usize], m: usize) -> UpperTriangular {
    let mut e = Matrix::identity(t.field(), m);
    for (a, &ca) in cols.iter().enumerate() {
        for (b, &cb) in cols.iter().enumerate().skip(a) {
            e.set(ca, cb, t.get(a, b));
        }
    }
    UpperTriangular::from_matrix_unchecked(e)
}
