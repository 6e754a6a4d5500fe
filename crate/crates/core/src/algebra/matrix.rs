use std::fmt;

use super::field::{Elem, Field};
use crate::error::{Error, Result};

/// Dense row-major matrix over a finite field.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

/// Output of [`Matrix::rref`].
#[derive(Clone, Debug)]
pub struct Rref {
    /// Reduced row echelon form.
    pub reduced: Matrix,
    pub rank: usize,
    /// Invertible transform with `reduced = transform * input`.
    pub transform: Matrix,
    /// Pivot column of each of the first `rank` rows (0-based).
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field: field.clone(), rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from row-major data, validating every entry.
    pub fn from_vec(field: &Field, rows: usize, cols: usize, data: Vec<Elem>) -> Result<Matrix> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries supplied for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(&bad) = data.iter().find(|&&x| !field.contains(x as u64)) {
            return Err(Error::InvalidElement { value: bad as u64, q: field.order() });
        }
        Ok(Matrix { field: field.clone(), rows, cols, data })
    }

    pub fn from_rows<R: AsRef<[Elem]>>(field: &Field, rows: &[R]) -> Result<Matrix> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {} has {} entries, expected {cols}",
                    i + 1,
                    r.len()
                )));
            }
            data.extend_from_slice(r);
        }
        Matrix::from_vec(field, rows.len(), cols, data)
    }

    /// The 1 x len row vector e_i, with `i` 1-based.
    pub fn canonical_vector(field: &Field, i: usize, len: usize) -> Result<Matrix> {
        if i == 0 || i > len {
            return Err(Error::DimensionMismatch(format!("index {i} outside 1..={len}")));
        }
        let mut v = Matrix::zeros(field, 1, len);
        v.data[i - 1] = 1;
        Ok(v)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn as_slice(&self) -> &[Elem] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elem {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of bounds");
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of bounds");
        assert!(self.field.contains(v as u64), "{v} is not an element of {}", self.field);
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    #[inline]
    pub(crate) fn row_mut(&mut self, r: usize) -> &mut [Elem] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_matrix(&self, r: usize) -> Matrix {
        Matrix { field: self.field.clone(), rows: 1, cols: self.cols, data: self.row(r).to_vec() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn row_is_zero(&self, r: usize) -> bool {
        self.row(r).iter().all(|&x| x == 0)
    }

    /// Copy of rows `row_range` and columns `col_range`.
    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Matrix {
        assert!(rows.end <= self.rows && cols.end <= self.cols);
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for r in rows.clone() {
            data.extend_from_slice(&self.row(r)[cols.clone()]);
        }
        Matrix { field: self.field.clone(), rows: rows.len(), cols: cols.len(), data }
    }

    /// Copy with the given columns (in the given order).
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for r in 0..self.rows {
            let row = self.row(r);
            data.extend(cols.iter().map(|&c| row[c]));
        }
        Matrix { field: self.field.clone(), rows: self.rows, cols: cols.len(), data }
    }

    /// Copy with rows permuted: row i of the result is row `order[i]` of self.
    pub fn permute_rows(&self, order: &[usize]) -> Matrix {
        assert_eq!(order.len(), self.rows);
        let mut data = Vec::with_capacity(self.data.len());
        for &r in order {
            data.extend_from_slice(self.row(r));
        }
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    fn check_field(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch { left: self.field.order(), right: other.field.order() });
        }
        Ok(())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.data[i * self.cols + l];
                if a == 0 {
                    continue;
                }
                let src = other.row(l);
                let dst = out.row_mut(i);
                for (d, &b) in dst.iter_mut().zip(src) {
                    if b != 0 {
                        *d = f.add(*d, f.mul(a, b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        out
    }

    // Elementary row operations.

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub(crate) fn scale_row(&mut self, r: usize, s: Elem) {
        let f = self.field.clone();
        for x in self.row_mut(r) {
            *x = f.mul(*x, s);
        }
    }

    /// row[dst] += s * row[src]
    pub(crate) fn add_row_multiple(&mut self, dst: usize, src: usize, s: Elem) {
        if s == 0 {
            return;
        }
        debug_assert_ne!(dst, src);
        let f = self.field.clone();
        let cols = self.cols;
        let (d, srow) = if dst < src {
            let (lo, hi) = self.data.split_at_mut(src * cols);
            (&mut lo[dst * cols..(dst + 1) * cols], &hi[..cols])
        } else {
            let (lo, hi) = self.data.split_at_mut(dst * cols);
            (&mut hi[..cols], &lo[src * cols..(src + 1) * cols])
        };
        for (x, &y) in d.iter_mut().zip(srow) {
            if y != 0 {
                *x = f.add(*x, f.mul(s, y));
            }
        }
    }

    /// Reduced row echelon form together with the row transform that produces it.
    pub fn rref(&self) -> Rref {
        let f = self.field.clone();
        let mut reduced = self.clone();
        let mut transform = Matrix::identity(&f, self.rows);
        let mut pivots = Vec::new();
        let mut rank = 0;
        for c in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let Some(pr) = (rank..self.rows).find(|&r| reduced.get(r, c) != 0) else {
                continue;
            };
            reduced.swap_rows(rank, pr);
            transform.swap_rows(rank, pr);
            let inv = f.inv(reduced.get(rank, c)).expect("pivot is nonzero");
            reduced.scale_row(rank, inv);
            transform.scale_row(rank, inv);
            for r in 0..self.rows {
                let v = reduced.get(r, c);
                if r != rank && v != 0 {
                    let s = f.neg(v);
                    reduced.add_row_multiple(r, rank, s);
                    transform.add_row_multiple(r, rank, s);
                }
            }
            pivots.push(c);
            rank += 1;
        }
        Rref { reduced, rank, transform, pivots }
    }

    pub fn rank(&self) -> usize {
        row_rank(&self.field, self.rows, self.cols, |r, c| self.get(r, c))
    }

    /// Rank of the submatrix on the given row and column ranges.
    pub fn rank_of(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> usize {
        let (r0, c0) = (rows.start, cols.start);
        row_rank(&self.field, rows.len(), cols.len(), |r, c| self.get(r0 + r, c0 + c))
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }
}

fn row_rank(f: &Field, rows: usize, cols: usize, entry: impl Fn(usize, usize) -> Elem) -> usize {
    // eliminate on a column-major copy; blocks are narrow and tall
    let mut work: Vec<Vec<Elem>> = (0..cols).map(|c| (0..rows).map(|r| entry(r, c)).collect()).collect();
    let mut used = vec![false; rows];
    let mut rank = 0;
    for c in 0..cols {
        let Some(pr) = (0..rows).find(|&r| !used[r] && work[c][r] != 0) else {
            continue;
        };
        used[pr] = true;
        rank += 1;
        let inv = f.inv(work[c][pr]).expect("pivot is nonzero");
        for c2 in c + 1..cols {
            let factor = f.mul(work[c2][pr], inv);
            if factor == 0 {
                continue;
            }
            let (head, tail) = work.split_at_mut(c2);
            let pivot_col = &head[c];
            for (x, &y) in tail[0].iter_mut().zip(pivot_col) {
                if y != 0 {
                    *x = f.sub(*x, f.mul(factor, y));
                }
            }
        }
    }
    rank
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        write!(f, "{self}")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}
