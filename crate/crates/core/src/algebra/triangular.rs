use super::field::{Elem, Field};
use super::matrix::Matrix;
use crate::error::{Error, Result};

/// An invertible upper-triangular square matrix, i.e. an element of the
/// group T_m. Acts on column vectors; on a row-vector block `v` the action
/// is `v -> v T^t`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UpperTriangular(Matrix);

impl UpperTriangular {
    pub fn new(m: Matrix) -> Result<UpperTriangular> {
        if m.rows() != m.cols() {
            return Err(Error::NotUpperTriangular(format!("{}x{} is not square", m.rows(), m.cols())));
        }
        for i in 0..m.rows() {
            if m.get(i, i) == 0 {
                return Err(Error::NotUpperTriangular(format!("zero diagonal entry at ({0}, {0})", i + 1)));
            }
            for j in 0..i {
                if m.get(i, j) != 0 {
                    return Err(Error::NotUpperTriangular(format!(
                        "nonzero entry below the diagonal at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(UpperTriangular(m))
    }

    pub fn identity(field: &Field, m: usize) -> UpperTriangular {
        UpperTriangular(Matrix::identity(field, m))
    }

    pub(crate) fn from_matrix_unchecked(m: Matrix) -> UpperTriangular {
        debug_assert!(UpperTriangular::new(m.clone()).is_ok());
        UpperTriangular(m)
    }

    pub fn size(&self) -> usize {
        self.0.rows()
    }

    pub fn field(&self) -> &Field {
        self.0.field()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix {
        self.0
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.0.get(i, j)
    }

    pub fn is_identity(&self) -> bool {
        self.0 == Matrix::identity(self.field(), self.size())
    }

    /// Group product `self * other`.
    pub fn mul(&self, other: &UpperTriangular) -> Result<UpperTriangular> {
        Ok(UpperTriangular(self.0.mul(&other.0)?))
    }

    pub fn inverse(&self) -> UpperTriangular {
        let f = self.field().clone();
        let m = self.size();
        let mut inv = Matrix::zeros(&f, m, m);
        // back substitution, column by column of the inverse
        for j in 0..m {
            for i in (0..=j).rev() {
                let mut acc = if i == j { 1 } else { 0 };
                for l in i + 1..=j {
                    acc = f.sub(acc, f.mul(self.get(i, l), inv.get(l, j)));
                }
                let d = f.inv(self.get(i, i)).expect("diagonal is nonzero");
                inv.set(i, j, f.mul(acc, d));
            }
        }
        UpperTriangular(inv)
    }

    /// `T v`, with `v` read as a column vector of length `size()`.
    pub fn apply(&self, v: &[Elem]) -> Vec<Elem> {
        let mut out = v.to_vec();
        self.apply_in_place(&mut out);
        out
    }

    pub(crate) fn apply_in_place(&self, v: &mut [Elem]) {
        let f = self.field();
        let m = self.size();
        assert_eq!(v.len(), m);
        // row i only reads entries l >= i, so ascending order is safe in place
        for i in 0..m {
            let mut acc = 0;
            for (l, &x) in v.iter().enumerate().skip(i) {
                let t = self.get(i, l);
                if t != 0 && x != 0 {
                    acc = f.add(acc, f.mul(t, x));
                }
            }
            v[i] = acc;
        }
    }

    /// Embeds `self` (of size k) into T_m as `[[T, 0], [0, I]]`.
    pub fn embed(&self, m: usize) -> Result<UpperTriangular> {
        let k = self.size();
        if k > m {
            return Err(Error::DimensionMismatch(format!("cannot embed T_{k} into T_{m}")));
        }
        let mut out = Matrix::identity(self.field(), m);
        for i in 0..k {
            for j in i..k {
                out.set(i, j, self.get(i, j));
            }
        }
        Ok(UpperTriangular(out))
    }

    /// True when `self` lies in the embedded copy of T_k.
    pub fn in_embedded(&self, k: usize) -> bool {
        let m = self.size();
        (0..m).all(|i| {
            (i..m).all(|j| {
                let x = self.get(i, j);
                if i < k && j < k {
                    true
                } else if i == j {
                    x == 1
                } else {
                    x == 0
                }
            })
        })
    }
}
