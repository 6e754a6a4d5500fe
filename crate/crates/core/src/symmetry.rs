//! Linear isometries of the NRT space: the group (T_m)^n ⋊ S_n.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Elem, Field, Matrix, UpperTriangular};
use crate::error::{Error, Result};
use crate::metric::{nrt_weight_chain, CodeSpace};

/// An element `(π, (T_1, …, T_n))` of the isometry group.
///
/// Acting on `v = (v_1 | … | v_n)`, block `j` of the image is
/// `T_j · v_{π⁻¹(j)}`: input chain `i` moves to position `π(i)` and is then
/// transformed by the triangular matrix sitting at that position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isometry {
    space: CodeSpace,
    /// perm[i] = π(i), 0-based.
    perm: Vec<usize>,
    blocks: Vec<UpperTriangular>,
}

fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::InvalidPermutation(format!("expected {n} images, got {}", perm.len())));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return Err(Error::InvalidPermutation(format!("{perm:?} is not a permutation of 0..{n}")));
        }
        seen[p] = true;
    }
    Ok(())
}

impl Isometry {
    /// `perm` holds 0-based images; `blocks[j]` is the matrix applied at
    /// output position `j`.
    pub fn new(space: &CodeSpace, perm: Vec<usize>, blocks: Vec<UpperTriangular>) -> Result<Isometry> {
        check_permutation(&perm, space.chains())?;
        if blocks.len() != space.chains() {
            return Err(Error::DimensionMismatch(format!(
                "expected {} triangular blocks, got {}",
                space.chains(),
                blocks.len()
            )));
        }
        for t in &blocks {
            if t.size() != space.chain_len() || t.field() != space.field() {
                return Err(Error::SpaceMismatch(format!(
                    "block of size {} over {} in a space with m = {} over {}",
                    t.size(),
                    t.field(),
                    space.chain_len(),
                    space.field()
                )));
            }
        }
        Ok(Isometry { space: space.clone(), perm, blocks })
    }

    pub fn identity(space: &CodeSpace) -> Isometry {
        let t = UpperTriangular::identity(space.field(), space.chain_len());
        Isometry { space: space.clone(), perm: (0..space.chains()).collect(), blocks: vec![t; space.chains()] }
    }

    /// A pure chain permutation (all T_j = I).
    pub fn permutation(space: &CodeSpace, perm: Vec<usize>) -> Result<Isometry> {
        let t = UpperTriangular::identity(space.field(), space.chain_len());
        Isometry::new(space, perm, vec![t; space.chains()])
    }

    /// A single triangular matrix acting on chain `j`, identity elsewhere.
    pub fn on_block(space: &CodeSpace, j: usize, t: UpperTriangular) -> Result<Isometry> {
        let mut iso = Isometry::identity(space);
        if j >= space.chains() {
            return Err(Error::DimensionMismatch(format!("chain {} out of range", j + 1)));
        }
        iso.blocks[j] = t;
        Isometry::new(space, iso.perm, iso.blocks)
    }

    pub fn space(&self) -> &CodeSpace {
        &self.space
    }

    /// 0-based images of the chain permutation.
    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn blocks(&self) -> &[UpperTriangular] {
        &self.blocks
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p) && self.blocks.iter().all(|t| t.is_identity())
    }

    pub(crate) fn apply_row(&self, row: &[Elem], out: &mut [Elem]) {
        let m = self.space.chain_len();
        for (i, &j) in self.perm.iter().enumerate() {
            let dst = &mut out[j * m..(j + 1) * m];
            dst.copy_from_slice(&row[i * m..(i + 1) * m]);
            self.blocks[j].apply_in_place(dst);
        }
    }

    /// Applies the isometry to every row of `g`.
    pub fn apply(&self, g: &Matrix) -> Result<Matrix> {
        self.space.check_matrix(g)?;
        let mut out = Matrix::zeros(g.field(), g.rows(), g.cols());
        for r in 0..g.rows() {
            self.apply_row(g.row(r), out.row_mut(r));
        }
        Ok(out)
    }

    /// `self ∘ other`: applying the result equals applying `other` first.
    pub fn compose(&self, other: &Isometry) -> Result<Isometry> {
        self.space.check_same(&other.space)?;
        let n = self.space.chains();
        let mut inv_self = vec![0; n];
        for (i, &p) in self.perm.iter().enumerate() {
            inv_self[p] = i;
        }
        let perm = other.perm.iter().map(|&p| self.perm[p]).collect();
        let blocks = (0..n)
            .map(|j| self.blocks[j].mul(&other.blocks[inv_self[j]]))
            .collect::<Result<Vec<_>>>()?;
        Ok(Isometry { space: self.space.clone(), perm, blocks })
    }

    pub fn inverse(&self) -> Isometry {
        let n = self.space.chains();
        let mut perm = vec![0; n];
        for (i, &p) in self.perm.iter().enumerate() {
            perm[p] = i;
        }
        let blocks = (0..n).map(|j| self.blocks[self.perm[j]].inverse()).collect();
        Isometry { space: self.space.clone(), perm, blocks }
    }

    /// Pseudo-random isometry, fully determined by `seed`: uniform
    /// permutation, uniform nonzero diagonals, uniform strict upper parts.
    pub fn random(space: &CodeSpace, seed: u64) -> Isometry {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random_isometry_with(space, &mut rng)
    }
}

pub(crate) fn random_isometry_with<R: Rng>(space: &CodeSpace, rng: &mut R) -> Isometry {
    let n = space.chains();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let blocks = (0..n).map(|_| random_triangular(space.field(), space.chain_len(), rng)).collect();
    Isometry { space: space.clone(), perm, blocks }
}

pub(crate) fn random_triangular<R: Rng>(field: &Field, m: usize, rng: &mut R) -> UpperTriangular {
    let q = field.order();
    let mut t = Matrix::zeros(field, m, m);
    for i in 0..m {
        t.set(i, i, rng.gen_range(1..q));
        for j in i + 1..m {
            t.set(i, j, rng.gen_range(0..q));
        }
    }
    UpperTriangular::from_matrix_unchecked(t)
}

/// Returns `T ∈ T_m` with `T v = e_r`, where `r` is the weight of `v`.
///
/// Row `r` of `T` is `v_r⁻¹ e_r`; rows `i < r` are `e_i - v_i v_r⁻¹ e_r`.
pub fn map_to_canonical(v: &[Elem], field: &Field) -> Result<UpperTriangular> {
    let r = nrt_weight_chain(v);
    if r == 0 {
        return Err(Error::ZeroVector);
    }
    let m = v.len();
    let inv = field.inv(v[r - 1])?;
    let mut t = Matrix::identity(field, m);
    t.set(r - 1, r - 1, inv);
    for (i, &x) in v[..r - 1].iter().enumerate() {
        if x != 0 {
            t.set(i, r - 1, field.neg(field.mul(x, inv)));
        }
    }
    Ok(UpperTriangular::from_matrix_unchecked(t))
}

/// True iff column `j` (1-based) of `t` is `e_j`, i.e. `t` fixes `e_j`.
pub fn stabilizes_canonical(t: &UpperTriangular, j: usize) -> bool {
    if j == 0 || j > t.size() {
        return false;
    }
    (0..t.size()).all(|i| t.get(i, j - 1) == u32::from(i == j - 1))
}
