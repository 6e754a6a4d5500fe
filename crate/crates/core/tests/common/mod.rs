//! Brute-force oracles shared by the integration tests. None of them call
//! into the reduction code; they work from the definitions directly.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use nrtform::codetools::random_matrix_with;
use nrtform::{Elem, Field, Matrix};
use rand::Rng;

pub fn gf(q: u64) -> Field {
    Field::new(q).unwrap()
}

pub fn random(field: &Field, rows: usize, cols: usize, rng: &mut impl Rng) -> Matrix {
    random_matrix_with(field, rows, cols, rng)
}

/// Random matrix with each row zeroed with probability 1/5, so rank
/// deficiency shows up often.
pub fn random_sparse_rows(field: &Field, rows: usize, cols: usize, rng: &mut impl Rng) -> Matrix {
    let mut g = random(field, rows, cols, rng);
    for r in 0..rows {
        if rng.gen_ratio(1, 5) {
            for c in 0..cols {
                g.set(r, c, 0);
            }
        }
    }
    g
}

/// All permutations of `0..k`.
pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

/// T_m-reducedness straight from the definition: some row order makes
/// every nonzero column `(c_1, …, c_{w-1}, 1, 0, …, 0)` with `w` strictly
/// increasing over the nonzero columns.
pub fn tm_reduced_exhaustive(m: &Matrix) -> bool {
    permutations(m.rows()).iter().any(|order| {
        let mut prev = 0;
        for c in 0..m.cols() {
            let col: Vec<Elem> = order.iter().map(|&r| m.get(r, c)).collect();
            let Some(last) = col.iter().rposition(|&x| x != 0) else { continue };
            if col[last] != 1 || last < prev {
                return false;
            }
            prev = last + 1;
        }
        true
    })
}

pub fn chain_weight(v: &[Elem]) -> usize {
    v.iter().rposition(|&x| x != 0).map_or(0, |i| i + 1)
}

pub fn nrt_weight_oracle(v: &[Elem], m: usize) -> usize {
    v.chunks(m).map(chain_weight).sum()
}

pub fn block_weights(v: &[Elem], m: usize) -> Vec<usize> {
    v.chunks(m).map(chain_weight).collect()
}

pub fn hamming_weight(v: &[Elem]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

/// Every codeword, by summing all `q^k` combinations of the generator rows.
pub fn codewords(g: &Matrix) -> HashSet<Vec<Elem>> {
    let f = g.field();
    let q = f.order();
    let k = g.rows();
    let mut coeffs = vec![0u32; k];
    let mut out = HashSet::new();
    loop {
        let mut word = vec![0; g.cols()];
        for (r, &a) in coeffs.iter().enumerate() {
            for (c, x) in word.iter_mut().enumerate() {
                *x = f.add(*x, f.mul(a, g.get(r, c)));
            }
        }
        out.insert(word);
        let mut i = 0;
        loop {
            if i == k {
                return out;
            }
            coeffs[i] += 1;
            if coeffs[i] < q {
                break;
            }
            coeffs[i] = 0;
            i += 1;
        }
    }
}

/// Histogram of `weight` over all codewords, indexed by weight.
pub fn distribution_by(g: &Matrix, max: usize, weight: impl Fn(&[Elem]) -> usize) -> Vec<u64> {
    let mut counts = vec![0u64; max + 1];
    for w in codewords(g) {
        counts[weight(&w)] += 1;
    }
    counts
}

pub fn nrt_distribution(g: &Matrix, m: usize) -> Vec<u64> {
    distribution_by(g, g.cols(), |w| nrt_weight_oracle(w, m))
}

pub fn attained_weights(g: &Matrix) -> BTreeSet<usize> {
    codewords(g).iter().map(|w| chain_weight(w)).filter(|&w| w > 0).collect()
}

/// Index of the single nonzero entry when it equals 1.
pub fn canonical_index(row: &[Elem]) -> Option<usize> {
    let nz: Vec<usize> = (0..row.len()).filter(|&i| row[i] != 0).collect();
    match nz[..] {
        [i] if row[i] == 1 => Some(i),
        _ => None,
    }
}

/// `[[I, *], [0, invertible]]` with an `s1 x s1` identity corner.
pub fn admissible_oracle(s: &Matrix, s1: usize) -> bool {
    let k = s.rows();
    let top_ok = (0..s1).all(|r| (0..s1).all(|c| s.get(r, c) == u32::from(r == c)));
    let bottom_left_zero = (s1..k).all(|r| (0..s1).all(|c| s.get(r, c) == 0));
    top_ok && bottom_left_zero && s.submatrix(s1..k, s1..k).rank() == k - s1
}

/// The `[[A, B], [J, 0]]` block shape, checked from its description.
/// Returns a reason on failure.
pub fn split_block_oracle(block: &Matrix, s1: usize) -> Result<(), String> {
    let (k, m) = (block.rows(), block.cols());
    let bottom: Vec<&[Elem]> = (s1..k).map(|r| block.row(r)).collect();
    let w = bottom.iter().map(|r| chain_weight(r)).max().unwrap_or(0);
    if w == 0 {
        return Err("bottom is zero".into());
    }
    let mut pivots = Vec::new();
    let mut ended = false;
    for row in &bottom {
        if chain_weight(row) == 0 {
            ended = true;
            continue;
        }
        if ended {
            return Err("zero bottom row above a nonzero one".into());
        }
        let Some(i) = canonical_index(row) else { return Err("J row not canonical".into()) };
        if pivots.last().is_some_and(|&p| p >= i) {
            return Err("J rows not in increasing weight".into());
        }
        pivots.push(i);
    }
    if !bottom.iter().any(|r| r[w - 1] != 0) {
        return Err("last column of J is zero".into());
    }
    for &p in &pivots {
        if (0..s1).any(|r| block.get(r, p) != 0) {
            return Err("A nonzero above J".into());
        }
    }
    if !tm_reduced_exhaustive(&block.submatrix(0..s1, 0..w)) {
        return Err("A not T_m-reduced".into());
    }
    if !tm_reduced_exhaustive(&block.submatrix(0..s1, w..m)) {
        return Err("B not T_m-reduced".into());
    }
    Ok(())
}

/// Block `j` of `g` (chain length `m`).
pub fn block(g: &Matrix, m: usize, j: usize) -> Matrix {
    g.submatrix(0..g.rows(), j * m..(j + 1) * m)
}

/// Uniformly random invertible upper-triangular `m x m` matrix.
pub fn random_triangular(field: &Field, m: usize, rng: &mut impl Rng) -> nrtform::UpperTriangular {
    let q = field.order();
    let mut t = Matrix::zeros(field, m, m);
    for i in 0..m {
        t.set(i, i, rng.gen_range(1..q));
        for j in i + 1..m {
            t.set(i, j, rng.gen_range(0..q));
        }
    }
    nrtform::UpperTriangular::new(t).unwrap()
}
