mod common;

use common::{codewords, gf, random, random_sparse_rows};
use nrtform::{Matrix, UpperTriangular};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn matrix_strategy() -> impl Strategy<Value = Matrix> {
    (prop::sample::select(vec![2u64, 3, 4, 5, 8, 9]), 0usize..6, 1usize..7, any::<u64>())
        .prop_map(|(q, r, c, seed)| random_sparse_rows(&gf(q), r, c, &mut ChaCha8Rng::seed_from_u64(seed)))
}

proptest! {
    #[test]
    fn rref_is_idempotent_and_keeps_the_row_space(g in matrix_strategy()) {
        let r = g.rref();
        prop_assert_eq!(r.reduced.rref().reduced, r.reduced.clone());
        prop_assert_eq!(r.transform.mul(&g).unwrap(), r.reduced.clone());
        prop_assert!(r.transform.is_invertible());
        prop_assert_eq!(codewords(&g), codewords(&r.reduced));
        prop_assert_eq!(r.pivots.len(), r.rank);
        for (i, &c) in r.pivots.iter().enumerate() {
            prop_assert_eq!(r.reduced.get(i, c), 1);
            for other in 0..g.rows() {
                if other != i {
                    prop_assert_eq!(r.reduced.get(other, c), 0);
                }
            }
        }
    }

    #[test]
    fn rank_matches_transpose_and_code_size(g in matrix_strategy()) {
        prop_assert_eq!(g.rank(), g.transpose().rank());
        let size = codewords(&g).len() as u64;
        prop_assert_eq!(size, u64::from(g.field().order()).pow(g.rank() as u32));
    }

    #[test]
    fn multiplication_is_associative(seed in any::<u64>(), q in prop::sample::select(vec![2u64, 3, 4, 7])) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = gf(q);
        let (a, b, c) = (random(&f, 3, 4, &mut rng), random(&f, 4, 2, &mut rng), random(&f, 2, 5, &mut rng));
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().transpose(), b.transpose().mul(&a.transpose()).unwrap());
    }

    #[test]
    fn triangular_group_laws(seed in any::<u64>(), q in prop::sample::select(vec![2u64, 3, 4, 5, 9]), m in 1usize..7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = gf(q);
        let t = common::random_triangular(&f, m, &mut rng);
        let u = common::random_triangular(&f, m, &mut rng);
        prop_assert!(t.mul(&t.inverse()).unwrap().is_identity());
        prop_assert!(UpperTriangular::new(t.mul(&u).unwrap().into_matrix()).is_ok());
        let v = random(&f, 1, m, &mut rng).row(0).to_vec();
        prop_assert_eq!(t.apply(&u.apply(&v)), t.mul(&u).unwrap().apply(&v));
        let col = Matrix::from_vec(&f, m, 1, v.clone()).unwrap();
        prop_assert_eq!(t.matrix().mul(&col).unwrap().as_slice().to_vec(), t.apply(&v));
    }
}

#[test]
fn mismatched_shapes_are_rejected() {
    let f = gf(3);
    assert!(Matrix::zeros(&f, 2, 3).mul(&Matrix::zeros(&f, 2, 3)).is_err());
    assert!(Matrix::zeros(&f, 2, 2).mul(&Matrix::zeros(&gf(5), 2, 2)).is_err());
    assert!(Matrix::from_rows(&f, &[vec![0, 1], vec![0]]).is_err());
    assert!(Matrix::from_rows(&f, &[[0, 3]]).is_err());
}

#[test]
fn canonical_vectors_are_one_based() {
    let f = gf(2);
    assert_eq!(Matrix::canonical_vector(&f, 2, 4).unwrap().as_slice(), &[0, 1, 0, 0]);
    assert!(Matrix::canonical_vector(&f, 0, 4).is_err());
    assert!(Matrix::canonical_vector(&f, 5, 4).is_err());
}
