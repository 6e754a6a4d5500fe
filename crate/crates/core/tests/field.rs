mod common;

use common::gf;
use nrtform::{Elem, Error, Field};
use proptest::prelude::*;

const ORDERS: [u64; 13] = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 256];

fn digits(mut a: u32, p: u32, e: usize) -> Vec<u32> {
    (0..e)
        .map(|_| {
            let d = a % p;
            a /= p;
            d
        })
        .collect()
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &x| acc * p + x)
}

/// Schoolbook polynomial product reduced by the field's modulus.
fn poly_mul(f: &Field, a: Elem, b: Elem) -> Elem {
    let (p, e) = (f.characteristic(), f.degree() as usize);
    let (da, db) = (digits(a, p, e), digits(b, p, e));
    let mut prod = vec![0u32; 2 * e];
    for i in 0..e {
        for j in 0..e {
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        }
    }
    let modulus = f.modulus();
    for deg in (e..2 * e).rev() {
        let c = prod[deg];
        if c != 0 {
            for (i, &mc) in modulus.iter().enumerate().take(e) {
                let idx = deg - e + i;
                prod[idx] = (prod[idx] + (p - c) * mc % p) % p;
            }
            prod[deg] = 0;
        }
    }
    undigits(&prod[..e], p)
}

fn poly_add(f: &Field, a: Elem, b: Elem) -> Elem {
    let (p, e) = (f.characteristic(), f.degree() as usize);
    let s: Vec<u32> = digits(a, p, e).iter().zip(digits(b, p, e)).map(|(x, y)| (x + y) % p).collect();
    undigits(&s, p)
}

#[test]
fn arithmetic_matches_polynomial_oracle_exhaustively() {
    for q in ORDERS {
        let f = gf(q);
        for a in 0..f.order() {
            for b in 0..f.order() {
                assert_eq!(f.add(a, b), poly_add(&f, a, b), "GF({q}) {a}+{b}");
                assert_eq!(f.mul(a, b), poly_mul(&f, a, b), "GF({q}) {a}*{b}");
                assert_eq!(f.sub(f.add(a, b), b), a);
            }
            assert_eq!(f.add(a, f.neg(a)), 0);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1, "GF({q}) inverse of {a}");
            }
        }
    }
}

#[test]
fn small_fields_satisfy_the_axioms_exhaustively() {
    for q in [2u64, 3, 4, 5, 7, 8, 9, 16] {
        let f = gf(q);
        let n = f.order();
        for a in 0..n {
            for b in 0..n {
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in 0..n {
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

#[test]
fn moduli_are_irreducible() {
    for q in ORDERS {
        let f = gf(q);
        if f.degree() == 1 {
            continue;
        }
        // no nonzero zero divisors
        for a in 1..f.order() {
            for b in 1..f.order() {
                assert_ne!(poly_mul(&f, a, b), 0, "GF({q})");
            }
        }
    }
}

#[test]
fn multiplicative_group_is_cyclic_of_order_q_minus_1() {
    for q in ORDERS {
        let f = gf(q);
        let n = u64::from(f.order() - 1);
        for a in 1..f.order() {
            assert_eq!(f.pow(a, n), 1);
        }
        let has_generator = (1..f.order()).any(|a| (1..n).all(|k| f.pow(a, k) != 1));
        assert!(has_generator, "GF({q})");
    }
}

#[test]
fn construction_errors() {
    assert_eq!(Field::new(6).unwrap_err(), Error::NotPrimePower(6));
    assert_eq!(Field::new(1).unwrap_err(), Error::NotPrimePower(1));
    assert_eq!(Field::new(0).unwrap_err(), Error::NotPrimePower(0));
    assert!(matches!(Field::new(1 << 17), Err(Error::OrderTooLarge(_))));
    assert!(Field::new(65536).is_ok());
    assert!(Field::new(65521).is_ok());
    assert_eq!(gf(7).inv(0), Err(Error::DivisionByZero));
    assert_eq!(gf(7).element(7), Err(Error::InvalidElement { value: 7, q: 7 }));
}

fn any_large_field() -> impl Strategy<Value = Field> {
    prop::sample::select(vec![1024u64, 2187, 3125, 4096, 65536, 65521, 16807])
        .prop_map(|q| Field::new(q).unwrap())
}

proptest! {
    #[test]
    fn large_fields_satisfy_the_axioms(f in any_large_field(), a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let n = f.order();
        let (a, b, c) = (a % n, b % n, c % n);
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.sub(a, a), 0);
        if b != 0 {
            prop_assert_eq!(f.mul(f.div(a, b).unwrap(), b), a);
        }
        prop_assert_eq!(f.mul(a, b), poly_mul(&f, a, b));
    }
}
