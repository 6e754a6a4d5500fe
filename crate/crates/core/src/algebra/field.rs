//! Exact arithmetic in GF(q) for prime powers q <= 2^16.
//!
//! Elements are encoded as integers in `[0, q)`. For an extension field
//! GF(p^e) the base-p digits of the integer are the coefficients of the
//! polynomial representative, least significant digit = constant term.
//! Prime fields use plain modular arithmetic; extension fields multiply via
//! discrete-log tables over a primitive element.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A field element, encoded as described in the module docs.
pub type Elem = u32;

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 16;

/// Handle to a finite field. Cloning is cheap; all clones share tables.
#[derive(Clone)]
pub struct Field {
    inner: Arc<Inner>,
}

struct Inner {
    q: u32,
    p: u32,
    e: u32,
    /// Monic modulus, constant term first. Empty for prime fields.
    modulus: Vec<u32>,
    /// exp[i] = g^i for i in 0..2(q-1); empty for prime fields.
    exp: Vec<u32>,
    /// log[a] for a != 0; empty for prime fields.
    log: Vec<u32>,
}

impl Field {
    /// Builds GF(q). For q = p^e with e > 1 the modulus is the smallest monic
    /// irreducible of degree e when coefficients are read as a base-p integer
    /// with the constant term as least significant digit.
    pub fn new(q: u64) -> Result<Field> {
        if q > MAX_ORDER {
            return Err(Error::OrderTooLarge(q));
        }
        let (p, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        let (p, e, q) = (p as u32, e, q as u32);
        if e == 1 {
            return Ok(Field {
                inner: Arc::new(Inner { q, p, e, modulus: Vec::new(), exp: Vec::new(), log: Vec::new() }),
            });
        }
        let modulus = smallest_irreducible(p, e);
        let (exp, log) = build_log_tables(p, e, &modulus);
        Ok(Field { inner: Arc::new(Inner { q, p, e, modulus, exp, log }) })
    }

    pub fn order(&self) -> u32 {
        self.inner.q
    }

    pub fn characteristic(&self) -> u32 {
        self.inner.p
    }

    pub fn degree(&self) -> u32 {
        self.inner.e
    }

    /// Coefficients of the defining polynomial, constant term first
    /// (length e + 1, monic). Empty for prime fields.
    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    pub fn contains(&self, a: u64) -> bool {
        a < self.inner.q as u64
    }

    /// Validates a raw integer as an element.
    pub fn element(&self, a: u64) -> Result<Elem> {
        if self.contains(a) {
            Ok(a as Elem)
        } else {
            Err(Error::InvalidElement { value: a, q: self.inner.q })
        }
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let f = &*self.inner;
        if f.e == 1 {
            let s = a + b;
            if s >= f.p {
                s - f.p
            } else {
                s
            }
        } else if f.p == 2 {
            a ^ b
        } else {
            self.digitwise(a, b, |x, y, p| (x + y) % p)
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        let f = &*self.inner;
        if a == 0 {
            0
        } else if f.e == 1 {
            f.p - a
        } else if f.p == 2 {
            a
        } else {
            self.digitwise(0, a, |_, y, p| (p - y) % p)
        }
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        let f = &*self.inner;
        if f.e == 1 {
            if a >= b {
                a - b
            } else {
                a + f.p - b
            }
        } else if f.p == 2 {
            a ^ b
        } else {
            self.digitwise(a, b, |x, y, p| (x + p - y) % p)
        }
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        let f = &*self.inner;
        if a == 0 || b == 0 {
            return 0;
        }
        if f.e == 1 {
            ((a as u64 * b as u64) % f.p as u64) as Elem
        } else {
            f.exp[(f.log[a as usize] + f.log[b as usize]) as usize]
        }
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        let f = &*self.inner;
        if f.e == 1 {
            Ok(self.pow(a, (f.p - 2) as u64))
        } else {
            let order = f.q - 1;
            Ok(f.exp[((order - f.log[a as usize]) % order) as usize])
        }
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Elem, mut k: u64) -> Elem {
        let mut base = a;
        let mut acc = 1;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    fn digitwise(&self, a: Elem, b: Elem, op: impl Fn(u32, u32, u32) -> u32) -> Elem {
        let p = self.inner.p;
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.inner.e {
            out += op(a % p, b % p, p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        // the modulus is a deterministic function of q
        self.inner.q == other.inner.q
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.inner.q)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.inner.q)
    }
}

/// Returns (p, e) with q = p^e, or None when q is not a prime power.
pub(crate) fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = smallest_prime_factor(q);
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

fn smallest_prime_factor(n: u64) -> u64 {
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return d;
        }
        d += 1;
    }
    n
}

fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    while n > 1 {
        let p = smallest_prime_factor(n);
        out.push(p);
        while n.is_multiple_of(p) {
            n /= p;
        }
    }
    out
}

// Polynomials over GF(p): coefficient vectors, constant term first.

fn poly_rem(num: &[u32], den: &[u32], p: u32) -> Vec<u32> {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    let lead_inv = {
        let l = den[dd] as u64;
        // p is prime so l^(p-2) is the inverse
        let mut acc = 1u64;
        let mut base = l;
        let mut k = p as u64 - 2;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * base % p as u64;
            }
            base = base * base % p as u64;
            k >>= 1;
        }
        acc as u32
    };
    while r.len() > dd {
        let top = *r.last().unwrap();
        if top != 0 {
            let c = (top as u64 * lead_inv as u64 % p as u64) as u32;
            let shift = r.len() - 1 - dd;
            for (i, &d) in den.iter().enumerate() {
                let sub = (c as u64 * d as u64 % p as u64) as u32;
                r[shift + i] = (r[shift + i] + p - sub) % p;
            }
        }
        r.pop();
    }
    r
}

fn digits(mut code: u32, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(code % p);
        code /= p;
    }
    out
}

fn undigits(coeffs: &[u32], p: u32) -> u32 {
    coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let e = f.len() - 1;
    for d in 1..=e / 2 {
        for low in 0..p.pow(d as u32) {
            let mut g = digits(low, p, d);
            g.push(1);
            if poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn smallest_irreducible(p: u32, e: u32) -> Vec<u32> {
    (0..p.pow(e))
        .map(|low| {
            let mut f = digits(low, p, e as usize);
            f.push(1);
            f
        })
        .find(|f| is_irreducible(f, p))
        .expect("an irreducible polynomial of every degree exists")
}

fn mul_mod(a: u32, b: u32, p: u32, modulus: &[u32]) -> u32 {
    let e = modulus.len() - 1;
    let (da, db) = (digits(a, p, e), digits(b, p, e));
    let mut prod = vec![0u32; 2 * e - 1];
    for (i, &x) in da.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    undigits(&poly_rem(&prod, modulus, p), p)
}

fn pow_mod(a: u32, mut k: u64, p: u32, modulus: &[u32]) -> u32 {
    let (mut base, mut acc) = (a, 1);
    while k > 0 {
        if k & 1 == 1 {
            acc = mul_mod(acc, base, p, modulus);
        }
        base = mul_mod(base, base, p, modulus);
        k >>= 1;
    }
    acc
}

fn build_log_tables(p: u32, e: u32, modulus: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let q = p.pow(e);
    let order = (q - 1) as u64;
    let factors = distinct_prime_factors(order);
    let g = (2..q)
        .find(|&g| factors.iter().all(|&r| pow_mod(g, order / r, p, modulus) != 1))
        .expect("the multiplicative group is cyclic");
    let mut exp = vec![0u32; 2 * (q as usize - 1)];
    let mut log = vec![0u32; q as usize];
    let mut x = 1;
    for i in 0..q as usize - 1 {
        exp[i] = x;
        exp[i + q as usize - 1] = x;
        log[x as usize] = i as u32;
        x = mul_mod(x, g, p, modulus);
    }
    (exp, log)
}
