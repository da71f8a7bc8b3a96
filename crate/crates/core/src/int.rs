//! Arbitrary-precision integer helpers shared by the word and matrix code.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Exact integer used for every coefficient in the crate.
pub type Int = BigInt;

/// Extended Euclid: returns `(g, x, y)` with `x*a + y*b = g`, `g = gcd(a, b) >= 0`.
pub fn ext_gcd(a: &Int, b: &Int) -> (Int, Int, Int) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (Int::one(), Int::zero());
    let (mut old_t, mut t) = (Int::zero(), Int::one());
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let next_r = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Splits `c` as `q*m + r` with `0 <= r < m`; `m` must be positive.
pub fn div_rem_euclid(c: &Int, m: &Int) -> (Int, Int) {
    debug_assert!(m.is_positive());
    c.div_mod_floor(m)
}

pub fn is_unit(c: &Int) -> bool {
    c.is_one()
}
