//! Integer helpers: square roots, square-free parts, floor division.

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Trial divisors beyond this bound are not attempted on radicands that do
/// not fit in 64 bits.
const TRIAL_LIMIT: u64 = 1 << 21;

/// Floor of the square root of a non-negative integer.
///
/// # Panics
/// Panics if `n` is negative.
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative(), "isqrt of a negative integer");
    n.sqrt()
}

/// Exact square root when `n` is a perfect square.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = isqrt(n);
    (&r * &r == *n).then_some(r)
}

pub fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_floor(b)
}

/// Splits a positive integer as `n = s^2 * core` with `core` square-free.
pub fn squarefree_decompose(n: &BigInt) -> Result<(BigInt, u64)> {
    assert!(n.is_positive(), "square-free decomposition of a non-positive integer");
    if let Some(small) = n.to_u64() {
        let (s, core) = squarefree_u64(small);
        return Ok((BigInt::from(s), core));
    }

    let mut rest = n.clone();
    let mut root = BigInt::one();
    let mut core = BigInt::one();
    let mut p: u64 = 2;
    while rest.to_u64().is_none() {
        if p > TRIAL_LIMIT {
            break;
        }
        let bp = BigInt::from(p);
        if &bp * &bp * &bp > rest {
            break;
        }
        let mut e = 0u32;
        while (&rest % p).is_zero() {
            rest /= p;
            e += 1;
        }
        if e > 0 {
            root *= bp.pow(e / 2);
            if e % 2 == 1 {
                core *= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }

    if let Some(small) = rest.to_u64() {
        let (s, c) = squarefree_u64(small);
        root *= s;
        core *= c;
    } else {
        let bp = BigInt::from(p);
        if let Some(r) = exact_sqrt(&rest) {
            // every prime factor of `rest` exceeds `p`
            root *= r;
        } else if &bp * &bp * &bp > rest {
            core *= rest;
        } else {
            return Err(Error::RadicandTooLarge);
        }
    }
    let core = core.to_u64().ok_or(Error::RadicandTooLarge)?;
    Ok((root, core))
}

fn squarefree_u64(mut n: u64) -> (u64, u64) {
    let mut root = 1u64;
    let mut core = 1u64;
    let mut p = 2u64;
    while (p as u128).pow(3) <= n as u128 {
        let mut e = 0u32;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            root *= p.pow(e / 2);
            if e % 2 == 1 {
                core *= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    // at most two prime factors remain, each at least p
    let r = n.sqrt();
    if n > 1 && r * r == n {
        root *= r;
    } else {
        core *= n;
    }
    (root, core)
}

pub fn is_squarefree(d: u64) -> bool {
    d != 0 && squarefree_u64(d).0 == 1
}
