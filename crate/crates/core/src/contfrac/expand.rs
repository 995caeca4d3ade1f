//! Expansion of rationals (Euclid) and quadratic irrationals (surd recurrence).

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::ContinuedFraction;
use crate::error::{Error, Result};
use crate::exact::int::{exact_sqrt, floor_div, isqrt};
use crate::exact::{QuadraticReal, Rational};

const MIN_MAX_TERMS: usize = 10_000;

/// Complete quotient `(P + sqrt(D)) / Q` with `Q | D - P^2` and `D` not a square.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SurdState {
    pub p: BigInt,
    pub q: BigInt,
    pub d: BigInt,
}

impl SurdState {
    /// Rewrites an irrational `x + y*sqrt(d)` in surd form.
    pub fn from_quadratic(u: &QuadraticReal) -> Result<Self> {
        if u.is_rational() {
            return Err(Error::MalformedContinuedFraction("surd form needs an irrational value".into()));
        }
        let (mut p, s, mut d, mut q) = u.surd_parts();
        if s < 0 {
            p = -p;
            q = -q;
        }
        if !(&d - &p * &p).is_multiple_of(&q) {
            let aq = q.abs();
            p *= &aq;
            d *= &aq * &aq;
            q *= aq;
        }
        debug_assert!(exact_sqrt(&d).is_none());
        Ok(Self { p, q, d })
    }

    /// `floor((P + sqrt(D)) / Q)` for either sign of `Q`.
    pub fn partial_quotient(&self, root: &BigInt) -> BigInt {
        if self.q.is_positive() {
            floor_div(&(&self.p + root), &self.q)
        } else {
            // (P + sqrt D)/Q = (-P - sqrt D)/(-Q), and -sqrt D lies in (-r-1, -r)
            floor_div(&(-&self.p - root - 1), &(-&self.q))
        }
    }

    /// State after subtracting `a` and inverting.
    pub fn advance(&self, a: &BigInt) -> Self {
        let p = a * &self.q - &self.p;
        let q = (&self.d - &p * &p) / &self.q;
        Self { p, q, d: self.d.clone() }
    }
}

/// Default safety limit on the number of surd steps: ten times a generous
/// estimate of transient plus period length, and never below 10^4.
pub fn default_max_terms(state: &SurdState) -> usize {
    let root = isqrt(&state.d);
    let bits = |n: &BigInt| n.bits() as u128 + 1;
    let estimate = root
        .to_u128()
        .map(|r| (r + 1).saturating_mul(bits(&state.d)))
        .unwrap_or(u128::MAX)
        .saturating_add(4 * (bits(&state.p) + bits(&state.q)));
    let limit = estimate.saturating_mul(10).max(MIN_MAX_TERMS as u128);
    usize::try_from(limit).unwrap_or(usize::MAX)
}

/// Canonical continued fraction of a rational or quadratic irrational.
pub fn cf_expand(u: &QuadraticReal) -> Result<ContinuedFraction> {
    cf_expand_with_limit(u, None)
}

/// As [`cf_expand`] with an explicit cap on surd steps.
pub fn cf_expand_with_limit(u: &QuadraticReal, max_terms: Option<usize>) -> Result<ContinuedFraction> {
    match u.as_rational() {
        Some(r) => Ok(expand_rational(r)),
        None => expand_surd(SurdState::from_quadratic(u)?, max_terms),
    }
}

fn expand_rational(r: &Rational) -> ContinuedFraction {
    let (mut n, mut d) = (r.numer().clone(), r.denom().clone());
    let mut terms = Vec::new();
    while !d.is_zero() {
        let (a, rem) = n.div_mod_floor(&d);
        terms.push(a);
        n = std::mem::replace(&mut d, rem);
    }
    ContinuedFraction::finite(terms).expect("Euclid yields positive inner quotients")
}

fn expand_surd(start: SurdState, max_terms: Option<usize>) -> Result<ContinuedFraction> {
    let limit = max_terms.unwrap_or_else(|| default_max_terms(&start));
    let root = isqrt(&start.d);
    let mut seen: HashMap<(BigInt, BigInt), usize> = HashMap::new();
    let mut quotients: Vec<BigInt> = Vec::new();
    let mut state = start;
    loop {
        let key = (state.p.clone(), state.q.clone());
        if let Some(&first) = seen.get(&key) {
            let k = quotients.len();
            let (pre, period) = if first == 0 {
                // purely periodic: keep a0 in the preperiod and rotate
                let mut period = quotients[1..].to_vec();
                period.push(quotients[0].clone());
                (vec![quotients[0].clone()], period)
            } else {
                (quotients[..first].to_vec(), quotients[first..k].to_vec())
            };
            return ContinuedFraction::new(pre, period);
        }
        if quotients.len() >= limit {
            return Err(Error::MaxTermsExhausted(limit));
        }
        seen.insert(key, quotients.len());
        let a = state.partial_quotient(&root);
        state = state.advance(&a);
        quotients.push(a);
    }
}
