//! Regular continued fractions `[a0; a1, a2, ...]` of rationals and quadratic
//! irrationals.
//!
//! A [`ContinuedFraction`] stores a non-empty preperiod (always holding `a0`)
//! followed by a possibly empty period. An empty period means the expansion is
//! finite. Canonical expansions have a minimal period, a minimal preperiod and,
//! when finite, a last quotient of at least 2 unless the expansion is a single
//! integer.

mod equivalence;
mod expand;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{QuadraticReal, Rational, UnimodularMatrix};
use crate::wire;

pub use equivalence::{
    equivalence_decide, recover_matrix, tail_equivalent, EquivalenceVerdict, VerdictKind,
};
pub use expand::{cf_expand, cf_expand_with_limit, default_max_terms, SurdState};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "CfWire")]
pub struct ContinuedFraction {
    #[serde(with = "wire::vec")]
    preperiod: Vec<BigInt>,
    #[serde(with = "wire::vec")]
    period: Vec<BigInt>,
}

#[derive(Deserialize)]
struct CfWire {
    #[serde(with = "wire::vec")]
    preperiod: Vec<BigInt>,
    #[serde(with = "wire::vec", default)]
    period: Vec<BigInt>,
}

impl TryFrom<CfWire> for ContinuedFraction {
    type Error = Error;
    fn try_from(w: CfWire) -> Result<Self> {
        ContinuedFraction::new(w.preperiod, w.period)
    }
}

impl ContinuedFraction {
    /// Validates the shape: non-empty preperiod and every quotient after the
    /// first at least 1. Non-canonical expansions are accepted.
    pub fn new(preperiod: Vec<BigInt>, period: Vec<BigInt>) -> Result<Self> {
        if preperiod.is_empty() {
            return Err(Error::MalformedContinuedFraction("empty preperiod".into()));
        }
        if let Some(bad) = preperiod[1..].iter().chain(&period).find(|a| !a.is_positive()) {
            return Err(Error::MalformedContinuedFraction(format!("inner quotient {bad} is not positive")));
        }
        Ok(Self { preperiod, period })
    }

    pub fn finite(terms: Vec<BigInt>) -> Result<Self> {
        Self::new(terms, Vec::new())
    }

    pub fn from_i64(preperiod: &[i64], period: &[i64]) -> Result<Self> {
        Self::new(
            preperiod.iter().map(|&a| BigInt::from(a)).collect(),
            period.iter().map(|&a| BigInt::from(a)).collect(),
        )
    }

    pub fn preperiod(&self) -> &[BigInt] {
        &self.preperiod
    }

    pub fn period(&self) -> &[BigInt] {
        &self.period
    }

    pub fn is_finite(&self) -> bool {
        self.period.is_empty()
    }

    /// Number of terms for a finite expansion, `None` when periodic.
    pub fn finite_len(&self) -> Option<usize> {
        self.is_finite().then_some(self.preperiod.len())
    }

    /// The integer part `a0`.
    pub fn integer_part(&self) -> &BigInt {
        &self.preperiod[0]
    }

    /// Partial quotient `a_k`, unrolling the period as needed.
    pub fn term(&self, k: usize) -> Option<&BigInt> {
        if k < self.preperiod.len() {
            return Some(&self.preperiod[k]);
        }
        if self.period.is_empty() {
            return None;
        }
        Some(&self.period[(k - self.preperiod.len()) % self.period.len()])
    }

    /// All partial quotients in order; infinite when periodic.
    pub fn terms(&self) -> impl Iterator<Item = &BigInt> + '_ {
        let tail: Box<dyn Iterator<Item = &BigInt>> = if self.period.is_empty() {
            Box::new(std::iter::empty())
        } else {
            Box::new(self.period.iter().cycle())
        };
        self.preperiod.iter().chain(tail)
    }

    pub fn is_canonical(&self) -> bool {
        if self.is_finite() {
            return self.preperiod.len() == 1 || self.preperiod.last().unwrap() >= &BigInt::from(2);
        }
        let p = self.period.len();
        let minimal_period = (1..p)
            .filter(|k| p.is_multiple_of(*k))
            .all(|k| (0..p).any(|i| self.period[i] != self.period[i % k]));
        let minimal_pre = self.preperiod.len() == 1 || self.preperiod.last() != self.period.last();
        minimal_period && minimal_pre
    }

    /// Same value, canonical representation.
    pub fn canonicalized(&self) -> Self {
        if self.is_finite() {
            let mut terms = self.preperiod.clone();
            while terms.len() > 1 && terms.last().unwrap().is_one() {
                terms.pop();
                *terms.last_mut().unwrap() += 1;
            }
            return Self { preperiod: terms, period: Vec::new() };
        }
        let p = self.period.len();
        let k = (1..=p)
            .find(|k| p.is_multiple_of(*k) && (0..p).all(|i| self.period[i] == self.period[i % k]))
            .unwrap();
        let mut period = self.period[..k].to_vec();
        let mut pre = self.preperiod.clone();
        while pre.len() > 1 && pre.last() == period.last() {
            pre.pop();
            period.rotate_right(1);
        }
        Self { preperiod: pre, period }
    }

    /// For a finite expansion, the other expansion of the same rational,
    /// whose length differs by one.
    pub(crate) fn alternate_finite(&self) -> Self {
        debug_assert!(self.is_finite());
        let mut terms = self.preperiod.clone();
        let last = terms.last().unwrap().clone();
        if terms.len() > 1 && last.is_one() {
            terms.pop();
            *terms.last_mut().unwrap() += 1;
        } else {
            *terms.last_mut().unwrap() -= 1;
            terms.push(BigInt::one());
        }
        Self { preperiod: terms, period: Vec::new() }
    }
}

/// `p / q` with `q > 0` and `gcd(p, q) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Convergent {
    #[serde(with = "wire")]
    pub p: BigInt,
    #[serde(with = "wire")]
    pub q: BigInt,
}

impl Convergent {
    pub fn value(&self) -> Rational {
        Rational::new(self.p.clone(), self.q.clone())
    }
}

/// Running `(p_k, p_{k-1}, q_k, q_{k-1})` starting from the seeds
/// `p_{-1} = 1, p_{-2} = 0, q_{-1} = 0, q_{-2} = 1`.
struct Recurrence {
    p: BigInt,
    p_prev: BigInt,
    q: BigInt,
    q_prev: BigInt,
}

impl Recurrence {
    fn new() -> Self {
        Self { p: BigInt::one(), p_prev: BigInt::zero(), q: BigInt::zero(), q_prev: BigInt::one() }
    }

    fn push(&mut self, a: &BigInt) {
        let p = a * &self.p + &self.p_prev;
        let q = a * &self.q + &self.q_prev;
        self.p_prev = std::mem::replace(&mut self.p, p);
        self.q_prev = std::mem::replace(&mut self.q, q);
    }

    fn matrix(&self) -> UnimodularMatrix {
        UnimodularMatrix::new(self.p.clone(), self.p_prev.clone(), self.q.clone(), self.q_prev.clone())
            .expect("convergent matrices have determinant ±1")
    }
}

/// `(p_{m-1}, p_{m-2}; q_{m-1}, q_{m-2})`, so that `x = M · t` where `t` is
/// the complete quotient at position `m`. For a finite expansion `m` may equal
/// its length, with `t = ∞`.
pub fn convergent_matrix(cf: &ContinuedFraction, m: usize) -> Result<UnimodularMatrix> {
    if let Some(len) = cf.finite_len() {
        if m > len {
            return Err(Error::NotEnoughTerms { available: len, requested: m });
        }
    }
    let mut rec = Recurrence::new();
    for a in cf.terms().take(m) {
        rec.push(a);
    }
    Ok(rec.matrix())
}

/// Convergents `p_0/q_0, ..., p_n/q_n`.
pub fn convergents(cf: &ContinuedFraction, n: usize) -> Result<Vec<Convergent>> {
    if let Some(len) = cf.finite_len() {
        if n >= len {
            return Err(Error::NotEnoughTerms { available: len, requested: n + 1 });
        }
    }
    let mut rec = Recurrence::new();
    Ok(cf
        .terms()
        .take(n + 1)
        .map(|a| {
            rec.push(a);
            Convergent { p: rec.p.clone(), q: rec.q.clone() }
        })
        .collect())
}

/// Exact value of a continued fraction.
pub fn cf_value(cf: &ContinuedFraction) -> Result<QuadraticReal> {
    let head = convergent_matrix(&ContinuedFraction::finite(cf.preperiod.clone())?, cf.preperiod.len())?;
    if cf.is_finite() {
        return Ok(QuadraticReal::from_rational(Rational::new(head.a().clone(), head.c().clone())));
    }

    // purely periodic tail t = [b1, ..., bk, t] solves q t^2 + (q' - p) t - p' = 0
    let mut rec = Recurrence::new();
    for b in &cf.period {
        rec.push(b);
    }
    let (p, p1, q, q1) = (&rec.p, &rec.p_prev, &rec.q, &rec.q_prev);
    let lin = q1 - p;
    let g = q.gcd(&lin).gcd(p1);
    let disc = (&lin * &lin + BigInt::from(4) * q * p1) / (&g * &g);
    let two_q = BigInt::from(2) * q;
    let tail = QuadraticReal::canonicalize(
        Rational::new(-lin, two_q.clone()),
        Rational::new(g, two_q),
        &disc,
    )?;
    debug_assert!(!tail.is_rational());
    tail.mobius(&head)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> QuadraticReal {
        s.parse().unwrap()
    }

    fn cf(pre: &[i64], per: &[i64]) -> ContinuedFraction {
        ContinuedFraction::from_i64(pre, per).unwrap()
    }

    fn conv(list: &[(i64, i64)]) -> Vec<Convergent> {
        list.iter().map(|&(p, q)| Convergent { p: p.into(), q: q.into() }).collect()
    }

    #[test]
    fn value_examples() {
        assert_eq!(cf_value(&cf(&[1], &[1])).unwrap(), q("(1+sqrt(5))/2"));
        assert_eq!(cf_value(&cf(&[1, 2, 3], &[])).unwrap(), q("10/7"));
        assert_eq!(cf_value(&cf(&[2], &[4])).unwrap(), q("sqrt(5)"));
        assert_eq!(cf_value(&cf(&[2], &[1, 1, 1, 4])).unwrap(), q("sqrt(7)"));
        assert_eq!(cf_value(&cf(&[-2, 3], &[1, 2])).unwrap(), q("-sqrt(3)"));
    }

    #[test]
    fn malformed_rejected() {
        assert!(matches!(ContinuedFraction::from_i64(&[1, 0, 2], &[]), Err(Error::MalformedContinuedFraction(_))));
        assert!(matches!(ContinuedFraction::from_i64(&[], &[1]), Err(Error::MalformedContinuedFraction(_))));
        assert!(matches!(ContinuedFraction::from_i64(&[1], &[2, -1]), Err(Error::MalformedContinuedFraction(_))));
        // a0 may be any integer
        assert!(ContinuedFraction::from_i64(&[-3, 1], &[]).is_ok());
    }

    #[test]
    fn convergent_examples() {
        let golden = cf(&[1], &[1]);
        assert_eq!(convergents(&golden, 4).unwrap(), conv(&[(1, 1), (2, 1), (3, 2), (5, 3), (8, 5)]));
        let root2 = cf(&[1], &[2]);
        assert_eq!(convergents(&root2, 3).unwrap(), conv(&[(1, 1), (3, 2), (7, 5), (17, 12)]));
        assert_eq!(convergents(&cf(&[7, 3], &[]), 0).unwrap(), conv(&[(7, 1)]));
        assert_eq!(
            convergents(&cf(&[7, 3], &[]), 2),
            Err(Error::NotEnoughTerms { available: 2, requested: 3 })
        );
    }

    #[test]
    fn determinant_identity() {
        let c = cf(&[2], &[1, 1, 1, 4]);
        let list = convergents(&c, 20).unwrap();
        for n in 1..list.len() {
            let det = &list[n].p * &list[n - 1].q - &list[n - 1].p * &list[n].q;
            let expect = if n % 2 == 1 { 1 } else { -1 };
            assert_eq!(det, BigInt::from(expect), "n = {n}");
        }
    }

    #[test]
    fn canonical_forms() {
        assert!(cf(&[1], &[1]).is_canonical());
        assert!(!cf(&[1, 1], &[1]).is_canonical());
        assert!(!cf(&[1], &[2, 2]).is_canonical());
        assert!(!cf(&[1, 1], &[]).is_canonical());
        assert_eq!(cf(&[1, 2, 1, 2], &[1, 2]).canonicalized(), cf(&[1], &[2, 1]));
        assert_eq!(cf(&[1, 1], &[]).canonicalized(), cf(&[2], &[]));
        assert_eq!(cf(&[3], &[]).alternate_finite(), cf(&[2, 1], &[]));
        assert_eq!(cf(&[1, 2, 3], &[]).alternate_finite(), cf(&[1, 2, 2, 1], &[]));
    }

    #[test]
    fn wire_format() {
        let c = cf(&[1], &[2]);
        let j = serde_json::to_string(&c).unwrap();
        assert_eq!(j, r#"{"preperiod":[1],"period":[2]}"#);
        let back: ContinuedFraction = serde_json::from_str(&j).unwrap();
        assert_eq!(back, c);
        assert!(serde_json::from_str::<ContinuedFraction>(r#"{"preperiod":[1,0]}"#).is_err());
    }
}
