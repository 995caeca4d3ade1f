//! Tail equivalence of continued fractions and explicit unimodular witnesses.
//!
//! Two irrationals are related by an integer Möbius map of determinant ±1
//! exactly when their expansions eventually agree termwise. Aligning the tails
//! at positions `(m, n)` gives `u = A·t`, `v = B·t` with convergent matrices
//! `A`, `B`, hence the witness `B·A⁻¹` of determinant `(-1)^(m+n)`.

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use super::{cf_expand, convergent_matrix, ContinuedFraction};
use crate::error::{Error, Result};
use crate::exact::{QuadraticReal, UnimodularMatrix};

/// Smallest `(m, n)` (by `m + n`, then `m`) such that the two expansions agree
/// termwise from positions `m` and `n` on.
///
/// Finite expansions are always aligned, at the latest at their ends where
/// both tails are infinite; a finite and a periodic expansion never are.
pub fn tail_equivalent(c1: &ContinuedFraction, c2: &ContinuedFraction) -> Option<(usize, usize)> {
    match (c1.is_finite(), c2.is_finite()) {
        (true, true) => {
            let (a, b) = (c1.preperiod(), c2.preperiod());
            let common = a.iter().rev().zip(b.iter().rev()).take_while(|(x, y)| x == y).count();
            Some((a.len() - common, b.len() - common))
        }
        (false, false) => periodic_alignment(&c1.canonicalized(), &c2.canonicalized()),
        _ => None,
    }
}

fn periodic_alignment(c1: &ContinuedFraction, c2: &ContinuedFraction) -> Option<(usize, usize)> {
    let p = c1.period().len();
    if c2.period().len() != p {
        return None;
    }
    // tail of c1 from L1 equals tail of c2 from L2 + r
    let r = (0..p).find(|&r| (0..p).all(|i| c1.period()[i] == c2.period()[(i + r) % p]))?;
    let (l1, l2) = (c1.preperiod().len(), c2.preperiod().len());

    let back_walk = |mut m: usize, mut n: usize| {
        while m > 0 && n > 0 && c1.term(m - 1) == c2.term(n - 1) {
            m -= 1;
            n -= 1;
        }
        (m, n)
    };
    let rounds = 2 * l1.max(l2) / p + 1;
    let mut entries = Vec::with_capacity(2 * (rounds + 1));
    for t in 0..=rounds {
        entries.push((l1, l2 + r + t * p));
        entries.push((l1 + (p - r) % p + t * p, l2));
    }
    entries
        .into_iter()
        .map(|(m, n)| back_walk(m, n))
        .min_by_key(|&(m, n)| (m + n, m))
}

/// Witness from aligned expansions: `B·A⁻¹` with `A`, `B` the convergent
/// matrices at `m` and `n`.
fn witness_from_cfs(c1: &ContinuedFraction, c2: &ContinuedFraction, m: usize, n: usize) -> Result<UnimodularMatrix> {
    let a = convergent_matrix(c1, m).map_err(|_| Error::TailMismatch)?;
    let b = convergent_matrix(c2, n).map_err(|_| Error::TailMismatch)?;
    Ok(&b * &a.inverse())
}

fn checked(m: UnimodularMatrix, u: &QuadraticReal, v: &QuadraticReal) -> Result<UnimodularMatrix> {
    match u.mobius(&m) {
        Ok(image) if image == *v => Ok(m),
        _ => Err(Error::TailMismatch),
    }
}

/// Matrix `M` with `mobius(M, u) = v`, assuming the expansions of `u` and `v`
/// agree from positions `m` and `n`.
pub fn recover_matrix(u: &QuadraticReal, v: &QuadraticReal, m: usize, n: usize) -> Result<UnimodularMatrix> {
    let (cu, cv) = (cf_expand(u)?, cf_expand(v)?);
    checked(witness_from_cfs(&cu, &cv, m, n)?, u, v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictKind {
    NotEquivalent,
    /// Related by a determinant -1 map only as far as tail shifts can tell.
    GlEquivalent,
    SlEquivalent,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceVerdict {
    pub kind: VerdictKind,
    /// Satisfies `mobius(witness, u) = v`; absent when not equivalent.
    pub witness: Option<UnimodularMatrix>,
}

impl EquivalenceVerdict {
    fn not_equivalent() -> Self {
        Self { kind: VerdictKind::NotEquivalent, witness: None }
    }

    fn with_witness(m: UnimodularMatrix) -> Self {
        let kind = if m.is_special() { VerdictKind::SlEquivalent } else { VerdictKind::GlEquivalent };
        Self { kind, witness: Some(m) }
    }

    pub fn det(&self) -> Option<i8> {
        self.witness.as_ref().map(UnimodularMatrix::det)
    }
}

/// Decides whether `v` lies in the orbit of `u` under integer Möbius maps,
/// preferring a determinant +1 witness whenever tail shifts can produce one.
pub fn equivalence_decide(u: &QuadraticReal, v: &QuadraticReal) -> Result<EquivalenceVerdict> {
    if u.is_rational() != v.is_rational() {
        return Ok(EquivalenceVerdict::not_equivalent());
    }
    let (cu, cv) = (cf_expand(u)?, cf_expand(v)?);
    let Some((m, n)) = tail_equivalent(&cu, &cv) else {
        return Ok(EquivalenceVerdict::not_equivalent());
    };
    let mut witness = witness_from_cfs(&cu, &cv, m, n)?;
    if !witness.is_special() {
        if cu.is_finite() {
            // the other expansion of v has the opposite length parity
            let alt = cv.alternate_finite();
            witness = witness_from_cfs(&cu, &alt, cu.preperiod().len(), alt.preperiod().len())?;
        } else if cu.period().len() % 2 == 1 {
            // move both positions into the periods, then run one extra period on v
            let k = cu.preperiod().len().saturating_sub(m).max(cv.preperiod().len().saturating_sub(n));
            witness = witness_from_cfs(&cu, &cv, m + k, n + k + cu.period().len())?;
        }
    }
    Ok(EquivalenceVerdict::with_witness(checked(witness, u, v)?))
}

#[derive(Serialize, Deserialize)]
struct VerdictWire {
    kind: VerdictKind,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    witness: Option<UnimodularMatrix>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    det: Option<i8>,
}

impl Serialize for EquivalenceVerdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        VerdictWire { kind: self.kind, witness: self.witness.clone(), det: self.det() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for EquivalenceVerdict {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = VerdictWire::deserialize(d)?;
        let consistent = match (&w.kind, &w.witness) {
            (VerdictKind::NotEquivalent, None) => true,
            (VerdictKind::SlEquivalent, Some(m)) => m.is_special(),
            (VerdictKind::GlEquivalent, Some(_)) => true,
            _ => false,
        };
        if !consistent || (w.det.is_some() && w.det != w.witness.as_ref().map(UnimodularMatrix::det)) {
            return Err(de::Error::custom("verdict kind, witness and det disagree"));
        }
        Ok(Self { kind: w.kind, witness: w.witness })
    }
}
