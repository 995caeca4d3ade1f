//! Pseudo-lattices `Z^2 -> R` and measured foliations on the torus.
//!
//! A pseudo-lattice with `j(1,0) = lambda1`, `j(0,1) = lambda2` corresponds to
//! the foliation by parallel lines of slope `lambda2 / lambda1` carrying the
//! transverse measure `lambda1`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{QuadraticReal, UnimodularMatrix};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PseudoLatticeWire")]
pub struct PseudoLattice {
    lambda1: QuadraticReal,
    lambda2: QuadraticReal,
}

#[derive(Deserialize)]
struct PseudoLatticeWire {
    lambda1: QuadraticReal,
    lambda2: QuadraticReal,
}

impl TryFrom<PseudoLatticeWire> for PseudoLattice {
    type Error = Error;
    fn try_from(w: PseudoLatticeWire) -> Result<Self> {
        PseudoLattice::new(w.lambda1, w.lambda2)
    }
}

impl PseudoLattice {
    /// Both periods must be strictly positive and live in one quadratic field.
    pub fn new(lambda1: QuadraticReal, lambda2: QuadraticReal) -> Result<Self> {
        lambda1.try_sub(&lambda2)?;
        if !lambda1.is_positive() {
            return Err(Error::NotPositive("lambda1"));
        }
        if !lambda2.is_positive() {
            return Err(Error::NotPositive("lambda2"));
        }
        Ok(Self { lambda1, lambda2 })
    }

    pub fn lambda1(&self) -> &QuadraticReal {
        &self.lambda1
    }

    pub fn lambda2(&self) -> &QuadraticReal {
        &self.lambda2
    }

    /// Slope `lambda2 / lambda1` and measure `lambda1`.
    pub fn to_foliation(&self) -> MeasuredFoliation {
        MeasuredFoliation {
            slope: &self.lambda2 / &self.lambda1,
            measure: self.lambda1.clone(),
        }
    }

    pub fn from_foliation(f: &MeasuredFoliation) -> PseudoLattice {
        PseudoLattice {
            lambda1: f.measure.clone(),
            lambda2: &f.measure * &f.slope,
        }
    }

    /// Periods over the basis `(a g1 + b g2, c g1 + d g2)`. Matrices that
    /// leave the positive cone are rejected.
    pub fn basis_change(&self, m: &UnimodularMatrix) -> Result<PseudoLattice> {
        m.require_special()?;
        let l1 = self.lambda1.affine(m.a(), &0.into()) + self.lambda2.affine(m.b(), &0.into());
        let l2 = self.lambda1.affine(m.c(), &0.into()) + self.lambda2.affine(m.d(), &0.into());
        if !l1.is_positive() {
            return Err(Error::PositivityViolation("lambda1'"));
        }
        if !l2.is_positive() {
            return Err(Error::PositivityViolation("lambda2'"));
        }
        Ok(PseudoLattice { lambda1: l1, lambda2: l2 })
    }

    /// Multiplies both periods by a positive rational.
    pub fn scaled(&self, s: &crate::Rational) -> Result<PseudoLattice> {
        PseudoLattice::new(self.lambda1.scale(s), self.lambda2.scale(s))
    }
}

/// Foliation of the torus by parallel lines of slope `slope > 0` with
/// transverse measure `measure > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "FoliationWire")]
pub struct MeasuredFoliation {
    slope: QuadraticReal,
    measure: QuadraticReal,
}

#[derive(Deserialize)]
struct FoliationWire {
    slope: QuadraticReal,
    measure: QuadraticReal,
}

impl TryFrom<FoliationWire> for MeasuredFoliation {
    type Error = Error;
    fn try_from(w: FoliationWire) -> Result<Self> {
        MeasuredFoliation::new(w.slope, w.measure)
    }
}

impl MeasuredFoliation {
    pub fn new(slope: QuadraticReal, measure: QuadraticReal) -> Result<Self> {
        slope.try_mul(&measure)?;
        if !slope.is_positive() {
            return Err(Error::NotPositive("slope"));
        }
        if !measure.is_positive() {
            return Err(Error::NotPositive("measure"));
        }
        Ok(Self { slope, measure })
    }

    pub fn slope(&self) -> &QuadraticReal {
        &self.slope
    }

    pub fn measure(&self) -> &QuadraticReal {
        &self.measure
    }
}

pub fn to_foliation(pl: &PseudoLattice) -> MeasuredFoliation {
    pl.to_foliation()
}

pub fn from_foliation(f: &MeasuredFoliation) -> PseudoLattice {
    PseudoLattice::from_foliation(f)
}

pub fn basis_change_pl(pl: &PseudoLattice, m: &UnimodularMatrix) -> Result<PseudoLattice> {
    pl.basis_change(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> QuadraticReal {
        s.parse().unwrap()
    }

    fn pl(a: &str, b: &str) -> PseudoLattice {
        PseudoLattice::new(q(a), q(b)).unwrap()
    }

    fn fol(slope: &str, measure: &str) -> MeasuredFoliation {
        MeasuredFoliation::new(q(slope), q(measure)).unwrap()
    }

    #[test]
    fn foliation_examples() {
        assert_eq!(pl("1", "sqrt(2)").to_foliation(), fol("sqrt(2)", "1"));
        assert_eq!(pl("2", "2*sqrt(2)").to_foliation(), fol("sqrt(2)", "2"));
        assert_eq!(pl("3", "1").to_foliation(), fol("1/3", "3"));
        assert_eq!(from_foliation(&fol("sqrt(2)", "1")), pl("1", "sqrt(2)"));
        assert_eq!(from_foliation(&fol("5/3", "3")), pl("3", "5"));
    }

    #[test]
    fn basis_change_examples() {
        let base = pl("1", "sqrt(2)");
        let id = UnimodularMatrix::identity();
        assert_eq!(base.basis_change(&id).unwrap(), base);
        let lower = UnimodularMatrix::from_i64(1, 0, 1, 1).unwrap();
        assert_eq!(base.basis_change(&lower).unwrap(), pl("1", "1+sqrt(2)"));
        let s = UnimodularMatrix::from_i64(0, -1, 1, 0).unwrap();
        assert_eq!(base.basis_change(&s), Err(Error::PositivityViolation("lambda1'")));
    }

    #[test]
    fn invariants_enforced() {
        assert_eq!(PseudoLattice::new(q("1-sqrt(2)"), q("1")), Err(Error::NotPositive("lambda1")));
        assert_eq!(PseudoLattice::new(q("1"), q("0")), Err(Error::NotPositive("lambda2")));
        assert!(matches!(
            PseudoLattice::new(q("sqrt(2)"), q("sqrt(3)")),
            Err(Error::IncompatibleRadicands { .. })
        ));
        assert_eq!(MeasuredFoliation::new(q("-1"), q("1")), Err(Error::NotPositive("slope")));
        assert!(serde_json::from_str::<PseudoLattice>(r#"{"lambda1":"1","lambda2":"-sqrt(2)"}"#).is_err());
    }
}
