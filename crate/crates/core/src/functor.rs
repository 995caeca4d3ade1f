//! The functor from pseudo-lattices to projective pseudo-lattices, and the
//! pipeline carrying a marked torus and its foliation to a Bratteli diagram.

use serde::{Deserialize, Serialize};

use crate::bratteli::{build_diagram, BratteliDiagram};
use crate::contfrac::{cf_expand, ContinuedFraction};
use crate::error::{Error, Result};
use crate::exact::{QuadraticReal, UnimodularMatrix};
use crate::lattice::{point_as_tau, reduce_fundamental, Lattice, ModuliPoint};
use crate::pseudolattice::PseudoLattice;

/// Pseudo-lattice up to scaling, represented by `theta = lambda2 / lambda1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ProjectivePseudoLattice {
    theta: QuadraticReal,
    /// Set when `theta` is rational; such objects have no Effros-Shen algebra.
    rational: bool,
}

impl ProjectivePseudoLattice {
    pub fn new(theta: QuadraticReal) -> Result<Self> {
        if !theta.is_positive() {
            return Err(Error::NotPositive("theta"));
        }
        let rational = theta.is_rational();
        Ok(Self { theta, rational })
    }

    pub fn theta(&self) -> &QuadraticReal {
        &self.theta
    }

    pub fn is_rational(&self) -> bool {
        self.rational
    }
}

pub fn f_object(pl: &PseudoLattice) -> ProjectivePseudoLattice {
    let theta = pl.lambda2().try_div(pl.lambda1()).expect("periods share a field and lambda1 > 0");
    ProjectivePseudoLattice::new(theta).expect("ratio of positive periods is positive")
}

/// Action on morphisms: a basis change maps to itself.
pub fn f_morphism(m: &UnimodularMatrix) -> Result<UnimodularMatrix> {
    m.require_special()?;
    Ok(m.clone())
}

/// Periods of a holomorphic form and of its real part over one homology basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkedPair {
    pub lattice: Lattice,
    #[serde(rename = "pseudo_lattice")]
    pub pl: PseudoLattice,
}

impl MarkedPair {
    pub fn new(lattice: Lattice, pl: PseudoLattice) -> Self {
        Self { lattice, pl }
    }

    /// Applies one change of homology basis to both period vectors.
    pub fn basis_change(&self, m: &UnimodularMatrix) -> Result<MarkedPair> {
        Ok(MarkedPair { lattice: self.lattice.basis_change(m)?, pl: self.pl.basis_change(m)? })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PipelineOutput {
    #[serde(serialize_with = "point_as_tau")]
    pub tau_reduced: ModuliPoint,
    pub witness: UnimodularMatrix,
    #[serde(flatten)]
    pub theta: ProjectivePseudoLattice,
    pub cf: ContinuedFraction,
    /// Absent when `theta` is rational.
    pub diagram: Option<BratteliDiagram>,
}

pub fn pipeline(mp: &MarkedPair, levels: usize) -> Result<PipelineOutput> {
    if levels == 0 {
        return Err(Error::InvalidArgument("levels must be at least 1".into()));
    }
    let reduction = reduce_fundamental(&mp.lattice.normalize());
    let theta = f_object(&mp.pl);
    let cf = cf_expand(theta.theta())?;
    let diagram = if theta.is_rational() { None } else { Some(build_diagram(&cf, levels)?) };
    Ok(PipelineOutput { tau_reduced: reduction.tau_reduced, witness: reduction.witness, theta, cf, diagram })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bratteli::level_dimensions;
    use crate::contfrac::tail_equivalent;
    use crate::exact::ComplexQuadratic;

    fn q(s: &str) -> QuadraticReal {
        s.parse().unwrap()
    }

    fn c(s: &str) -> ComplexQuadratic {
        s.parse().unwrap()
    }

    fn pl(a: &str, b: &str) -> PseudoLattice {
        PseudoLattice::new(q(a), q(b)).unwrap()
    }

    #[test]
    fn object_examples() {
        assert_eq!(f_object(&pl("1", "sqrt(2)")).theta(), &q("sqrt(2)"));
        assert_eq!(f_object(&pl("2", "2*sqrt(2)")), f_object(&pl("1", "sqrt(2)")));
        let r = f_object(&pl("3", "5"));
        assert_eq!(r.theta(), &q("5/3"));
        assert!(r.is_rational());
    }

    #[test]
    fn morphism_examples() {
        let id = UnimodularMatrix::identity();
        assert_eq!(f_morphism(&id).unwrap(), id);
        let m1 = UnimodularMatrix::from_i64(2, 1, 1, 1).unwrap();
        let m2 = UnimodularMatrix::from_i64(0, -1, 1, 3).unwrap();
        assert_eq!(f_morphism(&(&m1 * &m2)).unwrap(), &f_morphism(&m1).unwrap() * &f_morphism(&m2).unwrap());
        let flip = UnimodularMatrix::from_i64(0, 1, 1, 0).unwrap();
        assert_eq!(f_morphism(&flip), Err(Error::NotSpecialLinear));
    }

    #[test]
    fn pipeline_examples() {
        let mp = MarkedPair::new(Lattice::new(c("1"), c("2*i")).unwrap(), pl("1", "sqrt(2)"));
        let out = pipeline(&mp, 4).unwrap();
        assert_eq!(out.tau_reduced.tau(), &c("2*i"));
        assert_eq!(out.theta.theta(), &q("sqrt(2)"));
        assert_eq!(out.cf, ContinuedFraction::from_i64(&[1], &[2]).unwrap());
        assert_eq!(out.diagram.as_ref().unwrap().depth(), 4);

        let mp = MarkedPair::new(Lattice::new(c("1"), c("i")).unwrap(), pl("1", "(1+sqrt(5))/2"));
        let out = pipeline(&mp, 3).unwrap();
        assert_eq!(out.cf, ContinuedFraction::from_i64(&[1], &[1]).unwrap());
        assert_eq!(out.tau_reduced.tau(), &c("i"));
    }

    #[test]
    fn pipeline_with_rational_theta_has_no_diagram() {
        let mp = MarkedPair::new(Lattice::new(c("1"), c("i")).unwrap(), pl("3", "5"));
        let out = pipeline(&mp, 3).unwrap();
        assert!(out.theta.is_rational());
        assert!(out.diagram.is_none());
        assert_eq!(out.cf, ContinuedFraction::from_i64(&[1, 1, 2], &[]).unwrap());
        let json = serde_json::to_value(&out).unwrap();
        assert_eq!(json["rational"], true);
        assert!(json["diagram"].is_null());
    }

    #[test]
    fn basis_change_on_both_sides() {
        let mp = MarkedPair::new(Lattice::new(c("1"), c("1/3+2*i")).unwrap(), pl("1", "sqrt(3)"));
        let m = UnimodularMatrix::from_i64(2, 1, 3, 2).unwrap();
        let moved = mp.basis_change(&m).unwrap();
        let (a, b) = (pipeline(&mp, 5).unwrap(), pipeline(&moved, 5).unwrap());
        assert_eq!(a.tau_reduced, b.tau_reduced);
        assert!(tail_equivalent(&a.cf, &b.cf).is_some());
        let (da, db) = (a.diagram.unwrap(), b.diagram.unwrap());
        assert_eq!(level_dimensions(&da).len(), level_dimensions(&db).len());
    }

    #[test]
    fn pipeline_rejects_zero_levels() {
        let mp = MarkedPair::new(Lattice::new(c("1"), c("i")).unwrap(), pl("1", "sqrt(2)"));
        assert!(matches!(pipeline(&mp, 0), Err(Error::InvalidArgument(_))));
    }
}
