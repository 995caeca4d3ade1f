//! Period lattices `Z w1 + Z w2` and the modulus `tau` in the upper half plane.
//!
//! A change of homology basis `(g1, g2) -> (a g1 + b g2, c g1 + d g2)` sends
//! the periods to `(a w1 + b w2, c w1 + d w2)` and the modulus to
//! `(c + d tau) / (a + b tau)`. That is the action [`induced_tau`] implements;
//! it is the ordinary Möbius action of the swapped matrix `(d, c; b, a)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::int::floor_div;
use crate::exact::{ComplexQuadratic, Generator, UnimodularMatrix};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "LatticeWire")]
pub struct Lattice {
    omega1: ComplexQuadratic,
    omega2: ComplexQuadratic,
}

#[derive(Deserialize)]
struct LatticeWire {
    omega1: ComplexQuadratic,
    omega2: ComplexQuadratic,
}

impl TryFrom<LatticeWire> for Lattice {
    type Error = Error;
    fn try_from(w: LatticeWire) -> Result<Self> {
        Lattice::new(w.omega1, w.omega2)
    }
}

impl Lattice {
    /// Rejects zero periods and periods that are real multiples of each other.
    pub fn new(omega1: ComplexQuadratic, omega2: ComplexQuadratic) -> Result<Self> {
        if omega1.is_zero() || omega2.is_zero() {
            return Err(Error::DegenerateLattice);
        }
        let ratio = omega2.try_div(&omega1)?;
        if ratio.im_signum() == 0 {
            return Err(Error::DegenerateLattice);
        }
        Ok(Self { omega1, omega2 })
    }

    pub fn omega1(&self) -> &ComplexQuadratic {
        &self.omega1
    }

    pub fn omega2(&self) -> &ComplexQuadratic {
        &self.omega2
    }

    /// `tau = ±w2 / w1` with the sign that puts it in the upper half plane.
    pub fn normalize(&self) -> ModuliPoint {
        let tau = self.omega2.try_div(&self.omega1).expect("validated at construction");
        let tau = if tau.im_signum() < 0 { -tau } else { tau };
        ModuliPoint { tau }
    }

    /// Periods over the basis `(a g1 + b g2, c g1 + d g2)`.
    pub fn basis_change(&self, m: &UnimodularMatrix) -> Result<Lattice> {
        m.require_special()?;
        let w1 = self.omega1.affine(m.a(), &BigInt::zero()) + self.omega2.affine(m.b(), &BigInt::zero());
        let w2 = self.omega1.affine(m.c(), &BigInt::zero()) + self.omega2.affine(m.d(), &BigInt::zero());
        Lattice::new(w1, w2)
    }
}

/// A point of the upper half plane.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PointWire")]
pub struct ModuliPoint {
    tau: ComplexQuadratic,
}

#[derive(Deserialize)]
struct PointWire {
    tau: ComplexQuadratic,
}

impl TryFrom<PointWire> for ModuliPoint {
    type Error = Error;
    fn try_from(w: PointWire) -> Result<Self> {
        ModuliPoint::new(w.tau)
    }
}

impl ModuliPoint {
    pub fn new(tau: ComplexQuadratic) -> Result<Self> {
        if tau.im_signum() <= 0 {
            return Err(Error::NotInUpperHalfPlane);
        }
        Ok(Self { tau })
    }

    pub fn tau(&self) -> &ComplexQuadratic {
        &self.tau
    }

    pub fn into_tau(self) -> ComplexQuadratic {
        self.tau
    }

    /// Membership in the closed-left fundamental domain
    /// `{-1/2 <= Re < 1/2, |tau| > 1} ∪ {|tau| = 1, -1/2 <= Re <= 0}`.
    pub fn in_fundamental_domain(&self) -> bool {
        let re = self.tau.re();
        let half = BigRational::new(1.into(), 2.into());
        let abs = self.tau.abs_sq();
        let one = BigRational::one();
        if *re < -&half || *re >= half {
            return false;
        }
        abs > one || (abs == one && !re_positive(re))
    }
}

fn re_positive(r: &BigRational) -> bool {
    *r > BigRational::zero()
}

/// Modulus after the basis change `m`: `(c + d tau) / (a + b tau)`.
pub fn induced_tau(m: &UnimodularMatrix, tau: &ModuliPoint) -> Result<ModuliPoint> {
    m.require_special()?;
    let image = tau.tau.mobius(&m.swap_conjugate()).expect("a + b tau is never zero in the upper half plane");
    ModuliPoint::new(image)
}

/// Result of reducing a modulus into the fundamental domain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Reduction {
    #[serde(serialize_with = "point_as_tau")]
    pub tau_reduced: ModuliPoint,
    /// Basis change with `induced_tau(witness, tau) = tau_reduced`.
    pub witness: UnimodularMatrix,
}

/// Moves `tau` into the fundamental domain by nearest-integer translations
/// and inversions `tau -> -1/tau`.
pub fn reduce_fundamental(point: &ModuliPoint) -> Reduction {
    let half = BigRational::new(1.into(), 2.into());
    let one = BigRational::one();
    let s = UnimodularMatrix::generator(Generator::S);
    let mut tau = point.tau.clone();
    // accumulated in the plain Möbius convention: tau_now = mobius(g, tau)
    let mut g = UnimodularMatrix::identity();
    loop {
        let shifted = tau.re() + &half;
        let n = floor_div(shifted.numer(), shifted.denom());
        if !n.is_zero() {
            tau = tau.add_rational(&BigRational::from_integer(-&n));
            g = &UnimodularMatrix::translation(-n) * &g;
        }
        let abs = tau.abs_sq();
        if abs < one {
            tau = invert(&tau);
            g = &s * &g;
            continue;
        }
        if abs == one && re_positive(tau.re()) {
            tau = invert(&tau);
            g = &s * &g;
        }
        break;
    }
    debug_assert_eq!(point.tau.mobius(&g).as_ref(), Ok(&tau));
    Reduction { tau_reduced: ModuliPoint { tau }, witness: g.swap_conjugate() }
}

pub(crate) fn point_as_tau<S: serde::Serializer>(p: &ModuliPoint, s: S) -> std::result::Result<S::Ok, S::Error> {
    p.tau.serialize(s)
}

fn invert(tau: &ComplexQuadratic) -> ComplexQuadratic {
    -tau.recip().expect("tau is non-zero in the upper half plane")
}

/// Decides whether two moduli describe isomorphic tori, returning a basis
/// change `w` with `induced_tau(w, t1) = t2` when they do.
pub fn tori_isomorphic(t1: &ModuliPoint, t2: &ModuliPoint) -> Option<UnimodularMatrix> {
    let r1 = reduce_fundamental(t1);
    let r2 = reduce_fundamental(t2);
    (r1.tau_reduced == r2.tau_reduced).then(|| &r2.witness.inverse() * &r1.witness)
}
