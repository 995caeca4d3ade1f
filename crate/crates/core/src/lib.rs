//! # torus-af
//!
//! Exact computations for the functor that sends a complex torus
//! `C / (Z w1 + Z w2)` to the Effros-Shen AF-algebra of the slope of a
//! measured foliation on the same torus.
//!
//! - [`exact`]: rationals, real and imaginary quadratic fields, unimodular matrices.
//! - [`lattice`]: period lattices, the modulus `tau`, reduction to the fundamental domain.
//! - [`pseudolattice`]: pseudo-lattices `(lambda1, lambda2)` and measured foliations.
//! - [`functor`]: the map `PL(lambda1, lambda2) -> PPL(lambda2 / lambda1)` and the full pipeline.
//! - [`contfrac`]: regular continued fractions, convergents and modular equivalence.
//! - [`bratteli`]: Bratteli diagrams, dimension groups and stable isomorphism.
//!
//! Every value is exact. Two numbers are only ever compared through an exact
//! sign computation in a single quadratic field.

pub mod bratteli;
pub mod contfrac;
pub mod error;
pub mod exact;
pub mod functor;
pub mod lattice;
pub mod pseudolattice;
pub mod wire;

pub use error::{Error, Result};
pub use exact::{ComplexQuadratic, QuadraticReal, Rational, UnimodularMatrix};
