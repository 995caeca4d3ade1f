//! Exact arithmetic over the rationals and single quadratic fields.
//!
//! No floating point is used anywhere in the crate; every comparison is an
//! exact sign decision.

pub mod int;
mod matrix;
mod parse;
mod quadratic;

use serde::{Deserialize, Serialize};

pub use matrix::{Generator, UnimodularMatrix};
pub use quadratic::{ComplexQuadratic, Quadratic, QuadraticReal};

use crate::error::Result;

/// Reduced fraction with positive denominator over unbounded integers.
pub type Rational = num_rational::BigRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Field operation inside one quadratic field.
pub fn arith<const I: bool>(op: ArithOp, u: &Quadratic<I>, v: &Quadratic<I>) -> Result<Quadratic<I>> {
    match op {
        ArithOp::Add => u.try_add(v),
        ArithOp::Sub => u.try_sub(v),
        ArithOp::Mul => u.try_mul(v),
        ArithOp::Div => u.try_div(v),
    }
}

/// Canonical `x + y*sqrt(d)` for an arbitrary non-negative radicand.
pub fn canonicalize(x: Rational, y: Rational, d: &num_bigint::BigInt) -> Result<QuadraticReal> {
    QuadraticReal::canonicalize(x, y, d)
}
