//! Elements of a single quadratic field `Q(sqrt(d))` or `Q(sqrt(-d))`.
//!
//! Both flavours share one representation `x + y*s` with `s^2 = d` (real) or
//! `s^2 = -d` (imaginary). The canonical form keeps `d` square-free and stores
//! every rational value with `y = 0, d = 0`, so derived equality is value
//! equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use super::int::{floor_div, isqrt, squarefree_decompose};
use super::matrix::UnimodularMatrix;
use super::parse::parse_terms;
use super::Rational;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Quadratic<const IMAGINARY: bool> {
    x: Rational,
    y: Rational,
    d: u64,
}

/// `x + y*sqrt(d)` with `d >= 0` square-free.
pub type QuadraticReal = Quadratic<false>;

/// `x + y*sqrt(d)*i` with `d >= 1` square-free.
pub type ComplexQuadratic = Quadratic<true>;

fn rat(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

impl<const I: bool> Quadratic<I> {
    fn from_parts(x: Rational, y: Rational, d: u64) -> Self {
        if y.is_zero() || d == 0 {
            return Self { x, y: Rational::zero(), d: 0 };
        }
        if d == 1 && !I {
            return Self { x: x + y, y: Rational::zero(), d: 0 };
        }
        Self { x, y, d }
    }

    /// Builds `x + y*sqrt(±d)`, pulling square factors of `d` into `y`.
    pub fn new(x: Rational, y: Rational, d: u64) -> Self {
        if d == 0 || y.is_zero() {
            return Self::from_parts(x, Rational::zero(), 0);
        }
        let (root, core) = squarefree_decompose(&BigInt::from(d)).expect("u64 radicands always decompose");
        Self::from_parts(x, y * Rational::from_integer(root), core)
    }

    /// Like [`Quadratic::new`] for radicands of unbounded size.
    pub fn canonicalize(x: Rational, y: Rational, d: &BigInt) -> Result<Self> {
        if d.is_negative() {
            return Err(Error::Parse("radicand must be non-negative".into()));
        }
        if d.is_zero() || y.is_zero() {
            return Ok(Self::from_parts(x, Rational::zero(), 0));
        }
        let (root, core) = squarefree_decompose(d)?;
        Ok(Self::from_parts(x, y * Rational::from_integer(root), core))
    }

    pub fn from_rational(x: Rational) -> Self {
        Self { x, y: Rational::zero(), d: 0 }
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self::from_rational(rat(n))
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    /// Rational part.
    pub fn x(&self) -> &Rational {
        &self.x
    }

    /// Coefficient of the square root.
    pub fn y(&self) -> &Rational {
        &self.y
    }

    /// Square-free radicand; `0` for rational values.
    pub fn radicand(&self) -> u64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.d == 0
    }

    pub fn is_zero(&self) -> bool {
        self.d == 0 && self.x.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.x)
    }

    fn generator_square(d: u64) -> Rational {
        if I {
            -rat(d)
        } else {
            rat(d)
        }
    }

    /// Galois conjugate `x - y*s`.
    pub fn conj(&self) -> Self {
        Self { x: self.x.clone(), y: -self.y.clone(), d: self.d }
    }

    /// Field norm `x^2 - s^2 y^2`.
    pub fn norm(&self) -> Rational {
        &self.x * &self.x - Self::generator_square(self.d) * &self.y * &self.y
    }

    fn common_radicand(&self, other: &Self) -> Result<u64> {
        match (self.d, other.d) {
            (0, d) | (d, 0) => Ok(d),
            (a, b) if a == b => Ok(a),
            (a, b) => Err(Error::IncompatibleRadicands { left: a, right: b }),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let d = self.common_radicand(other)?;
        Ok(Self::from_parts(&self.x + &other.x, &self.y + &other.y, d))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        let d = self.common_radicand(other)?;
        Ok(Self::from_parts(&self.x - &other.x, &self.y - &other.y, d))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let d = self.common_radicand(other)?;
        let s2 = Self::generator_square(d);
        let x = &self.x * &other.x + &self.y * &other.y * s2;
        let y = &self.x * &other.y + &other.x * &self.y;
        Ok(Self::from_parts(x, y, d))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        self.common_radicand(other)?;
        let n = other.norm();
        let num = self.try_mul(&other.conj())?;
        Ok(Self::from_parts(num.x / &n, num.y / &n, num.d))
    }

    pub fn recip(&self) -> Result<Self> {
        Self::one().try_div(self)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::from_parts(&self.x * k, &self.y * k, self.d)
    }

    pub fn add_rational(&self, k: &Rational) -> Self {
        Self { x: &self.x + k, y: self.y.clone(), d: self.d }
    }

    /// `m*self + k` for integers `m`, `k`.
    pub fn affine(&self, m: &BigInt, k: &BigInt) -> Self {
        let m = Rational::from_integer(m.clone());
        Self::from_parts(&self.x * &m + Rational::from_integer(k.clone()), &self.y * &m, self.d)
    }

    /// Generic Möbius action `(a z + b) / (c z + d)`.
    pub fn mobius(&self, m: &UnimodularMatrix) -> Result<Self> {
        let num = self.affine(m.a(), m.b());
        let den = self.affine(m.c(), m.d());
        if den.is_zero() {
            return Err(Error::Pole);
        }
        num.try_div(&den)
    }
}

impl QuadraticReal {
    /// `sqrt(n)` in canonical form.
    pub fn sqrt(n: u64) -> Self {
        Self::new(Rational::zero(), Rational::one(), n)
    }

    /// Exact sign as -1, 0 or +1.
    pub fn signum(&self) -> i32 {
        let sx = sign_of(&self.x);
        let sy = sign_of(&self.y);
        if sy == 0 || sx == sy {
            return if sx == 0 { sy } else { sx };
        }
        if sx == 0 {
            return sy;
        }
        // opposite signs: the larger square wins
        let x2 = &self.x * &self.x;
        let y2d = &self.y * &self.y * rat(self.d);
        if x2 > y2d {
            sx
        } else {
            sy
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    /// Greatest integer not exceeding the value.
    pub fn floor(&self) -> BigInt {
        if self.is_rational() {
            return floor_div(self.x.numer(), self.x.denom());
        }
        let (p, s, dd, q) = self.surd_parts();
        let r = isqrt(&dd);
        // sqrt(D) lies strictly between r and r + 1
        if s > 0 {
            floor_div(&(p + r), &q)
        } else {
            floor_div(&(p - r - 1), &q)
        }
    }

    /// Writes an irrational value as `(P + s*sqrt(D)) / Q` with integers
    /// `P`, `D > 0`, `Q > 0` and `s = ±1`.
    pub(crate) fn surd_parts(&self) -> (BigInt, i32, BigInt, BigInt) {
        debug_assert!(!self.is_rational());
        let (a, b) = (self.x.numer(), self.x.denom());
        let (c, e) = (self.y.numer(), self.y.denom());
        let q = b * e;
        let p = a * e;
        let dd = c * c * b * b * BigInt::from(self.d);
        let s = if c.is_negative() { -1 } else { 1 };
        (p, s, dd, q)
    }
}

impl ComplexQuadratic {
    /// The imaginary unit.
    pub fn i() -> Self {
        Self::from_parts(Rational::zero(), Rational::one(), 1)
    }

    /// `sqrt(-n)` in canonical form.
    pub fn sqrt_neg(n: u64) -> Self {
        Self::new(Rational::zero(), Rational::one(), n)
    }

    /// Radicand as written on the wire: at least 1.
    pub fn im_radicand(&self) -> u64 {
        self.d.max(1)
    }

    pub fn re(&self) -> &Rational {
        &self.x
    }

    /// Imaginary part as an element of `Q(sqrt(d))`.
    pub fn im(&self) -> QuadraticReal {
        QuadraticReal::new(Rational::zero(), self.y.clone(), self.d)
    }

    /// Sign of the imaginary part.
    pub fn im_signum(&self) -> i32 {
        sign_of(&self.y)
    }

    /// `|z|^2`, always rational.
    pub fn abs_sq(&self) -> Rational {
        self.norm()
    }
}

fn sign_of(r: &Rational) -> i32 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

impl PartialOrd for QuadraticReal {
    /// Ordering is defined inside one field; mixed radicands are incomparable.
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        let diff = self.try_sub(other).ok()?;
        Some(diff.signum().cmp(&0))
    }
}

impl<const I: bool> Neg for Quadratic<I> {
    type Output = Self;
    fn neg(self) -> Self {
        Self { x: -self.x, y: -self.y, d: self.d }
    }
}

impl<const I: bool> Neg for &Quadratic<I> {
    type Output = Quadratic<I>;
    fn neg(self) -> Quadratic<I> {
        -self.clone()
    }
}

// The operator impls panic on mixed radicands; use the `try_*` methods when
// operands may come from different fields.
macro_rules! forward_op {
    ($trait:ident, $method:ident, $try:ident) => {
        impl<const I: bool> $trait<&Quadratic<I>> for &Quadratic<I> {
            type Output = Quadratic<I>;
            fn $method(self, rhs: &Quadratic<I>) -> Quadratic<I> {
                self.$try(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<const I: bool> $trait<Quadratic<I>> for Quadratic<I> {
            type Output = Quadratic<I>;
            fn $method(self, rhs: Quadratic<I>) -> Quadratic<I> {
                (&self).$method(&rhs)
            }
        }
        impl<const I: bool> $trait<&Quadratic<I>> for Quadratic<I> {
            type Output = Quadratic<I>;
            fn $method(self, rhs: &Quadratic<I>) -> Quadratic<I> {
                (&self).$method(rhs)
            }
        }
    };
}

forward_op!(Add, add, try_add);
forward_op!(Sub, sub, try_sub);
forward_op!(Mul, mul, try_mul);
forward_op!(Div, div, try_div);

impl<const I: bool> From<Rational> for Quadratic<I> {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl<const I: bool> From<i64> for Quadratic<I> {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl<const I: bool> fmt::Display for Quadratic<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let has_x = !self.x.is_zero() || self.y.is_zero();
        if has_x {
            write!(f, "{}", self.x)?;
        }
        if self.y.is_zero() {
            return Ok(());
        }
        let neg = self.y.is_negative();
        let mag = self.y.abs();
        if neg {
            f.write_str("-")?;
        } else if has_x {
            f.write_str("+")?;
        }
        let unit = match (I, self.d) {
            (true, 1) => "i".to_string(),
            (true, d) => format!("sqrt({d})*i"),
            (false, d) => format!("sqrt({d})"),
        };
        if mag.is_one() {
            f.write_str(&unit)
        } else {
            write!(f, "{mag}*{unit}")
        }
    }
}

impl<const I: bool> FromStr for Quadratic<I> {
    type Err = Error;

    /// Parses shorthand such as `1+sqrt(2)`, `(1+sqrt(5))/2`, `5+i`,
    /// `1/2+1/2*sqrt(3)*i`.
    fn from_str(s: &str) -> Result<Self> {
        let t = parse_terms(s)?;
        if t.d != 0 && t.imaginary != I {
            return Err(Error::Parse(if I {
                format!("{s:?}: irrational part of a complex number needs a trailing i")
            } else {
                format!("{s:?}: imaginary terms are not allowed in a real number")
            }));
        }
        Ok(Self::new(t.x, t.y, t.d))
    }
}

#[derive(Serialize, Deserialize)]
struct RealWire {
    x: String,
    y: String,
    d: u64,
}

#[derive(Serialize, Deserialize)]
struct ComplexWire {
    x: String,
    y: String,
    im_radicand: u64,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Incoming<W> {
    Text(String),
    Object(W),
}

fn parse_rational<E: de::Error>(s: &str) -> std::result::Result<Rational, E> {
    s.trim()
        .parse::<Rational>()
        .map_err(|_| E::custom(format!("invalid rational {s:?}")))
}

impl Serialize for QuadraticReal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RealWire { x: self.x.to_string(), y: self.y.to_string(), d: self.d }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QuadraticReal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match Incoming::<RealWire>::deserialize(d)? {
            Incoming::Text(t) => t.parse().map_err(de::Error::custom),
            Incoming::Object(w) => Ok(Self::new(parse_rational(&w.x)?, parse_rational(&w.y)?, w.d)),
        }
    }
}

impl Serialize for ComplexQuadratic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ComplexWire { x: self.x.to_string(), y: self.y.to_string(), im_radicand: self.im_radicand() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ComplexQuadratic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match Incoming::<ComplexWire>::deserialize(d)? {
            Incoming::Text(t) => t.parse().map_err(de::Error::custom),
            Incoming::Object(w) => {
                if w.im_radicand == 0 {
                    return Err(de::Error::custom("im_radicand must be at least 1"));
                }
                Ok(Self::new(parse_rational(&w.x)?, parse_rational(&w.y)?, w.im_radicand))
            }
        }
    }
}
