//! Integer 2x2 matrices of determinant ±1.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::wire;

/// `(a, b; c, d)` with `ad - bc = ±1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UnimodularMatrix {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
    det: i8,
}

/// Generators used to spell matrices as words.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Generator {
    /// `(0, -1; 1, 0)`
    S,
    /// `(1, 1; 0, 1)`
    T,
    /// `(1, -1; 0, 1)`
    TInv,
    /// `(1, 0; 1, 1)`, the lower generator of the positive monoid
    L,
}

impl UnimodularMatrix {
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Result<Self> {
        let det = &a * &d - &b * &c;
        let det = if det.is_one() {
            1
        } else if det == -BigInt::one() {
            -1
        } else {
            return Err(Error::NotUnimodular(det.to_string()));
        };
        Ok(Self { a, b, c, d, det })
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        Self::new(a.into(), b.into(), c.into(), d.into())
    }

    /// Like [`UnimodularMatrix::new`] but additionally requires determinant +1.
    pub fn special(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Result<Self> {
        let m = Self::new(a, b, c, d)?;
        m.require_special()?;
        Ok(m)
    }

    pub fn identity() -> Self {
        Self { a: BigInt::one(), b: BigInt::zero(), c: BigInt::zero(), d: BigInt::one(), det: 1 }
    }

    pub fn generator(g: Generator) -> Self {
        let (a, b, c, d) = match g {
            Generator::S => (0, -1, 1, 0),
            Generator::T => (1, 1, 0, 1),
            Generator::TInv => (1, -1, 0, 1),
            Generator::L => (1, 0, 1, 1),
        };
        Self::from_i64(a, b, c, d).unwrap()
    }

    /// Translation `(1, n; 0, 1)`.
    pub fn translation(n: BigInt) -> Self {
        Self { a: BigInt::one(), b: n, c: BigInt::zero(), d: BigInt::one(), det: 1 }
    }

    /// Product of the generators, left to right.
    pub fn from_word(word: &[Generator]) -> Self {
        word.iter().fold(Self::identity(), |acc, g| &acc * &Self::generator(*g))
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn det(&self) -> i8 {
        self.det
    }

    pub fn is_special(&self) -> bool {
        self.det == 1
    }

    pub fn require_special(&self) -> Result<()> {
        if self.is_special() {
            Ok(())
        } else {
            Err(Error::NotSpecialLinear)
        }
    }

    /// Exact inverse; integral because the determinant is a unit.
    pub fn inverse(&self) -> Self {
        let s = BigInt::from(self.det);
        Self {
            a: &self.d * &s,
            b: -&self.b * &s,
            c: -&self.c * &s,
            d: &self.a * &s,
            det: self.det,
        }
    }

    /// Conjugation by the swap `(0, 1; 1, 0)`: `(a, b; c, d) -> (d, c; b, a)`.
    pub fn swap_conjugate(&self) -> Self {
        Self {
            a: self.d.clone(),
            b: self.c.clone(),
            c: self.b.clone(),
            d: self.a.clone(),
            det: self.det,
        }
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }
}

impl Mul<&UnimodularMatrix> for &UnimodularMatrix {
    type Output = UnimodularMatrix;
    fn mul(self, r: &UnimodularMatrix) -> UnimodularMatrix {
        UnimodularMatrix {
            a: &self.a * &r.a + &self.b * &r.c,
            b: &self.a * &r.b + &self.b * &r.d,
            c: &self.c * &r.a + &self.d * &r.c,
            d: &self.c * &r.b + &self.d * &r.d,
            det: self.det * r.det,
        }
    }
}

impl Mul for UnimodularMatrix {
    type Output = UnimodularMatrix;
    fn mul(self, r: UnimodularMatrix) -> UnimodularMatrix {
        &self * &r
    }
}

impl fmt::Display for UnimodularMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}; {}, {})", self.a, self.b, self.c, self.d)
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixWire {
    #[serde(with = "wire")]
    a: BigInt,
    #[serde(with = "wire")]
    b: BigInt,
    #[serde(with = "wire")]
    c: BigInt,
    #[serde(with = "wire")]
    d: BigInt,
}

impl Serialize for UnimodularMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixWire { a: self.a.clone(), b: self.b.clone(), c: self.c.clone(), d: self.d.clone() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for UnimodularMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = MatrixWire::deserialize(d)?;
        Self::new(w.a, w.b, w.c, w.d).map_err(de::Error::custom)
    }
}
