//! Serde helpers for unbounded integers.
//!
//! Integers are written as JSON numbers when they fit in an `i64` and as
//! decimal strings otherwise; both forms are accepted on input.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum IntRepr {
    Num(i64),
    Text(String),
}

impl IntRepr {
    fn from_big(n: &BigInt) -> Self {
        match n.to_i64() {
            Some(v) => IntRepr::Num(v),
            None => IntRepr::Text(n.to_string()),
        }
    }

    fn into_big<E: de::Error>(self) -> Result<BigInt, E> {
        match self {
            IntRepr::Num(v) => Ok(BigInt::from(v)),
            IntRepr::Text(s) => s
                .trim()
                .parse::<BigInt>()
                .map_err(|_| E::custom(format!("invalid integer {s:?}"))),
        }
    }
}

pub fn serialize<S: Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    IntRepr::from_big(n).serialize(s)
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
    IntRepr::deserialize(d)?.into_big()
}

pub mod vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(IntRepr::from_big).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<IntRepr>::deserialize(d)?
            .into_iter()
            .map(IntRepr::into_big)
            .collect()
    }
}

/// Newtype for places where a bare integer has to round-trip on its own.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Int(pub BigInt);

impl Serialize for Int {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        serialize(&self.0, s)
    }
}

impl<'de> Deserialize<'de> for Int {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        deserialize(d).map(Int)
    }
}
