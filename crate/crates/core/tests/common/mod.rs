#![allow(dead_code)]

use num_bigint::BigInt;
use proptest::prelude::*;
use torus_af::exact::Generator;
use torus_af::{ComplexQuadratic, QuadraticReal, Rational, UnimodularMatrix};

pub const RADICANDS: [u64; 8] = [2, 3, 5, 6, 7, 13, 19, 94];

pub fn rational(bound: i64) -> impl Strategy<Value = Rational> {
    (-bound..=bound, 1..=bound).prop_map(|(p, q)| Rational::new(BigInt::from(p), BigInt::from(q)))
}

pub fn real_in(d: u64) -> impl Strategy<Value = QuadraticReal> {
    (rational(40), rational(40)).prop_map(move |(x, y)| QuadraticReal::new(x, y, d))
}

/// Pairs of reals from one field.
pub fn real_pair() -> impl Strategy<Value = (QuadraticReal, QuadraticReal)> {
    prop::sample::select(&RADICANDS[..]).prop_flat_map(|d| (real_in(d), real_in(d)))
}

pub fn irrational() -> impl Strategy<Value = QuadraticReal> {
    (prop::sample::select(&RADICANDS[..]), rational(16), rational(16))
        .prop_filter_map("irrational", |(d, x, y)| {
            let v = QuadraticReal::new(x, y, d);
            (!v.is_rational()).then_some(v)
        })
}

pub fn positive_irrational() -> impl Strategy<Value = QuadraticReal> {
    irrational().prop_map(|v| if v.is_negative() { -v } else { v })
}

pub fn upper_half_in(d: u64) -> impl Strategy<Value = ComplexQuadratic> {
    (rational(20), 1..=20i64, 1..=20i64)
        .prop_map(move |(x, yn, yd)| ComplexQuadratic::new(x, Rational::new(yn.into(), yd.into()), d))
}

pub fn upper_half_point() -> impl Strategy<Value = ComplexQuadratic> {
    prop::sample::select(&[1u64, 2, 3][..]).prop_flat_map(upper_half_in)
}

pub fn word(max_len: usize) -> impl Strategy<Value = Vec<Generator>> {
    prop::collection::vec(
        prop::sample::select(&[Generator::S, Generator::T, Generator::TInv][..]),
        0..=max_len,
    )
}

pub fn sl2z(max_len: usize) -> impl Strategy<Value = UnimodularMatrix> {
    word(max_len).prop_map(|w| UnimodularMatrix::from_word(&w))
}

/// Products of `(1,1;0,1)` and `(1,0;1,1)`: basis changes preserving positivity.
pub fn positive_monoid(max_len: usize) -> impl Strategy<Value = UnimodularMatrix> {
    prop::collection::vec(any::<bool>(), 0..=max_len).prop_map(|bits| {
        let upper = UnimodularMatrix::from_i64(1, 1, 0, 1).unwrap();
        let lower = UnimodularMatrix::from_i64(1, 0, 1, 1).unwrap();
        bits.iter().fold(UnimodularMatrix::identity(), |m, &b| &m * if b { &upper } else { &lower })
    })
}

pub fn gl2z(max_len: usize) -> impl Strategy<Value = UnimodularMatrix> {
    (sl2z(max_len), any::<bool>()).prop_map(|(m, flip)| {
        if flip {
            &m * &UnimodularMatrix::from_i64(0, 1, 1, 0).unwrap()
        } else {
            m
        }
    })
}
