//! Shorthand number syntax: a signed sum of terms `c`, `c*sqrt(n)`,
//! `c*sqrt(n)*i`, `c*i`, optionally wrapped as `(sum)/k`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Rational;
use crate::error::{Error, Result};

pub(crate) struct Terms {
    pub x: Rational,
    pub y: Rational,
    /// Radicand of the irrational part; 0 when absent.
    pub d: u64,
    pub imaginary: bool,
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
    text: &'a str,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_str(&mut self, s: &str) -> bool {
        if self.src[self.pos..].starts_with(s.as_bytes()) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.text[start..self.pos])
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {} in {:?}", self.pos, self.text))
    }
}

pub(crate) fn parse_terms(input: &str) -> Result<Terms> {
    let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty number".into()));
    }
    let mut cur = Cursor { src: compact.as_bytes(), pos: 0, text: &compact };

    let mut terms = if cur.eat(b'(') {
        let t = sum(&mut cur)?;
        if !cur.eat(b')') {
            return Err(cur.err("expected ')'"));
        }
        let mut t = t;
        if cur.eat(b'/') {
            let k = cur.digits().ok_or_else(|| cur.err("expected divisor"))?;
            let k: BigInt = k.parse().map_err(|_| cur.err("bad divisor"))?;
            if k.is_zero() {
                return Err(Error::DivisionByZero);
            }
            let k = Rational::from_integer(k);
            t.x /= &k;
            t.y /= &k;
        }
        t
    } else {
        sum(&mut cur)?
    };
    if cur.pos != compact.len() {
        return Err(cur.err("unexpected character"));
    }
    if terms.y.is_zero() {
        terms.d = 0;
    }
    Ok(terms)
}

fn sum(cur: &mut Cursor<'_>) -> Result<Terms> {
    let mut out = Terms { x: Rational::zero(), y: Rational::zero(), d: 0, imaginary: false };
    let mut first = true;
    loop {
        let negative = if cur.eat(b'-') {
            true
        } else if cur.eat(b'+') || first {
            false
        } else {
            break;
        };
        first = false;
        let (coef, radicand, imag) = term(cur)?;
        let coef = if negative { -coef } else { coef };
        match (radicand, imag) {
            (None, false) => out.x += coef,
            (Some(0), _) => {}
            (r, i) => {
                let r = r.unwrap_or(1);
                if out.d != 0 && (out.d != r || out.imaginary != i) {
                    return Err(cur.err("terms from different quadratic fields"));
                }
                out.d = r;
                out.imaginary = i;
                out.y += coef;
            }
        }
        if cur.peek().is_none() || cur.peek() == Some(b')') {
            break;
        }
    }
    Ok(out)
}

fn term(cur: &mut Cursor<'_>) -> Result<(Rational, Option<u64>, bool)> {
    let mut coef = Rational::one();
    let mut seen = false;
    if let Some(n) = cur.digits() {
        let n: BigInt = n.parse().map_err(|_| cur.err("bad integer"))?;
        let mut den = BigInt::one();
        if cur.peek() == Some(b'/') && matches!(cur.src.get(cur.pos + 1), Some(b'0'..=b'9')) {
            cur.pos += 1;
            den = cur.digits().unwrap().parse().map_err(|_| cur.err("bad denominator"))?;
            if den.is_zero() {
                return Err(Error::DivisionByZero);
            }
        }
        coef = Rational::new(n, den);
        seen = true;
        cur.eat(b'*');
    }
    let mut radicand = None;
    if cur.eat_str("sqrt(") {
        let n = cur.digits().ok_or_else(|| cur.err("expected radicand"))?;
        let n: u64 = n.parse().map_err(|_| cur.err("radicand out of range"))?;
        if !cur.eat(b')') {
            return Err(cur.err("expected ')'"));
        }
        radicand = Some(n);
        seen = true;
        cur.eat(b'*');
    }
    let imag = cur.eat(b'i');
    if !seen && !imag {
        return Err(cur.err("expected a term"));
    }
    Ok((coef, radicand, imag))
}
