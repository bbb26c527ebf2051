//! Text literals for cyclotomic numbers: signed sums of terms `c`, `c*z^k`,
//! `z^k` and `z`, with `c` an integer or a fraction `p/q`. Whitespace is
//! ignored. `z` denotes the generator ζ_N of the target field.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Cyclotomic, CyclotomicField, Rational};
use crate::error::{Error, Result};

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        // Columns are 1-based positions in the original text.
        let chars = src
            .char_indices()
            .enumerate()
            .filter(|(_, (_, c))| !c.is_whitespace())
            .map(|(col, (_, c))| (col + 1, c))
            .collect();
        Cursor { chars, pos: 0, src }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn column(&self) -> usize {
        self.chars
            .get(self.pos)
            .map(|&(col, _)| col)
            .unwrap_or_else(|| self.src.chars().count() + 1)
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            column: self.column(),
            message: message.into(),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().map(|&(_, c)| c).collect())
    }
}

fn parse_term(cur: &mut Cursor<'_>) -> Result<(Rational, usize)> {
    let mut coeff = Rational::one();
    let mut has_coeff = false;
    if let Some(num) = cur.digits() {
        has_coeff = true;
        let num: BigInt = num.parse().expect("ascii digits");
        let mut value = Rational::from_integer(num);
        if cur.eat('/') {
            let den = cur
                .digits()
                .ok_or_else(|| cur.error("expected a denominator after '/'"))?;
            let den: BigInt = den.parse().expect("ascii digits");
            if den.is_zero() {
                return Err(cur.error("zero denominator"));
            }
            value /= Rational::from_integer(den);
        }
        coeff = value;
        if !cur.eat('*') {
            return Ok((coeff, 0));
        }
    }
    if !cur.eat('z') {
        return Err(cur.error(if has_coeff {
            "expected 'z' after '*'"
        } else {
            "expected a number or 'z'"
        }));
    }
    let mut power = 1usize;
    if cur.eat('^') {
        let k = cur
            .digits()
            .ok_or_else(|| cur.error("expected an exponent after '^'"))?;
        power = k.parse().map_err(|_| cur.error("exponent out of range"))?;
    }
    Ok((coeff, power))
}

/// Parses a literal into ℚ(ζ_N) for the given field.
pub fn parse_literal(text: &str, field: &Arc<CyclotomicField>) -> Result<Cyclotomic> {
    let mut cur = Cursor::new(text);
    if cur.peek().is_none() {
        return Err(cur.error("empty literal"));
    }
    let mut raw: Vec<Rational> = Vec::new();
    let mut first = true;
    while cur.peek().is_some() {
        let negative = if cur.eat('-') {
            true
        } else if cur.eat('+') || first {
            false
        } else {
            return Err(cur.error("expected '+' or '-'"));
        };
        first = false;
        let (c, k) = parse_term(&mut cur)?;
        if raw.len() <= k {
            raw.resize(k + 1, Rational::zero());
        }
        if negative {
            raw[k] -= c;
        } else {
            raw[k] += c;
        }
    }
    Ok(Cyclotomic::from_raw(field, raw))
}
