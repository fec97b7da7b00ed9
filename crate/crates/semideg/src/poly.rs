//! Sparse univariate polynomials over ℚ in the variable `t`.
//!
//! Invariants:
//! - no stored coefficient is zero; the zero polynomial has an empty term map
//! - `degree()` of a nonzero polynomial is its largest stored exponent
//!
//! The text grammar (used by the CLI and the golden tests) is
//! `expr := sign? term ((+|-) term)*`, `term := coeff [* power] | power`,
//! `power := t [^ nat]`, `coeff := nat [/ nat]`, whitespace ignored.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::rat::{self, rat, Rat};

#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<u64, Rat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::monomial(0, rat(1))
    }

    /// `c * t^e`, elided when `c` is zero.
    pub fn monomial(exp: u64, coeff: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Poly { terms }
    }

    /// `t^e`.
    pub fn t_pow(exp: u64) -> Self {
        Poly::monomial(exp, rat(1))
    }

    pub fn from_terms<I: IntoIterator<Item = (u64, Rat)>>(iter: I) -> Self {
        let mut p = Poly::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exp: u64, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(Rat::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&e| e == 0)
    }

    /// Largest stored exponent; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.terms.values().next_back()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn coeff(&self, exp: u64) -> Rat {
        self.terms.get(&exp).cloned().unwrap_or_else(Rat::zero)
    }

    /// Exponents with nonzero coefficient, ascending.
    pub fn support(&self) -> impl DoubleEndedIterator<Item = u64> + '_ {
        self.terms.keys().copied()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u64, &Rat)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Everything below the leading monomial.
    pub fn tail(&self) -> Poly {
        let mut p = self.clone();
        if let Some(d) = p.degree() {
            p.terms.remove(&d);
        }
        p
    }

    pub fn scale(&self, s: &Rat) -> Poly {
        if s.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(&e, c)| (e, c * s)).collect(),
        }
    }

    /// self += factor · other, in place.
    pub fn add_scaled(&mut self, other: &Poly, factor: &Rat) {
        if factor.is_zero() {
            return;
        }
        for (e, c) in other.terms() {
            self.add_term(e, c * factor);
        }
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading_coeff() {
            None => Poly::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn pow(&self, k: u64) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Poly {
        Poly::from_terms(
            self.terms
                .iter()
                .filter(|(&e, _)| e > 0)
                .map(|(&e, c)| (e - 1, c * rat(e as i64))),
        )
    }

    /// Substitution `t -> t + c`.
    pub fn compose_shift(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return self.clone();
        }
        let shifted = Poly::from_terms([(1, rat(1)), (0, c.clone())]);
        let mut out = Poly::zero();
        for (e, coeff) in self.terms() {
            out = &out + &shifted.pow(e).scale(coeff);
        }
        out
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ea, ca) in self.terms() {
            for (eb, cb) in rhs.terms() {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, c) in self.terms.iter().rev() {
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let a = c.abs();
            if e == 0 {
                write!(f, "{}", rat::render(&a))?;
            } else if a.is_one() {
                write!(f, "{}", pow_str('t', e as i64))?;
            } else {
                write!(f, "{}*{}", rat::render(&a), pow_str('t', e as i64))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub(crate) fn pow_str(var: char, exp: i64) -> String {
    if exp == 1 {
        var.to_string()
    } else {
        format!("{var}^{exp}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

/// Parses the polynomial grammar above. Whitespace is ignored.
pub fn parse_poly(text: &str) -> Result<Poly, ParseError> {
    Parser::new(text).parse()
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, message: &str) -> Result<T, ParseError> {
        Err(ParseError {
            position: self.pos,
            message: message.to_string(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn parse(&mut self) -> Result<Poly, ParseError> {
        let mut out = Poly::zero();
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.bump();
                -1i64
            }
            Some(b'+') => {
                self.bump();
                1
            }
            Some(_) => 1,
            None => return self.err("empty input"),
        };
        loop {
            let (exp, coeff) = self.term()?;
            out.add_term(exp, coeff * rat(sign));
            match self.peek() {
                None => return Ok(out),
                Some(b'+') => {
                    self.bump();
                    sign = 1;
                }
                Some(b'-') => {
                    self.bump();
                    sign = -1;
                }
                Some(_) => return self.err("expected '+' or '-'"),
            }
        }
    }

    fn term(&mut self) -> Result<(u64, Rat), ParseError> {
        match self.peek() {
            Some(b't') => {
                let exp = self.power()?;
                Ok((exp, rat(1)))
            }
            Some(b'0'..=b'9') => {
                let coeff = self.coeff()?;
                match self.peek() {
                    Some(b'*') => {
                        self.bump();
                        let exp = self.power()?;
                        Ok((exp, coeff))
                    }
                    _ => Ok((0, coeff)),
                }
            }
            _ => self.err("expected a coefficient or 't'"),
        }
    }

    fn power(&mut self) -> Result<u64, ParseError> {
        match self.bump() {
            Some(b't') => {}
            _ => return self.err("expected 't'"),
        }
        match self.peek() {
            Some(b'^') => {
                self.bump();
                self.nat()
            }
            _ => Ok(1),
        }
    }

    fn coeff(&mut self) -> Result<Rat, ParseError> {
        let numer = self.nat()?;
        if self.peek() == Some(b'/') {
            self.bump();
            let denom = self.nat()?;
            if denom == 0 {
                return self.err("zero denominator");
            }
            Ok(crate::rat::ratio(numer as i64, denom as i64))
        } else {
            Ok(rat(numer as i64))
        }
    }

    fn nat(&mut self) -> Result<u64, ParseError> {
        match self.peek() {
            Some(b'0'..=b'9') => {}
            _ => return self.err("expected a number"),
        }
        let mut value: u64 = 0;
        while let Some(b @ b'0'..=b'9') = self.bytes.get(self.pos).copied() {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add((b - b'0') as u64))
                .filter(|&v| v <= u32::MAX as u64)
                .ok_or(ParseError {
                    position: self.pos,
                    message: "exponent overflow".to_string(),
                })?;
            self.pos += 1;
        }
        Ok(value)
    }
}
