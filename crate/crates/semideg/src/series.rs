//! Truncated Laurent series over ℚ.
//!
//! A series stores finitely many terms with exponent ≥ `floor`; everything
//! below the floor is unknown and silently discarded. Arithmetic tracks the
//! floor conservatively so callers can detect precision exhaustion: sums take
//! the max of the operand floors, products shift each floor by the other
//! operand's degree.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::poly::{pow_str, Poly};
use crate::rat::{self, rat, ratio, Rat};

#[derive(Clone, PartialEq, Eq)]
pub struct LaurentSeries {
    terms: BTreeMap<i64, Rat>,
    floor: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series does not start with the monic degree-one term required here")]
    MalformedLeadingTerm,
    #[error("truncation floor {floor} is too shallow to continue")]
    PrecisionExhausted { floor: i64 },
    #[error("cannot invert a series with no visible terms")]
    NotAUnit,
}

impl LaurentSeries {
    pub fn zero(floor: i64) -> Self {
        LaurentSeries {
            terms: BTreeMap::new(),
            floor,
        }
    }

    pub fn monomial(exp: i64, coeff: Rat, floor: i64) -> Self {
        let mut s = LaurentSeries::zero(floor);
        s.add_term(exp, coeff);
        s
    }

    pub fn from_poly(p: &Poly, floor: i64) -> Self {
        let mut s = LaurentSeries::zero(floor);
        for (e, c) in p.terms() {
            s.add_term(e as i64, c.clone());
        }
        s
    }

    fn add_term(&mut self, exp: i64, coeff: Rat) {
        if coeff.is_zero() || exp < self.floor {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(Rat::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn floor(&self) -> i64 {
        self.floor
    }

    /// Largest visible exponent.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading(&self) -> Option<(i64, &Rat)> {
        self.terms.iter().next_back().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, exp: i64) -> Rat {
        self.terms.get(&exp).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Rat)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    /// No visible term; the series may still have unknown terms below the floor.
    pub fn is_zero_to_precision(&self) -> bool {
        self.terms.is_empty()
    }

    fn effective_degree(&self) -> i64 {
        self.degree().unwrap_or(self.floor)
    }

    fn retrunc(mut self, floor: i64) -> Self {
        self.floor = floor;
        self.terms.retain(|&e, _| e >= floor);
        self
    }

    /// Raises the floor, discarding anything below it.
    pub fn truncated(&self, floor: i64) -> Self {
        debug_assert!(floor >= self.floor, "cannot claim precision below the floor");
        self.clone().retrunc(floor)
    }

    pub fn add(&self, rhs: &LaurentSeries) -> LaurentSeries {
        let mut out = self.clone().retrunc(self.floor.max(rhs.floor));
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &LaurentSeries) -> LaurentSeries {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> LaurentSeries {
        LaurentSeries {
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
            floor: self.floor,
        }
    }

    pub fn scale(&self, s: &Rat) -> LaurentSeries {
        if s.is_zero() {
            return LaurentSeries::zero(self.floor);
        }
        LaurentSeries {
            terms: self.terms.iter().map(|(&e, c)| (e, c * s)).collect(),
            floor: self.floor,
        }
    }

    pub fn mul(&self, rhs: &LaurentSeries) -> LaurentSeries {
        let floor = (self.floor + rhs.effective_degree()).max(rhs.floor + self.effective_degree());
        let mut out = LaurentSeries::zero(floor);
        for (ea, ca) in self.terms() {
            for (eb, cb) in rhs.terms() {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }

    pub fn shift(&self, exp: i64) -> LaurentSeries {
        LaurentSeries {
            terms: self.terms.iter().map(|(&e, c)| (e + exp, c.clone())).collect(),
            floor: self.floor + exp,
        }
    }

    pub fn pow(&self, k: u64) -> LaurentSeries {
        // floor of the one series is irrelevant for the product chain
        let mut acc = LaurentSeries::monomial(0, rat(1), self.floor.min(0));
        let mut base = self.clone();
        let mut k = k;
        if k == 0 {
            return acc;
        }
        loop {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k == 0 {
                return acc;
            }
            base = base.mul(&base);
        }
    }

    /// Multiplicative inverse of a series with a visible leading term.
    pub fn invert(&self) -> Result<LaurentSeries, SeriesError> {
        let (d, lc) = match self.leading() {
            Some(x) => x,
            None => return Err(SeriesError::NotAUnit),
        };
        let lc = lc.clone();
        // self = lc*T^d * (1 + w), deg w <= -1
        let unit = self.shift(-d).scale(&lc.recip());
        let mut w = unit;
        w.add_term(0, rat(-1));
        let out_floor = self.floor - 2 * d;
        let mut acc = LaurentSeries::monomial(0, rat(1), out_floor);
        let mut term = LaurentSeries::monomial(0, rat(1), out_floor);
        if let Some(dw) = w.degree() {
            debug_assert!(dw <= -1);
            let mut k_deg = 0i64;
            while k_deg >= out_floor {
                term = term.mul(&w).neg();
                if term.is_zero_to_precision() {
                    break;
                }
                acc = acc.add(&term);
                k_deg += dw;
            }
        }
        Ok(acc.retrunc(out_floor).shift(-d).scale(&lc.recip()))
    }

    pub fn pow_i(&self, k: i64) -> Result<LaurentSeries, SeriesError> {
        if k >= 0 {
            Ok(self.pow(k as u64))
        } else {
            Ok(self.invert()?.pow((-k) as u64))
        }
    }

    /// Substitutes `inner` for the variable. `inner` must have visible
    /// leading term of exponent 1 so degrees are preserved.
    pub fn compose(&self, inner: &LaurentSeries) -> Result<LaurentSeries, SeriesError> {
        match inner.leading() {
            Some((1, _)) => {}
            _ => return Err(SeriesError::MalformedLeadingTerm),
        }
        let mut out = LaurentSeries::zero(self.floor);
        for (e, c) in self.terms() {
            out = out.add(&inner.pow_i(e)?.scale(c));
        }
        let floor = out.floor().max(self.floor);
        Ok(out.retrunc(floor))
    }

    /// `m`-th root of a series of the form `1 + (terms of negative exponent)`,
    /// via the binomial series with exact rational coefficients.
    pub fn root_of_unit(&self, m: u64) -> Result<LaurentSeries, SeriesError> {
        if self.coeff(0) != rat(1) || self.degree() != Some(0) {
            return Err(SeriesError::MalformedLeadingTerm);
        }
        let mut z = self.clone();
        z.add_term(0, rat(-1));
        let out_floor = self.floor;
        let mut acc = LaurentSeries::monomial(0, rat(1), out_floor);
        if let Some(dz) = z.degree() {
            debug_assert!(dz <= -1);
            // binom(1/m, k) computed incrementally
            let mut coeff = rat(1);
            let mut zpow = LaurentSeries::monomial(0, rat(1), out_floor);
            let mut k_deg = 0i64;
            let mut k = 0i64;
            while k_deg >= out_floor {
                k += 1;
                coeff = coeff * (ratio(1, m as i64) - rat(k - 1)) / rat(k);
                zpow = zpow.mul(&z);
                if zpow.is_zero_to_precision() {
                    break;
                }
                acc = acc.add(&zpow.scale(&coeff));
                k_deg += dz;
            }
        }
        Ok(acc.retrunc(out_floor))
    }

    pub fn derivative(&self) -> LaurentSeries {
        let mut out = LaurentSeries::zero(self.floor - 1);
        for (e, c) in self.terms() {
            if e != 0 {
                out.add_term(e - 1, c * rat(e));
            }
        }
        out
    }

    pub fn render(&self, var: char) -> String {
        let mut out = String::new();
        let mut first = true;
        for (&e, c) in self.terms.iter().rev() {
            if first {
                if c.is_negative() {
                    out.push('-');
                }
                first = false;
            } else if c.is_negative() {
                out.push('-');
            } else {
                out.push('+');
            }
            let a = c.abs();
            if e == 0 {
                out.push_str(&rat::render(&a));
            } else if a.is_one() {
                out.push_str(&pow_str(var, e));
            } else {
                out.push_str(&format!("{}*{}", rat::render(&a), pow_str(var, e)));
            }
        }
        if first {
            out.push('0');
        }
        out.push_str(&format!("+O({})", pow_str(var, self.floor)));
        out
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render('t'))
    }
}

impl fmt::Debug for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Given `q = t + (terms of exponent ≤ -1)`, returns the series `p` with
/// `q(p(T)) = T` up to exponents ≥ `precision`. This is the inductive
/// construction behind the change of parameter: the error's leading term is
/// cancelled one exponent at a time.
pub fn invert_parameter(q: &LaurentSeries, precision: i64) -> Result<LaurentSeries, SeriesError> {
    match q.leading() {
        Some((1, c)) if c.is_one() => {}
        _ => return Err(SeriesError::MalformedLeadingTerm),
    }
    if q.terms().any(|(e, _)| e != 1 && e > -1) {
        return Err(SeriesError::MalformedLeadingTerm);
    }
    let precision = precision.min(0);

    let mut result = LaurentSeries::monomial(1, rat(1), precision);
    // err = result(q) - t, tracked in the source parameter
    let mut err = q.clone().retrunc(q.floor().max(precision));
    err.add_term(1, rat(-1));
    let q_inv = q.invert()?;
    // the leading error exponent only ever moves down, so negative powers
    // of q can be maintained incrementally
    let mut q_pow = q_inv.clone();
    let mut q_pow_exp: i64 = -1;

    loop {
        let (d, c) = match err.leading() {
            None => {
                if err.floor() <= precision {
                    return Ok(result);
                }
                return Err(SeriesError::PrecisionExhausted { floor: err.floor() });
            }
            Some((d, c)) => (d, c.clone()),
        };
        if d < precision {
            return Ok(result);
        }
        debug_assert!(d <= -1, "inversion error must live in negative degrees");
        result.add_term(d, -c.clone());
        while q_pow_exp > d {
            q_pow = q_pow.mul(&q_inv);
            q_pow_exp -= 1;
        }
        err = err.add(&q_pow.scale(&-c));
        if err.floor() > precision {
            return Err(SeriesError::PrecisionExhausted { floor: err.floor() });
        }
    }
}
