//! Exact rational scalars.
//!
//! Everything in this crate computes over ℚ with arbitrary-precision
//! integers; `Rat` is the single coefficient type used throughout.

use num_bigint::BigInt;
use num_rational::BigRational;

pub type Rat = BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n/d` as a reduced rational. Panics on zero denominator.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical text form: `n` when the denominator is 1, otherwise `n/d`.
pub fn render(r: &Rat) -> String {
    if r.denom().eq(&BigInt::from(1)) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_reduces() {
        assert_eq!(ratio(2, 4), ratio(1, 2));
        assert_eq!(render(&ratio(-4, 8)), "-1/2");
        assert_eq!(render(&rat(7)), "7");
    }
}
