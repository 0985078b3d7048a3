//! Exact rational arithmetic: scalars, dense matrices and an incremental
//! integer row space used by the rank oracles.
//!
//! Nothing in here rounds. Elimination pivots on the first nonzero entry in
//! column order, so every result (RREF, kernel basis order) is deterministic.

mod matrix;
mod rowspace;

pub use matrix::RatMatrix;
pub use rowspace::RowSpace;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// A column vector of rationals.
pub type RatVector = Vec<Rational>;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d`, reduced. Panics when `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"a"` or `"a/b"` (optional sign on either part, `b != 0`).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Canonical `"num/den"` text, with the denominator omitted when it is 1.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Rank of a list of vectors (stacked as rows).
pub fn vectors_rank(vectors: &[RatVector]) -> usize {
    let Some(width) = vectors.first().map(Vec::len) else {
        return 0;
    };
    let mut space = RowSpace::new(width);
    for v in vectors {
        space.insert(v);
    }
    space.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_text_round_trip() {
        for s in ["0", "7", "-3/4", "12345678901234567890123/7"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(format_rational(&parse_rational("6/-4").unwrap()), "-3/2");
        assert_eq!(format_rational(&parse_rational(" 10/5 ").unwrap()), "2");
    }

    #[test]
    fn rational_parse_errors() {
        for s in ["", "1/0", "a", "1/2/3", "0.5"] {
            assert!(parse_rational(s).is_err(), "{s}");
        }
    }

    #[test]
    fn canonical_form_after_arithmetic() {
        let q = ratio(1, 6) + ratio(1, 3);
        assert_eq!(q, ratio(1, 2));
        assert_eq!(q.denom(), &BigInt::from(2));
        let neg = ratio(3, -9);
        assert_eq!(neg.numer(), &BigInt::from(-1));
        assert_eq!(neg.denom(), &BigInt::from(3));
    }
}
