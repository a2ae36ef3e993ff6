//! Exact rational scalars.
//!
//! `Rational` is `num`'s arbitrary-precision `BigRational`, which keeps
//! values in lowest terms with a positive denominator. This module adds
//! the textual form used across the crate: `"p/q"`, or `"p"` when `q = 1`.

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Parses `"p/q"`, `"p"` or `"+p"`. Surrounding whitespace is ignored.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let t = t.strip_prefix('+').unwrap_or(t);
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::parse(format!("invalid rational {text:?}")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::parse(format!("invalid rational {text:?}")))?;
    if den.is_zero() {
        return Err(Error::parse(format!("zero denominator in {text:?}")));
    }
    Ok(Rational::new(num, den))
}

/// Renders as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `n!` as a rational.
pub fn factorial(n: usize) -> Rational {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    Rational::from_integer(acc)
}

/// Binomial coefficient `C(n, k)`, zero for `k > n`.
pub fn binomial(n: usize, k: usize) -> Rational {
    if k > n {
        return zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Rational::from_integer(acc)
}

pub(crate) fn is_unit(r: &Rational) -> bool {
    r.abs().is_one()
}
