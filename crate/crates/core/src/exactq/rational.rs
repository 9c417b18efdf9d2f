//! Canonical big rationals.
//!
//! `Rational` is `num_rational::BigRational`, which already keeps the
//! denominator positive and the fraction reduced, so structural equality and
//! hashing agree with numeric equality.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ExactError;

pub type Rational = num_rational::BigRational;

/// Builds a reduced fraction with positive denominator.
pub fn rat_make(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Rational, ExactError> {
    let den = den.into();
    if den.is_zero() {
        return Err(ExactError::DivisionByZero);
    }
    Ok(Rational::new(num.into(), den))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Integer k-th root of a nonnegative big integer when it is exact.
pub fn exact_int_root(n: &BigInt, k: u32) -> Option<BigInt> {
    if k == 0 {
        return None;
    }
    if n.is_negative() {
        if k.is_multiple_of(2) {
            return None;
        }
        return exact_int_root(&-n, k).map(|r| -r);
    }
    let r = n.nth_root(k);
    (num_traits::pow(r.clone(), k as usize) == *n).then_some(r)
}

/// The nonnegative rational square root of `r`, if `r` is a rational square.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = exact_int_root(r.numer(), 2)?;
    let d = exact_int_root(r.denom(), 2)?;
    Some(Rational::new(n, d))
}

/// The real k-th root of `r` when numerator and denominator are both exact
/// k-th powers. Even k requires `r >= 0` and yields the nonnegative root.
pub fn rational_kth_root(r: &Rational, k: u32) -> Option<Rational> {
    let n = exact_int_root(r.numer(), k)?;
    let d = exact_int_root(r.denom(), k)?;
    Some(Rational::new(n, d))
}

pub fn is_rational_square(r: &Rational) -> bool {
    rational_sqrt(r).is_some()
}

/// Parses `integer ('/' positive-integer)?` with an optional leading sign.
pub fn parse_rational(text: &str) -> Result<Rational, ExactError> {
    let t = text.trim();
    let bad = || ExactError::BadRational(text.to_string());
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (t, None),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = match den {
        Some(d) => {
            if d.starts_with(['+', '-']) {
                return Err(bad());
            }
            d.parse().map_err(|_| bad())?
        }
        None => BigInt::one(),
    };
    rat_make(num, den)
}

/// `u/v`, or a bare integer when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Naive height max(|u|, v) of a reduced fraction u/v.
pub fn naive_height(r: &Rational) -> BigInt {
    let u = r.numer().abs();
    let v = r.denom().clone();
    u.max(v)
}

/// Least common multiple of the denominators.
pub fn denom_lcm<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

pub mod serde_rational {
    //! Serializes rationals as `"u/v"` strings (bare integers when v = 1).
    use super::{format_rational, parse_rational, Rational};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(serde::de::Error::custom)
    }
}
