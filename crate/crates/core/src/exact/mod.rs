//! Exact arithmetic substrate: rationals, dense univariate polynomials,
//! rational functions, truncated power series, quadratic surds, and exact
//! real-root machinery. No floating point anywhere in this module.

pub mod poly;
pub mod ratfunc;
pub mod roots;
pub mod series;
pub mod surd;

pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use roots::{is_nonnegative_on, is_strictly_positive_on};
pub use series::PowerSeries;
pub use surd::{surd_compare, QuadraticSurd};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational, always reduced, denominator always positive.
pub type Rat = num_rational::BigRational;

/// Shorthand for a rational from a machine integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `p/q` from machine integers. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Parse `"p/q"` or a plain integer string into a rational, exactly.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let bad = || Error::InvalidInput(format!("cannot parse `{s}` as a rational p/q"));
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: BigInt = num.parse().map_err(|_| bad())?;
    let q: BigInt = den.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(Error::InvalidInput(format!("zero denominator in `{s}`")));
    }
    Ok(Rat::new(p, q))
}

/// Render a rational as `"p/q"`, or just `"p"` when the denominator is 1.
pub fn rat_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Exact decimal rendering with round-half-even at `digits` fractional digits.
///
/// All arithmetic is exact; rounding happens once, at the end.
pub fn decimal_string(r: &Rat, digits: usize) -> String {
    let negative = r.is_negative();
    let abs = r.abs();
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled_num = abs.numer() * &scale;
    let den = abs.denom();
    let (mut q, rem) = (scaled_num.clone() / den, scaled_num % den);
    let twice = &rem * BigInt::from(2);
    let round_up = match twice.cmp(den) {
        std::cmp::Ordering::Greater => true,
        std::cmp::Ordering::Less => false,
        std::cmp::Ordering::Equal => (&q % BigInt::from(2)).is_one(),
    };
    if round_up {
        q += 1;
    }
    let digits_str = q.to_string();
    let s = if digits == 0 {
        digits_str
    } else if digits_str.len() <= digits {
        format!("0.{:0>width$}", digits_str, width = digits)
    } else {
        let (int_part, frac_part) = digits_str.split_at(digits_str.len() - digits);
        format!("{int_part}.{frac_part}")
    };
    if negative && s.chars().any(|c| c != '0' && c != '.') {
        format!("-{s}")
    } else {
        s
    }
}
