//! Quadratic surds `a + b*sqrt(d)` with rational `a`, `b` and square-free
//! positive integer `d`. Comparisons against rationals are decided exactly
//! by sign analysis and one squaring; no floating point is involved.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};

use super::{rat, rat_string, Rat};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadraticSurd {
    a: Rat,
    b: Rat,
    d: u64,
}

impl QuadraticSurd {
    /// `a + b*sqrt(d)`; `d` must be square-free and at least 2.
    pub fn new(a: Rat, b: Rat, d: u64) -> Result<Self> {
        if d < 2 || !is_square_free(d) {
            return Err(Error::InvalidInput(format!("{d} is not a square-free integer >= 2")));
        }
        Ok(QuadraticSurd { a, b, d })
    }

    pub fn from_rational(a: Rat) -> Self {
        QuadraticSurd { a, b: rat(0), d: 2 }
    }

    pub fn parts(&self) -> (&Rat, &Rat, u64) {
        (&self.a, &self.b, self.d)
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// The golden ratio squared, phi^2 = (3 + sqrt 5)/2.
    pub fn phi_squared() -> Self {
        QuadraticSurd::new(Rat::new(3.into(), 2.into()), Rat::new(1.into(), 2.into()), 5).unwrap()
    }

    /// 3 + 2*sqrt(2).
    pub fn three_plus_two_sqrt2() -> Self {
        QuadraticSurd::new(rat(3), rat(2), 2).unwrap()
    }

    /// 1 + sqrt(2).
    pub fn one_plus_sqrt2() -> Self {
        QuadraticSurd::new(rat(1), rat(1), 2).unwrap()
    }

    /// (3 + sqrt 5)/2.
    pub fn half_three_plus_sqrt5() -> Self {
        Self::phi_squared()
    }

    pub fn scale(&self, s: &Rat) -> Self {
        QuadraticSurd { a: &self.a * s, b: &self.b * s, d: self.d }
    }

    pub fn add_rational(&self, s: &Rat) -> Self {
        QuadraticSurd { a: &self.a + s, b: self.b.clone(), d: self.d }
    }

    /// Exact ordering of `self` against a rational.
    ///
    /// Move the rational part across, compare signs, then square once:
    /// self - q = r + b*sqrt(d) with r = a - q.
    pub fn cmp_rational(&self, q: &Rat) -> Ordering {
        let r = &self.a - q;
        if self.b.is_zero() {
            return sign_ordering(&r);
        }
        let r_sq = &r * &r;
        let bd_sq = &self.b * &self.b * rat(self.d as i64);
        match (r.is_negative(), self.b.is_negative()) {
            // both parts nonnegative, b nonzero
            (false, false) => Ordering::Greater,
            (true, true) => Ordering::Less,
            // r < 0 < b sqrt d: sign of the sum is the sign of b^2 d - r^2
            (true, false) => bd_sq.cmp(&r_sq),
            // b sqrt d < 0 <= r
            (false, true) => {
                if r.is_zero() {
                    Ordering::Less
                } else {
                    r_sq.cmp(&bd_sq)
                }
            }
        }
    }

    /// Whether `|x - self| <= tol`, decided exactly.
    pub fn within_of(&self, x: &Rat, tol: &Rat) -> bool {
        // x - tol <= self <= x + tol
        self.cmp_rational(&(x - tol)) != Ordering::Less
            && self.cmp_rational(&(x + tol)) != Ordering::Greater
    }

    /// f64 approximation, for diagnostics only.
    pub fn to_f64(&self) -> f64 {
        rat_to_f64(&self.a) + rat_to_f64(&self.b) * (self.d as f64).sqrt()
    }
}

/// Exact trichotomy for a rational `q` against a surd `s` (ordering of `q`).
pub fn surd_compare(q: &Rat, s: &QuadraticSurd) -> Ordering {
    s.cmp_rational(q).reverse()
}

fn sign_ordering(r: &Rat) -> Ordering {
    if r.is_zero() {
        Ordering::Equal
    } else if r.is_negative() {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

fn is_square_free(d: u64) -> bool {
    let mut d = d;
    let mut p = 2u64;
    while p * p <= d {
        if d.is_multiple_of(p) {
            d /= p;
            if d.is_multiple_of(p) {
                return false;
            }
        }
        p += 1;
    }
    true
}

pub(crate) fn rat_to_f64(r: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", rat_string(&self.a))
        } else if self.a.is_zero() {
            write!(f, "{}*sqrt({})", rat_string(&self.b), self.d)
        } else {
            write!(f, "{} + {}*sqrt({})", rat_string(&self.a), rat_string(&self.b), self.d)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    #[test]
    fn simple_orderings() {
        let sqrt2 = QuadraticSurd::new(rat(0), rat(1), 2).unwrap();
        assert_eq!(surd_compare(&rat(2), &sqrt2), Ordering::Greater);
        assert_eq!(surd_compare(&rat(1), &sqrt2), Ordering::Less);
        let three = QuadraticSurd::new(rat(3), rat(0), 5).unwrap();
        assert_eq!(surd_compare(&rat(3), &three), Ordering::Equal);
    }

    #[test]
    fn squaring_with_sign_bookkeeping() {
        // 17/8 vs 6(3 + sqrt 5)/15 = 6/5 + (2/5) sqrt 5
        let s = QuadraticSurd::new(ratio(6, 5), ratio(2, 5), 5).unwrap();
        assert_eq!(surd_compare(&ratio(17, 8), &s), Ordering::Greater);
        // negative b branch: 3 - sqrt 2 vs 3/2 (3 - 1.414 = 1.586 > 1.5)
        let t = QuadraticSurd::new(rat(3), rat(-1), 2).unwrap();
        assert_eq!(surd_compare(&ratio(3, 2), &t), Ordering::Less);
        assert_eq!(surd_compare(&rat(2), &t), Ordering::Greater);
    }

    #[test]
    fn square_free_validation() {
        assert!(QuadraticSurd::new(rat(0), rat(1), 12).is_err());
        assert!(QuadraticSurd::new(rat(0), rat(1), 1).is_err());
        assert!(QuadraticSurd::new(rat(0), rat(1), 30).is_ok());
    }

    #[test]
    fn within_tolerance() {
        let target = QuadraticSurd::three_plus_two_sqrt2();
        // 3 + 2 sqrt 2 = 5.8284...
        assert!(target.within_of(&ratio(583, 100), &ratio(1, 100)));
        assert!(!target.within_of(&ratio(580, 100), &ratio(1, 100)));
    }

    #[test]
    fn agreement_with_floats_on_random_cases() {
        // Deterministic LCG; the exact path is authoritative, floats only
        // corroborate when they are decisively far from a tie.
        let mut state = 0x2545f4914f6cdd1du64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) as i64
        };
        for _ in 0..1000 {
            let a = ratio(next() % 200 - 100, next() % 50 + 1);
            let b = ratio(next() % 200 - 100, next() % 50 + 1);
            let d = [2u64, 3, 5, 7][(next() % 4) as usize];
            let q = ratio(next() % 400 - 200, next() % 60 + 1);
            let s = QuadraticSurd::new(a, b, d).unwrap();
            let approx = rat_to_f64(&q) - s.to_f64();
            if approx.abs() > 1e-6 {
                let expect = if approx > 0.0 { Ordering::Greater } else { Ordering::Less };
                assert_eq!(surd_compare(&q, &s), expect, "q = {q}, s = {s}");
            }
        }
    }
}
