//! The shared positivity engine behind every certificate.
//!
//! To prove a polynomial nonnegative (or strictly positive) on an interval
//! `(lo, hi)`, first try the shifted-coefficient test: if every coefficient
//! of `N(x + k)` is nonnegative for some integer `0 <= k <= lo`, then `N` is
//! nonnegative on `[k, oo)` and strictly positive there unless it is the
//! zero polynomial. When no shift works, fall back to exact Sturm-based
//! sign analysis on the interval. Both paths are integer-only and fully
//! re-checkable from the stored data.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::exact::poly::Poly;
use crate::exact::{rat, roots, Rat};

/// How an interval's positivity was decided.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Method {
    /// All coefficients of the numerator shifted by `k` are nonnegative.
    Shift { k: i64 },
    /// Exact root counting; `distinct_roots` interior roots were found.
    Sturm { distinct_roots: usize },
}

/// Re-checkable positivity evidence for one polynomial on one interval.
#[derive(Clone, Debug)]
pub struct PositivityCheck {
    /// The tested polynomial, in primitive integer form (positive scaling
    /// of the true numerator, so all sign information is preserved).
    pub numerator: Vec<BigInt>,
    pub method: Method,
    pub verdict: bool,
}

/// Certify `num >= 0` (or `> 0` when `strict`) on the open interval
/// `(lo, hi)`, trying shifts `k = 0..=min(k_max, floor(lo))` first.
pub fn certify_positive(num: &Poly, lo: &Rat, hi: &Rat, k_max: i64, strict: bool) -> PositivityCheck {
    let numerator = num.primitive_bigint_coeffs();
    if numerator.is_empty() {
        // zero polynomial: nonnegative, never strictly positive
        return PositivityCheck { numerator, method: Method::Shift { k: 0 }, verdict: !strict };
    }
    let prim = Poly::from_bigints(numerator.clone());
    if !lo.is_negative() {
        let shift_cap = k_max.min(lo.floor().numer().try_into().unwrap_or(0));
        // The set of certifying shifts is upward closed (shifting a
        // nonnegative-coefficient polynomial by +1 keeps all coefficients
        // nonnegative), so test the cap once and binary-search the minimum.
        let works = |k: i64| prim.shift(k).coeffs().iter().all(|c| !c.is_negative());
        if shift_cap >= 0 && works(shift_cap) {
            let (mut bad, mut good) = (-1i64, shift_cap);
            while good - bad > 1 {
                let mid = bad + (good - bad) / 2;
                if works(mid) {
                    good = mid;
                } else {
                    bad = mid;
                }
            }
            // nonzero with nonnegative coefficients: strictly positive on (good, oo)
            return PositivityCheck { numerator, method: Method::Shift { k: good }, verdict: true };
        }
    }
    let verdict = if strict {
        roots::is_strictly_positive_on(&prim, lo, hi)
    } else {
        roots::is_nonnegative_on(&prim, lo, hi)
    };
    let distinct_roots = roots::count_roots_open(&prim, lo, hi);
    PositivityCheck { numerator, method: Method::Sturm { distinct_roots }, verdict }
}

/// Re-run a stored check from its serialized data. Used by the independent
/// verifier: the coefficients come from the document, not from the prover.
pub fn recheck(
    numerator: &[BigInt],
    method: &Method,
    lo: &Rat,
    hi: &Rat,
    strict: bool,
) -> bool {
    let poly = Poly::from_bigints(numerator.to_vec());
    match method {
        Method::Shift { k } => {
            if *k < 0 || Rat::from_integer(BigInt::from(*k)) > *lo {
                return false;
            }
            if poly.is_zero() {
                return !strict;
            }
            poly.shift(*k).coeffs().iter().all(|c| !c.is_negative())
        }
        Method::Sturm { .. } => {
            if poly.is_zero() {
                return !strict;
            }
            if strict {
                roots::is_strictly_positive_on(&poly, lo, hi)
            } else {
                roots::is_nonnegative_on(&poly, lo, hi)
            }
        }
    }
}

/// Convenience: interval endpoints for a unit interval starting at `n`.
pub fn unit_interval(n: i64) -> (Rat, Rat) {
    (rat(n), rat(n + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    #[test]
    fn constant_certifies_at_shift_zero() {
        let check = certify_positive(&Poly::from_ints(&[15]), &rat(3), &rat(4), 8, true);
        assert!(check.verdict);
        assert_eq!(check.method, Method::Shift { k: 0 });
    }

    #[test]
    fn shift_finds_certificate_for_mixed_signs() {
        // 3x - 9 is nonnegative on (3, 4) but has a negative coefficient;
        // shifting by 3 gives 3x, all nonnegative.
        let p = Poly::from_ints(&[-9, 3]);
        let check = certify_positive(&p, &rat(3), &rat(4), 8, false);
        assert!(check.verdict);
        assert_eq!(check.method, Method::Shift { k: 3 });
    }

    #[test]
    fn sturm_fallback_decides_when_shift_cannot() {
        // (x - 1/2)^2 + small is positive on (0, 1); no shift is allowed
        // beyond k = 0 there and x^2 - x + 26/100 has a negative coefficient.
        let p = Poly::new(vec![ratio(26, 100), rat(-1), rat(1)]);
        let check = certify_positive(&p, &rat(0), &rat(1), 8, true);
        assert!(check.verdict);
        assert!(matches!(check.method, Method::Sturm { distinct_roots: 0 }));
        // and a genuine sign change is refused
        let q = Poly::new(vec![ratio(1, 4), rat(-1), rat(1)]);
        let sign_change = certify_positive(&q, &rat(0), &rat(1), 8, true);
        assert!(!sign_change.verdict);
    }

    #[test]
    fn zero_polynomial_is_weak_only() {
        let weak = certify_positive(&Poly::zero(), &rat(2), &rat(3), 8, false);
        assert!(weak.verdict);
        let strict = certify_positive(&Poly::zero(), &rat(2), &rat(3), 8, true);
        assert!(!strict.verdict);
    }

    #[test]
    fn recheck_matches_prover() {
        let p = Poly::from_ints(&[-9, 3]);
        let check = certify_positive(&p, &rat(3), &rat(4), 8, false);
        assert!(recheck(&check.numerator, &check.method, &rat(3), &rat(4), false));
        // tampering with a coefficient flips the re-check
        let mut tampered = check.numerator.clone();
        tampered[0] = BigInt::from(-100);
        assert!(!recheck(&tampered, &check.method, &rat(3), &rat(4), false));
    }

    #[test]
    fn shift_cap_respects_interval_start() {
        // -x + 10 is positive on (0,1) but its shifted coefficients are
        // never all nonnegative; with lo = 0 only k = 0 may be tried.
        let p = Poly::from_ints(&[10, -1]);
        let check = certify_positive(&p, &rat(0), &rat(1), 8, true);
        assert!(matches!(check.method, Method::Sturm { .. }));
        assert!(check.verdict);
    }
}
