//! Rational functions in canonical form.
//!
//! Canonical means: numerator and denominator are coprime integer
//! polynomials with no common content, and the denominator has a positive
//! leading coefficient. Equality of canonical forms is structural equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::poly::Poly;
use super::{rat, Rat};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Canonicalize `num/den`. Panics if `den` is the zero polynomial; that
    /// is a construction bug, not a data condition.
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFunc { num: Poly::zero(), den: Poly::one() };
        }
        let g = Poly::gcd(&num, &den);
        let num = num.exact_div(&g).expect("gcd divides numerator");
        let den = den.exact_div(&g).expect("gcd divides denominator");

        // Scale the coprime pair by one positive rational so both sides are
        // integer polynomials with no joint content: num = sn * n_prim and
        // den = sd * d_prim with sn, sd > 0, so num/den = (sn/sd) n_prim/d_prim
        // and sn/sd = p/q in lowest terms gives the pair (p n_prim, q d_prim).
        let n_prim = num.primitive_bigint_coeffs();
        let d_prim = den.primitive_bigint_coeffs();
        let s = scalar_of(&num, &n_prim) / scalar_of(&den, &d_prim);
        let mut num = Poly::from_bigints(n_prim).scale(&Rat::from_integer(s.numer().clone()));
        let mut den = Poly::from_bigints(d_prim).scale(&Rat::from_integer(s.denom().clone()));
        if den.leading().is_some_and(Signed::is_negative) {
            num = -&num;
            den = -&den;
        }
        RatFunc { num, den }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc::new(p, Poly::one())
    }

    pub fn constant(c: Rat) -> Self {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn zero() -> Self {
        RatFunc::constant(rat(0))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.degree().is_none_or(|d| d == 0) && self.den.degree() == Some(0)
    }

    /// Evaluate at a rational point; `None` at a pole.
    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x) / d)
    }

    /// Exact quotient-rule derivative, canonicalized.
    pub fn derivative(&self) -> RatFunc {
        RatFunc::new(self.derivative_numerator(), &self.den * &self.den)
    }

    /// The raw derivative numerator `num' * den - num * den'`, without the
    /// canonicalizing gcd. Over an interval where `den` has no zeros this
    /// has the same sign as the derivative, which is all the positivity
    /// certificates need, and skipping the gcd keeps them fast.
    pub fn derivative_numerator(&self) -> Poly {
        &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative())
    }

    /// `x -> f(x + s)`, exactly. Canonical form is preserved by a shift.
    pub fn substitute_shift(&self, s: i64) -> RatFunc {
        RatFunc::new(self.num.shift(s), self.den.shift(s))
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<RatFunc> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn reciprocal(&self) -> Result<RatFunc> {
        RatFunc::from_poly(Poly::one()).checked_div(self)
    }
}

fn scalar_of(p: &Poly, primitive: &[BigInt]) -> Rat {
    // The positive rational s with p = s * primitive(p).
    match p.coeffs().iter().zip(primitive).find(|(c, _)| !c.is_zero()) {
        Some((c, pi)) => c / Rat::from_integer(pi.clone()),
        None => rat(1),
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
