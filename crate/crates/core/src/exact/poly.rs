//! Dense univariate polynomials over exact rationals.
//!
//! Coefficients are stored in ascending degree order with no trailing zeros;
//! the zero polynomial is the empty coefficient vector. Degrees in this crate
//! stay well under a few hundred, so everything is plain O(n^2) arithmetic.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{rat, Rat};

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    /// Build from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(rat(1))
    }

    pub fn x() -> Self {
        Poly::new(vec![rat(0), rat(1)])
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn from_bigints(coeffs: Vec<BigInt>) -> Self {
        Poly::new(coeffs.into_iter().map(Rat::from_integer).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(|| rat(0))
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = rat(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rat::from_integer(BigInt::from(i)))
            .collect();
        Poly::new(coeffs)
    }

    pub fn scale(&self, s: &Rat) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Taylor shift: returns `q` with `q(x) = p(x + k)`, computed by the
    /// iterated synthetic (Horner) scheme, exactly.
    pub fn shift(&self, k: i64) -> Poly {
        if k == 0 || self.coeffs.len() <= 1 {
            return self.clone();
        }
        let kr = rat(k);
        let n = self.coeffs.len();
        let mut a = self.coeffs.clone();
        for i in 0..n - 1 {
            for j in (i..n - 1).rev() {
                let add = &a[j + 1] * &kr;
                a[j] += add;
            }
        }
        Poly::new(a)
    }

    /// Quotient and remainder of exact division over the rationals.
    /// Panics if `div` is zero.
    pub fn divrem(&self, div: &Poly) -> (Poly, Poly) {
        let d = div.degree().expect("division by zero polynomial");
        let lead = div.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![rat(0); rem.len() - d];
        for i in (d..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = &rem[i] / &lead;
            for j in 0..d {
                let sub = &div.coeffs[j] * &q;
                rem[i - d + j] -= sub;
            }
            rem[i] = rat(0);
            quot[i - d] = q;
        }
        (Poly::new(quot), Poly::new(rem))
    }

    /// Exact quotient, or `None` if the division leaves a remainder.
    pub fn exact_div(&self, div: &Poly) -> Option<Poly> {
        let (q, r) = self.divrem(div);
        r.is_zero().then_some(q)
    }

    /// Coefficients scaled by the unique positive rational that makes them
    /// integers with no common factor. Sign structure is preserved, so
    /// positivity questions are unaffected. Empty for the zero polynomial.
    pub fn primitive_bigint_coeffs(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| c.numer() * &lcm / c.denom()).collect();
        let mut content = BigInt::zero();
        for c in &ints {
            content = content.gcd(c);
        }
        ints.into_iter().map(|c| c / &content).collect()
    }

    /// Same scaling as [`Self::primitive_bigint_coeffs`], returned as a polynomial.
    pub fn primitive_part(&self) -> Poly {
        Poly::from_bigints(self.primitive_bigint_coeffs())
    }

    /// Polynomial gcd, normalized to a primitive integer polynomial with
    /// positive leading coefficient. Uses a primitive PRS over plain integer
    /// coefficient vectors: pseudo-remainders stay in the integers and each
    /// step divides out the content, which keeps growth polynomial and
    /// avoids per-operation rational reductions entirely.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let mut p = a.primitive_bigint_coeffs();
        let mut q = b.primitive_bigint_coeffs();
        if p.len() < q.len() {
            std::mem::swap(&mut p, &mut q);
        }
        while !q.is_empty() {
            let r = ints::primitive(ints::pseudo_rem(&p, &q));
            p = q;
            q = r;
        }
        if p.last().is_some_and(Signed::is_negative) {
            for c in &mut p {
                *c = -std::mem::take(c);
            }
        }
        Poly::from_bigints(p)
    }

    /// Strip all `(x - r)` factors, returning the quotient and the multiplicity.
    pub fn strip_root(&self, r: &Rat) -> (Poly, usize) {
        let mut p = self.clone();
        let mut mult = 0;
        let linear = Poly::new(vec![-r.clone(), rat(1)]);
        while !p.is_zero() && p.eval(r).is_zero() {
            p = p.exact_div(&linear).expect("root divides");
            mult += 1;
        }
        (p, mult)
    }
}

/// Integer-coefficient kernels used by the gcd and by the Sturm chains.
/// Coefficient vectors are ascending-degree with no trailing zeros.
pub(crate) mod ints {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{Signed, Zero};

    pub fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        v
    }

    /// Divide out the (positive) content; sign pattern is preserved.
    pub fn primitive(v: Vec<BigInt>) -> Vec<BigInt> {
        let v = trim(v);
        if v.is_empty() {
            return v;
        }
        let mut content = BigInt::zero();
        for c in &v {
            content = content.gcd(c);
        }
        v.into_iter().map(|c| c / &content).collect()
    }

    /// Pseudo-remainder of `a` by `b`: some integer multiple of rem(a, b).
    /// The overall sign is not meaningful; callers that need sign fidelity
    /// use [`pseudo_rem_sign_faithful`].
    pub fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        pseudo_rem_impl(a, b, false)
    }

    /// Pseudo-remainder scaled only by positive constants, so it has the
    /// same sign structure as the exact rational remainder.
    pub fn pseudo_rem_sign_faithful(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        pseudo_rem_impl(a, b, true)
    }

    fn pseudo_rem_impl(a: &[BigInt], b: &[BigInt], sign_faithful: bool) -> Vec<BigInt> {
        assert!(!b.is_empty(), "pseudo-division by zero");
        let db = b.len() - 1;
        let lc = &b[db];
        let scale = if sign_faithful { lc.abs() } else { lc.clone() };
        let flip = sign_faithful && lc.is_negative();
        let mut r = a.to_vec();
        loop {
            r = trim(r);
            if r.len() <= db {
                return r;
            }
            let dr = r.len() - 1;
            let lead = r[dr].clone();
            // r := scale * r - (+-1) * lead * x^(dr-db) * b; leading terms cancel
            for c in &mut r {
                *c *= &scale;
            }
            let mult = if flip { -lead } else { lead };
            for j in 0..=db {
                let sub = &mult * &b[j];
                r[dr - db + j] -= sub;
            }
        }
    }

    /// Sign of the polynomial at the rational `num/den` (den > 0), computed
    /// homogeneously in integers.
    pub fn sign_at(coeffs: &[BigInt], num: &BigInt, den: &BigInt) -> i8 {
        if coeffs.is_empty() {
            return 0;
        }
        let n = coeffs.len() - 1;
        let mut acc = coeffs[n].clone();
        let mut den_pow = BigInt::from(1);
        for i in (0..n).rev() {
            den_pow *= den;
            acc = acc * num + &coeffs[i] * &den_pow;
        }
        match acc.sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        Poly::new(out)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![rat(0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let prod = a * b;
                out[i + j] += prod;
            }
        }
        Poly::new(out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            match i {
                0 => write!(f, "{}", super::rat_string(&a))?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{}*", super::rat_string(&a))?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    #[test]
    fn shift_examples() {
        // (x^2 - 4x + 3) shifted by 2 is x^2 - 1
        let p = Poly::from_ints(&[3, -4, 1]);
        assert_eq!(p.shift(2), Poly::from_ints(&[-1, 0, 1]));
        // shift by 0 is the identity
        assert_eq!(p.shift(0), p);
        // (x+1)^3 shifted by -1 is x^3
        let cube = Poly::from_ints(&[1, 3, 3, 1]);
        assert_eq!(cube.shift(-1), Poly::from_ints(&[0, 0, 0, 1]));
    }

    #[test]
    fn shift_matches_evaluation() {
        let p = Poly::new(vec![ratio(1, 2), rat(-3), rat(0), ratio(7, 5), rat(2)]);
        let q = p.shift(3);
        for x in -4..=4 {
            assert_eq!(q.eval(&rat(x)), p.eval(&rat(x + 3)));
        }
    }

    #[test]
    fn divrem_roundtrip() {
        let a = Poly::from_ints(&[2, 0, -7, 1, 3]);
        let b = Poly::from_ints(&[-1, 4, 5]);
        let (q, r) = a.divrem(&b);
        assert!(r.degree() < b.degree());
        assert_eq!(&(&q * &b) + &r, a);
    }

    #[test]
    fn gcd_known_factor() {
        let common = Poly::from_ints(&[-3, 1]);
        let a = &common * &Poly::from_ints(&[1, 1, 2]);
        let b = &common * &Poly::from_ints(&[5, -2]);
        assert_eq!(Poly::gcd(&a, &b), common);
        // coprime pair
        let g = Poly::gcd(&Poly::from_ints(&[1, 1]), &Poly::from_ints(&[2, -1, 1]));
        assert_eq!(g, Poly::one());
    }

    #[test]
    fn primitive_coefficients() {
        let p = Poly::new(vec![ratio(3, 2), rat(-6), ratio(9, 4)]);
        let ints = p.primitive_bigint_coeffs();
        assert_eq!(ints, vec![BigInt::from(2), BigInt::from(-8), BigInt::from(3)]);
    }

    #[test]
    fn strip_root_multiplicity() {
        // (x-1)^2 (x+2)
        let p = &(&Poly::from_ints(&[-1, 1]) * &Poly::from_ints(&[-1, 1])) * &Poly::from_ints(&[2, 1]);
        let (q, m) = p.strip_root(&rat(1));
        assert_eq!(m, 2);
        assert_eq!(q, Poly::from_ints(&[2, 1]));
    }

    #[test]
    fn display_readable() {
        let p = Poly::from_ints(&[-1, 7]);
        assert_eq!(p.to_string(), "7*x - 1");
    }
}
