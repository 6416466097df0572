//! Truncated formal power series over exact rationals.
//!
//! A series carries exactly `order` coefficients and all arithmetic is
//! performed modulo `x^order`. Square roots use the direct coefficient
//! recursion from `t^2 = s`, so no series division is needed first.

use num_traits::{One, Zero};

use super::poly::Poly;
use super::{rat, Rat};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PowerSeries {
    coeffs: Vec<Rat>,
}

impl PowerSeries {
    /// Series with the given coefficients; the truncation order is their count.
    pub fn new(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "series needs a positive truncation order");
        PowerSeries { coeffs }
    }

    pub fn from_poly(p: &Poly, order: usize) -> Self {
        let coeffs = (0..order).map(|i| p.coeff(i)).collect();
        PowerSeries::new(coeffs)
    }

    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![rat(0); order];
        coeffs[0] = rat(1);
        PowerSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(|| rat(0))
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        PowerSeries::new(self.coeffs[..order.min(self.coeffs.len())].to_vec())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        PowerSeries::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        PowerSeries::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let mut out = vec![rat(0); n];
        for i in 0..n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..n - i {
                let prod = &self.coeffs[i] * &rhs.coeffs[j];
                out[i + j] += prod;
            }
        }
        PowerSeries::new(out)
    }

    /// Drop the first `k` coefficients (exact division by `x^k`).
    /// Errors if any of the dropped coefficients is nonzero.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if self.coeffs[..k.min(self.order())].iter().any(|c| !c.is_zero()) {
            return Err(Error::InvalidInput(format!(
                "series not divisible by x^{k}"
            )));
        }
        if self.order() <= k {
            return Err(Error::InvalidInput("series order too small for shift".into()));
        }
        Ok(PowerSeries::new(self.coeffs[k..].to_vec()))
    }

    pub fn scale(&self, s: &Rat) -> Self {
        PowerSeries::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// The series `t` with `t^2 = self` (mod `x^order`); requires constant
    /// term 1. Coefficient recursion: t_n = (s_n - sum_{i=1}^{n-1} t_i t_{n-i}) / 2.
    pub fn sqrt(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantTermNotOne);
        }
        let n = self.order();
        let mut t = vec![rat(0); n];
        t[0] = rat(1);
        let half = Rat::new(1.into(), 2.into());
        for m in 1..n {
            let mut conv = rat(0);
            for i in 1..m {
                conv += &t[i] * &t[m - i];
            }
            t[m] = (&self.coeffs[m] - conv) * &half;
        }
        Ok(PowerSeries::new(t))
    }

    /// Multiplicative inverse mod `x^order`; requires constant term 1.
    pub fn inverse(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantTermNotOne);
        }
        let n = self.order();
        let mut w = vec![rat(0); n];
        w[0] = rat(1);
        for m in 1..n {
            let mut acc = rat(0);
            for k in 1..=m {
                acc += &self.coeffs[k] * &w[m - k];
            }
            w[m] = -acc;
        }
        Ok(PowerSeries::new(w))
    }

    /// The series `u` with `u^2 * self = 1` (mod `x^order`).
    pub fn inv_sqrt(&self) -> Result<Self> {
        self.sqrt()?.inverse()
    }
}
