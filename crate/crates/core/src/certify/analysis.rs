//! Growth-constant enclosures, limit gap reports, the asymptotic ratio
//! check, and generating-function cross-checks.
//!
//! `asymptotic_check_motzkin` is the single place in the crate that touches
//! floating point: the comparison target involves pi, so the check runs in
//! log space with f64 headroom of ~1e-12, far below the 1% tolerance it is
//! used with. Everything else here is exact.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exact::{rat, ratio, Poly, PowerSeries, QuadraticSurd, Rat};
use crate::sequences::{self, RatioSequence, SequenceTable};
use crate::{Error, Result};

/// Exact rational enclosure of the growth constant alpha_l: the largest real
/// solution of x^l (x-2)^2 = 1. The left-hand side minus 1 is strictly
/// increasing on (2, 3] with g(2) = -1 < 0 and g(3) >= 0, so the largest
/// root lies there and plain bisection with dyadic midpoints encloses it.
pub fn alpha_root(l: u32, tol: &Rat) -> Result<(Rat, Rat)> {
    if !tol.is_positive() {
        return Err(Error::InvalidInput("tolerance must be positive".into()));
    }
    // g(x) = x^l (x-2)^2 - 1
    let x_l = {
        let mut p = Poly::one();
        for _ in 0..l {
            p = &p * &Poly::x();
        }
        p
    };
    let sq = &Poly::from_ints(&[-2, 1]) * &Poly::from_ints(&[-2, 1]);
    let g = &(&x_l * &sq) - &Poly::one();
    let (mut lo, mut hi) = (rat(2), rat(3));
    if g.eval(&hi).is_zero() {
        return Ok((hi.clone(), hi));
    }
    debug_assert!(g.eval(&lo).is_negative() && g.eval(&hi).is_positive());
    while &hi - &lo > *tol {
        let mid = (&lo + &hi) / rat(2);
        let v = g.eval(&mid);
        match v.cmp(&rat(0)) {
            Ordering::Equal => return Ok((mid.clone(), mid)),
            Ordering::Less => lo = mid,
            Ordering::Greater => hi = mid,
        }
    }
    Ok((lo, hi))
}

/// Gap report between the tail ratio x_N and a (possibly irrational) target,
/// decided exactly. Monotone bounded convergence is certified elsewhere;
/// the gap here is a diagnostic of how far the desk-scale tail sits.
#[derive(Clone, Debug)]
pub struct LimitReport {
    pub base_name: String,
    pub n: i64,
    pub target: String,
    pub tolerance: Rat,
    pub within_tolerance: bool,
    /// Exact check that the ratio tail (second half) never decreases.
    pub tail_nondecreasing: bool,
    /// Decimal rendering of x_N, for the report only.
    pub last_ratio_decimal: String,
}

pub fn limit_report(r: &RatioSequence, target: &QuadraticSurd, tol: &Rat) -> LimitReport {
    let n = r.last_index();
    let x = r.values.last().expect("non-empty ratio sequence");
    let within = target.within_of(x, tol);
    let half = r.values.len() / 2;
    let tail_nondecreasing = r.values[half..].windows(2).all(|w| w[0] <= w[1]);
    LimitReport {
        base_name: r.base_name.clone(),
        n,
        target: target.to_string(),
        tolerance: tol.clone(),
        within_tolerance: within,
        tail_nondecreasing,
        last_ratio_decimal: crate::exact::decimal_string(x, 12),
    }
}

#[derive(Clone, Debug)]
pub struct AsymptoticReport {
    pub n: i64,
    /// M_n / (sqrt(3/(4 pi)) 3^(n+1) n^(-3/2)) - 1, in f64.
    pub deviation: f64,
}

/// Compare M_n against sqrt(3/(4 pi)) 3^(n+1) n^(-3/2) in log space.
pub fn asymptotic_check_motzkin(table: &SequenceTable, n_check: i64) -> Result<AsymptoticReport> {
    let value = table
        .get(n_check)
        .ok_or_else(|| Error::InvalidInput(format!("index {n_check} not in table")))?;
    if n_check < 1 || !value.is_positive() {
        return Err(Error::InvalidInput("asymptotic check needs n >= 1".into()));
    }
    let n = n_check as f64;
    let ln_expected = 0.5 * (3.0 / (4.0 * std::f64::consts::PI)).ln()
        + (n + 1.0) * 3f64.ln()
        - 1.5 * n.ln();
    let deviation = (ln_bigint(value) - ln_expected).exp_m1();
    Ok(AsymptoticReport { n: n_check, deviation })
}

/// Natural log of a positive big integer via its top 64 bits; relative
/// error ~1e-16, independent of magnitude.
fn ln_bigint(v: &BigInt) -> f64 {
    let bits = v.bits();
    if bits <= 53 {
        return v.to_f64().expect("small integer fits").ln();
    }
    let shift = bits - 53;
    let top: BigInt = v >> shift;
    top.to_f64().expect("53 bits fit").ln() + shift as f64 * std::f64::consts::LN_2
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratingFunction {
    /// (1 - x - sqrt(1 - 2x - 3x^2)) / (2 x^2) against the Motzkin recursion.
    Motzkin,
    /// 1 / sqrt(1 - 6x + x^2) against the Delannoy values P_n(3).
    Delannoy,
}

/// Expand the closed-form generating function to `order` coefficients and
/// compare against the recursion pipeline, exactly.
pub fn series_identity_check(kind: GeneratingFunction, order: usize) -> Result<()> {
    if order == 0 {
        return Err(Error::InvalidInput("order must be at least 1".into()));
    }
    match kind {
        GeneratingFunction::Motzkin => {
            let radicand = PowerSeries::from_poly(&Poly::from_ints(&[1, -2, -3]), order + 2);
            let sqrt = radicand.sqrt()?;
            let numerator =
                PowerSeries::from_poly(&Poly::from_ints(&[1, -1]), order + 2).sub(&sqrt);
            let series = numerator.shift_down(2)?.scale(&ratio(1, 2));
            let table = sequences::motzkin_short(order - 1)?;
            compare_series("motzkin", &series, &table)
        }
        GeneratingFunction::Delannoy => {
            let base = PowerSeries::from_poly(&Poly::from_ints(&[1, -6, 1]), order);
            let series = base.inv_sqrt()?;
            let table = sequences::delannoy(order - 1)?;
            compare_series("delannoy", &series, &table)
        }
    }
}

fn compare_series(kind: &str, series: &PowerSeries, table: &SequenceTable) -> Result<()> {
    for (i, expected) in table.values.iter().enumerate() {
        let got = series.coeff(i);
        if !got.denom().is_one() || got.numer() != expected {
            return Err(Error::SeriesMismatch { kind: kind.into(), index: i });
        }
    }
    Ok(())
}
