//! Log-behavior classification, Newton's normalized log-concavity test, and
//! ratio interlacing. All comparisons are exact cross-products; there is no
//! division anywhere in the classification.

use std::cmp::Ordering;

use num_traits::Signed;

use crate::exact::{ratio, surd_compare, Poly, QuadraticSurd, Rat};
use crate::sequences::{binomial, RatioSequence, RationalSequence, SequenceTable};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LogBehavior {
    LogConvex,
    LogConcave,
    LogStraight,
    Neither,
}

impl LogBehavior {
    pub fn as_str(&self) -> &'static str {
        match self {
            LogBehavior::LogConvex => "log-convex",
            LogBehavior::LogConcave => "log-concave",
            LogBehavior::LogStraight => "log-straight",
            LogBehavior::Neither => "neither",
        }
    }
}

/// Location of the maximum of a unimodal sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeakInfo {
    /// Smallest absolute index attaining the maximum.
    pub index: i64,
    /// True when the maximum value repeats.
    pub plateau: bool,
}

#[derive(Clone, Debug)]
pub struct ConvexityReport {
    pub sequence: String,
    pub property: LogBehavior,
    /// First index n with a_n^2 < a_{n-1} a_{n+1} (log-concavity violated).
    pub first_concavity_violation: Option<i64>,
    /// First index n with a_n^2 > a_{n-1} a_{n+1} (log-convexity violated).
    pub first_convexity_violation: Option<i64>,
    /// Peak or plateau, reported for log-concave sequences.
    pub peak: Option<PeakInfo>,
}

/// Classify a positive sequence by exact cross-product comparisons
/// a_n^2 vs a_{n-1} a_{n+1}.
pub fn check_log_behavior(table: &SequenceTable) -> Result<ConvexityReport> {
    classify(&table.name, table.start_index, &table.to_rationals())
}

pub fn check_log_behavior_rationals(seq: &RationalSequence) -> Result<ConvexityReport> {
    classify(&seq.name, seq.start_index, &seq.values)
}

fn classify(name: &str, start_index: i64, values: &[Rat]) -> Result<ConvexityReport> {
    for (i, v) in values.iter().enumerate() {
        if !v.is_positive() {
            return Err(Error::NonPositiveValue { name: name.into(), index: start_index + i as i64 });
        }
    }
    let mut first_concavity = None;
    let mut first_convexity = None;
    for (i, w) in values.windows(3).enumerate() {
        let square = &w[1] * &w[1];
        let product = &w[0] * &w[2];
        let n = start_index + i as i64 + 1;
        match square.cmp(&product) {
            Ordering::Less if first_concavity.is_none() => first_concavity = Some(n),
            Ordering::Greater if first_convexity.is_none() => first_convexity = Some(n),
            _ => {}
        }
    }
    let property = match (first_concavity, first_convexity) {
        (None, None) => LogBehavior::LogStraight,
        (None, Some(_)) => LogBehavior::LogConcave,
        (Some(_), None) => LogBehavior::LogConvex,
        (Some(_), Some(_)) => LogBehavior::Neither,
    };
    let peak = if matches!(property, LogBehavior::LogConcave | LogBehavior::LogStraight) {
        let max = values.iter().max().expect("non-empty");
        let index = values.iter().position(|v| v == max).expect("max present");
        let plateau = values.iter().filter(|v| *v == max).count() > 1;
        Some(PeakInfo { index: start_index + index as i64, plateau })
    } else {
        None
    };
    Ok(ConvexityReport {
        sequence: name.into(),
        property,
        first_concavity_violation: first_concavity,
        first_convexity_violation: first_convexity,
        peak,
    })
}

/// First index where the ratio sequence decreases, if any.
pub fn is_nondecreasing(r: &RatioSequence) -> Option<i64> {
    r.values
        .windows(2)
        .position(|w| w[1] < w[0])
        .map(|i| r.start_index + i as i64 + 1)
}

/// Newton's normalized test: for p with nonnegative coefficients a_k check
/// that a_k / C(n, k) is a log-concave sequence, exactly over rationals.
pub fn newton_normalized_logconcavity(p: &Poly) -> Result<bool> {
    if p.coeffs().iter().any(Signed::is_negative) {
        return Err(Error::InvalidInput("polynomial has a negative coefficient".into()));
    }
    if p.is_zero() {
        return Ok(true);
    }
    let n = p.degree().unwrap();
    let normalized: Vec<Rat> = (0..=n)
        .map(|k| p.coeff(k) / Rat::from_integer(binomial(n, k)))
        .collect();
    Ok(normalized.windows(3).all(|w| &w[1] * &w[1] >= &w[0] * &w[2]))
}

/// The increasing comparison sequences a_n used to sandwich ratio sequences.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InterlaceBound {
    /// a_n = 6n / (2n+3), for the Motzkin ratios (from n = 3).
    Motzkin,
    /// a_n = 2n phi^2 / (2n+3) = n (3 + sqrt 5) / (2n+3), rank-1 (from n = 6).
    Rank1,
}

impl InterlaceBound {
    pub fn default_start(&self) -> i64 {
        match self {
            InterlaceBound::Motzkin => 3,
            InterlaceBound::Rank1 => 6,
        }
    }

    /// Whether a_n <= x <= a_{n+1}, decided exactly (surd-aware for rank 1).
    pub fn sandwiches(&self, n: i64, x: &Rat) -> bool {
        match self {
            InterlaceBound::Motzkin => {
                let lower = ratio(6 * n, 2 * n + 3);
                let upper = ratio(6 * (n + 1), 2 * n + 5);
                lower <= *x && *x <= upper
            }
            InterlaceBound::Rank1 => {
                // n (3 + sqrt 5)/(2n+3) <= x <= (n+1)(3 + sqrt 5)/(2n+5)
                let lower = QuadraticSurd::new(
                    ratio(3 * n, 2 * n + 3),
                    ratio(n, 2 * n + 3),
                    5,
                )
                .expect("5 is square-free");
                let upper = QuadraticSurd::new(
                    ratio(3 * (n + 1), 2 * n + 5),
                    ratio(n + 1, 2 * n + 5),
                    5,
                )
                .expect("5 is square-free");
                surd_compare(x, &lower) != Ordering::Less
                    && surd_compare(x, &upper) != Ordering::Greater
            }
        }
    }
}

/// Per-n interlacing verdicts a_n <= x_n <= a_{n+1} for n in [n_from, n_to].
pub fn interlace_check(
    r: &RatioSequence,
    bound: InterlaceBound,
    n_from: i64,
    n_to: i64,
) -> Vec<(i64, bool)> {
    (n_from..=n_to.min(r.last_index()))
        .map(|n| {
            let x = r.get(n).expect("in range");
            (n, bound.sandwiches(n, x))
        })
        .collect()
}

/// True when the sequence is unimodal: rises (weakly) then falls (weakly).
pub fn is_unimodal(values: &[Rat]) -> bool {
    let mut i = 1;
    while i < values.len() && values[i - 1] <= values[i] {
        i += 1;
    }
    while i < values.len() && values[i - 1] >= values[i] {
        i += 1;
    }
    i == values.len()
}
