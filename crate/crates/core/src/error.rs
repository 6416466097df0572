//! Crate-wide error type.

use std::fmt;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors fall into three groups: bad input, resource budgets, and internal
/// consistency failures. The last group (non-exact division, oracle mismatch,
/// pole/continuity violations) always indicates a bug in an engine or a wrong
/// construction, never a property that merely failed to hold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A recursion demanded a division that must be exact but was not.
    NonExactDivision { name: String, index: i64 },
    /// A value that must be an integer was not.
    NonIntegerValue { name: String, index: i64 },
    /// A sequence operation requires strictly positive values.
    NonPositiveValue { name: String, index: i64 },
    /// An enumeration exceeded its configured size budget.
    BudgetExceeded { family: &'static str, n: usize, max: usize },
    /// An engine disagreed with its ground-truth enumeration oracle.
    OracleMismatch { family: String, n: usize, got: String, expected: String },
    /// A patchwork piece has a pole (or non-positive denominator) on its interval.
    PoleInInterval { n: i64 },
    /// Adjacent patchwork pieces disagree at a shared endpoint.
    ContinuityViolation { n: i64, left: String, right: String },
    /// Series square roots require constant term exactly 1.
    ConstantTermNotOne,
    /// Division by a zero rational function or zero polynomial.
    DivisionByZero,
    /// Generating-function expansion disagrees with the recursion pipeline.
    SeriesMismatch { kind: String, index: usize },
    /// Malformed input (bad rational string, invalid argument, bad document).
    InvalidInput(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonExactDivision { name, index } => {
                write!(f, "non-exact division in `{name}` at index {index}")
            }
            Error::NonIntegerValue { name, index } => {
                write!(f, "non-integer value in `{name}` at index {index}")
            }
            Error::NonPositiveValue { name, index } => {
                write!(f, "non-positive value in `{name}` at index {index}")
            }
            Error::BudgetExceeded { family, n, max } => {
                write!(f, "enumeration budget exceeded for {family}: n = {n} > {max}")
            }
            Error::OracleMismatch { family, n, got, expected } => write!(
                f,
                "oracle mismatch for {family} at n = {n}: recursion gave {got}, oracle counted {expected}"
            ),
            Error::PoleInInterval { n } => {
                write!(f, "denominator not strictly positive on [{}, {}]", n, n + 1)
            }
            Error::ContinuityViolation { n, left, right } => {
                write!(f, "pieces disagree at x = {n}: {left} vs {right}")
            }
            Error::ConstantTermNotOne => write!(f, "series constant term must be 1"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::SeriesMismatch { kind, index } => {
                write!(f, "series expansion of {kind} disagrees with recursion at index {index}")
            }
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
