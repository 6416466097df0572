//! Exact computation and certification of combinatorial sequence properties.
//!
//! Everything here is built on arbitrary-precision integers and rationals:
//! sequence engines driven by holonomic-style recursions, brute-force
//! enumeration oracles that ground-truth them at small sizes, and a
//! certification layer that extends ratio recursions to continuous
//! piecewise-rational functions ("patchworks") and proves monotonicity,
//! bounds, and log-convexity/concavity claims by exact shifted-coefficient
//! positivity tests with a Sturm-sequence fallback.
//!
//! The only non-exact computation in the crate is the asymptotic ratio
//! check, which is isolated in [`certify::asymptotic_check_motzkin`].

pub mod certify;
pub mod error;
pub mod exact;
pub mod oracles;
pub mod par;
pub mod sequences;

pub use error::{Error, Result};
