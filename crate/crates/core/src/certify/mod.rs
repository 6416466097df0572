//! Certification layer: continuous piecewise-rational extensions of ratio
//! recursions ("patchworks"), machine-checkable positivity certificates for
//! their monotonicity and bounds, log-behavior checkers, interlacing,
//! root enclosures, limits, and the series identity cross-checks.

pub mod analysis;
pub mod bounds;
pub mod certificate;
pub mod convexity;
pub mod monotonicity;
pub mod patchwork;
pub mod positivity;

pub use analysis::{
    alpha_root, asymptotic_check_motzkin, limit_report, series_identity_check, AsymptoticReport,
    GeneratingFunction, LimitReport,
};
pub use bounds::{certify_bounds, BoundCertificate};
pub use certificate::{verify_bounds_document, verify_monotonicity_document, VerifyOutcome};
pub use convexity::{
    check_log_behavior, check_log_behavior_rationals, interlace_check, is_nondecreasing,
    newton_normalized_logconcavity, ConvexityReport, InterlaceBound, LogBehavior,
};
pub use monotonicity::{certify_increasing, CertifyOptions, MonotonicityCertificate};
pub use patchwork::{build_patchwork, Patchwork, PatchworkKind, Piece};
