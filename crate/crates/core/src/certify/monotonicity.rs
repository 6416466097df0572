//! Monotonicity certificates: prove a patchwork non-decreasing (or strictly
//! increasing) by certifying the derivative numerator of every piece
//! positive on its interval. Intervals are independent, so the checks run
//! through the parallel map; the certificate is assembled in interval order
//! either way.

use crate::exact::Rat;
use crate::par;

use super::patchwork::Patchwork;
use super::positivity::{certify_positive, unit_interval, PositivityCheck};

#[derive(Clone, Debug)]
pub struct CertifyOptions {
    /// Largest shift tried before falling back to Sturm analysis.
    pub k_max: i64,
    /// Strict positivity of the derivative instead of nonnegativity.
    /// The default is the weak mode: monotone non-decreasing is exactly
    /// what the log-convexity reduction needs, and it lets constant
    /// patchworks (Legendre at t = 1) certify.
    pub strict: bool,
    pub parallel: bool,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions { k_max: 8, strict: false, parallel: par::parallel_enabled() }
    }
}

/// One certified interval of a monotonicity certificate.
#[derive(Clone, Debug)]
pub struct IntervalRecord {
    pub n: i64,
    pub check: PositivityCheck,
}

#[derive(Clone, Debug)]
pub struct MonotonicityCertificate {
    pub kind: String,
    pub t: Option<Rat>,
    pub built_to: i64,
    pub strict: bool,
    pub k_max: i64,
    pub intervals: Vec<IntervalRecord>,
    pub verdict: bool,
}

/// Certify the derivative numerator of every piece positive on its open
/// interval. A `false` verdict is a result, not an error.
pub fn certify_increasing(p: &Patchwork, opts: &CertifyOptions) -> MonotonicityCertificate {
    let work: Vec<(i64, crate::exact::Poly)> = p
        .pieces
        .iter()
        .map(|piece| (piece.start, piece.func.derivative_numerator()))
        .collect();
    let k_max = opts.k_max;
    let strict = opts.strict;
    let intervals: Vec<IntervalRecord> = par::map_ordered(work, opts.parallel, move |(n, num)| {
        let (lo, hi) = unit_interval(n);
        IntervalRecord { n, check: certify_positive(&num, &lo, &hi, k_max, strict) }
    });
    let verdict = intervals.iter().all(|r| r.check.verdict);
    let t = match &p.kind {
        super::patchwork::PatchworkKind::Legendre(t) => Some(t.clone()),
        _ => None,
    };
    MonotonicityCertificate {
        kind: p.kind.name().into(),
        t,
        built_to: p.built_to(),
        strict: opts.strict,
        k_max: opts.k_max,
        intervals,
        verdict,
    }
}

impl MonotonicityCertificate {
    /// Records for intervals `(n, n+1)` with `from <= n < to`.
    pub fn records_in(&self, from: i64, to: i64) -> impl Iterator<Item = &IntervalRecord> {
        self.intervals.iter().filter(move |r| r.n >= from && r.n < to)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::patchwork::{build_patchwork, PatchworkKind};
    use crate::certify::positivity::Method;
    use crate::exact::rat;

    #[test]
    fn motzkin_first_interval_is_constant_derivative() {
        let p = build_patchwork(PatchworkKind::Motzkin, 6).unwrap();
        let cert = certify_increasing(&p, &CertifyOptions::default());
        assert!(cert.verdict);
        // the piece on [3,4] has derivative numerator a positive constant
        let record = cert.intervals.iter().find(|r| r.n == 3).unwrap();
        assert_eq!(record.check.method, Method::Shift { k: 0 });
        assert_eq!(record.check.numerator.len(), 1);
    }

    #[test]
    fn constant_patchwork_passes_weak_fails_strict() {
        let p = build_patchwork(PatchworkKind::Legendre(rat(1)), 6).unwrap();
        let weak = certify_increasing(&p, &CertifyOptions::default());
        assert!(weak.verdict);
        let strict =
            certify_increasing(&p, &CertifyOptions { strict: true, ..CertifyOptions::default() });
        assert!(!strict.verdict);
    }

    #[test]
    fn parallel_and_sequential_agree() {
        let p = build_patchwork(PatchworkKind::Rank1, 14).unwrap();
        let par = certify_increasing(&p, &CertifyOptions { parallel: true, ..Default::default() });
        let seq = certify_increasing(&p, &CertifyOptions { parallel: false, ..Default::default() });
        assert_eq!(par.verdict, seq.verdict);
        assert_eq!(par.intervals.len(), seq.intervals.len());
        for (a, b) in par.intervals.iter().zip(&seq.intervals) {
            assert_eq!(a.n, b.n);
            assert_eq!(a.check.numerator, b.check.numerator);
            assert_eq!(a.check.method, b.check.method);
            assert_eq!(a.check.verdict, b.check.verdict);
        }
    }

    #[test]
    fn rank1_certifies_by_shift_within_interval_start() {
        // The minimal certifying shift grows like n - 4 (the derivative
        // numerator has real roots marching up just below the interval), so
        // a generous k_max keeps every interval on the shift method. The
        // soundness bound k <= n always holds.
        let p = build_patchwork(PatchworkKind::Rank1, 16).unwrap();
        let opts = CertifyOptions { k_max: 16, ..CertifyOptions::default() };
        let cert = certify_increasing(&p, &opts);
        assert!(cert.verdict);
        for r in cert.records_in(5, 16) {
            match r.check.method {
                Method::Shift { k } => {
                    assert!(k <= r.n, "unsound shift on interval {}", r.n);
                    assert!(k <= (r.n - 4).max(1), "interval {} needed k = {k}", r.n);
                }
                Method::Sturm { .. } => panic!("interval {} fell back to Sturm", r.n),
            }
        }
    }

    #[test]
    fn rank1_with_small_kmax_falls_back_to_sturm_and_still_passes() {
        let p = build_patchwork(PatchworkKind::Rank1, 15).unwrap();
        let cert = certify_increasing(&p, &CertifyOptions::default());
        assert!(cert.verdict);
        assert!(cert
            .intervals
            .iter()
            .any(|r| matches!(r.check.method, Method::Sturm { .. })));
    }
}
