//! Bound certificates: prove `lo <= f(x) <= hi` on `[from, built_to]` for a
//! patchwork, piece by piece. For a piece u/v with v > 0 on its interval
//! (established at build time), the lower bound is the nonnegativity of
//! `u - lo*v` and the upper bound of `hi*v - u`; both go through the same
//! shift/Sturm positivity engine as the monotonicity certificates, plus
//! exact endpoint evaluations so the closed interval is covered.

use num_traits::Signed;

use crate::exact::{rat, Rat};
use crate::par;

use super::patchwork::Patchwork;
use super::positivity::{certify_positive, PositivityCheck};

#[derive(Clone, Debug)]
pub struct BoundIntervalRecord {
    pub n: i64,
    /// Effective left endpoint (the piece may be clipped by `from`).
    pub from: Rat,
    pub lower: PositivityCheck,
    pub upper: PositivityCheck,
    /// Exact endpoint checks of the closed interval.
    pub endpoints_ok: bool,
}

impl BoundIntervalRecord {
    pub fn ok(&self) -> bool {
        self.lower.verdict && self.upper.verdict && self.endpoints_ok
    }
}

#[derive(Clone, Debug)]
pub struct BoundCertificate {
    pub kind: String,
    pub t: Option<Rat>,
    pub lo: Rat,
    pub hi: Rat,
    pub from: Rat,
    pub built_to: i64,
    pub k_max: i64,
    pub intervals: Vec<BoundIntervalRecord>,
    pub verdict: bool,
}

/// Certify `lo <= f <= hi` on `[from, built_to]`.
pub fn certify_bounds(
    p: &Patchwork,
    lo: &Rat,
    hi: &Rat,
    from: &Rat,
    k_max: i64,
    parallel: bool,
) -> BoundCertificate {
    let work: Vec<_> = p
        .pieces
        .iter()
        .filter(|piece| rat(piece.start + 1) > *from)
        .map(|piece| (piece.start, piece.func.clone()))
        .collect();
    let (lo_c, hi_c, from_c) = (lo.clone(), hi.clone(), from.clone());
    let intervals: Vec<BoundIntervalRecord> = par::map_ordered(work, parallel, move |(n, func)| {
        let left = rat(n).max(from_c.clone());
        let right = rat(n + 1);
        let u = func.num();
        let v = func.den();
        let lower_poly = u - &v.scale(&lo_c);
        let upper_poly = &v.scale(&hi_c) - u;
        let lower = certify_positive(&lower_poly, &left, &right, k_max, false);
        let upper = certify_positive(&upper_poly, &left, &right, k_max, false);
        let endpoints_ok = [&left, &right].iter().all(|x| {
            !lower_poly.eval(x).is_negative() && !upper_poly.eval(x).is_negative()
        });
        BoundIntervalRecord { n, from: left, lower, upper, endpoints_ok }
    });
    let verdict = !intervals.is_empty() && intervals.iter().all(BoundIntervalRecord::ok);
    let t = match &p.kind {
        super::patchwork::PatchworkKind::Legendre(t) => Some(t.clone()),
        _ => None,
    };
    BoundCertificate {
        kind: p.kind.name().into(),
        t,
        lo: lo.clone(),
        hi: hi.clone(),
        from: from.clone(),
        built_to: p.built_to(),
        k_max,
        intervals,
        verdict,
    }
}
