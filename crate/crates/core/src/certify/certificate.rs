//! Serialized certificate documents and the independent verifier.
//!
//! A certificate document carries everything needed to re-check it: the
//! patchwork kind and range (so the pieces can be rebuilt from scratch),
//! and per interval the primitive integer numerator plus the method that
//! decided its positivity. Coefficients are serialized as exact decimal
//! strings, never floats.
//!
//! The verifier is deliberately distinct from the prover: it rebuilds the
//! patchwork, recomputes each interval's numerator and compares it with the
//! stored coefficients (so any tampering with a single coefficient is
//! caught), then re-runs the stored method on the stored data and compares
//! verdicts.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::exact::{parse_rat, rat, rat_string};
use crate::{Error, Result};

use super::bounds::BoundCertificate;
use super::monotonicity::MonotonicityCertificate;
use super::patchwork::{build_patchwork, PatchworkKind};
use super::positivity::{recheck, Method, PositivityCheck};

pub const MONOTONICITY_DOCUMENT: &str = "monotonicity-certificate";
pub const BOUND_DOCUMENT: &str = "bound-certificate";

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckDoc {
    /// Primitive integer coefficients, ascending degree, decimal strings.
    pub numerator: Vec<String>,
    pub method: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distinct_roots: Option<usize>,
    pub verdict: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MonotonicityIntervalDoc {
    pub n: i64,
    #[serde(flatten)]
    pub check: CheckDoc,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MonotonicityDocument {
    pub document: String,
    pub version: String,
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<String>,
    pub built_to: i64,
    pub strict: bool,
    pub k_max: i64,
    pub verdict: bool,
    pub intervals: Vec<MonotonicityIntervalDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BoundIntervalDoc {
    pub n: i64,
    pub from: String,
    pub lower: CheckDoc,
    pub upper: CheckDoc,
    pub endpoints_ok: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BoundDocument {
    pub document: String,
    pub version: String,
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<String>,
    pub lo: String,
    pub hi: String,
    pub from: String,
    pub built_to: i64,
    pub k_max: i64,
    pub verdict: bool,
    pub intervals: Vec<BoundIntervalDoc>,
}

fn check_doc(check: &PositivityCheck) -> CheckDoc {
    let (method, k, distinct_roots) = match check.method {
        Method::Shift { k } => ("shift".to_string(), Some(k), None),
        Method::Sturm { distinct_roots } => ("sturm".to_string(), None, Some(distinct_roots)),
    };
    CheckDoc {
        numerator: check.numerator.iter().map(BigInt::to_string).collect(),
        method,
        k,
        distinct_roots,
        verdict: check.verdict,
    }
}

impl From<&MonotonicityCertificate> for MonotonicityDocument {
    fn from(cert: &MonotonicityCertificate) -> Self {
        MonotonicityDocument {
            document: MONOTONICITY_DOCUMENT.into(),
            version: env!("CARGO_PKG_VERSION").into(),
            kind: cert.kind.clone(),
            t: cert.t.as_ref().map(rat_string),
            built_to: cert.built_to,
            strict: cert.strict,
            k_max: cert.k_max,
            verdict: cert.verdict,
            intervals: cert
                .intervals
                .iter()
                .map(|r| MonotonicityIntervalDoc { n: r.n, check: check_doc(&r.check) })
                .collect(),
        }
    }
}

impl From<&BoundCertificate> for BoundDocument {
    fn from(cert: &BoundCertificate) -> Self {
        BoundDocument {
            document: BOUND_DOCUMENT.into(),
            version: env!("CARGO_PKG_VERSION").into(),
            kind: cert.kind.clone(),
            t: cert.t.as_ref().map(rat_string),
            lo: rat_string(&cert.lo),
            hi: rat_string(&cert.hi),
            from: rat_string(&cert.from),
            built_to: cert.built_to,
            k_max: cert.k_max,
            verdict: cert.verdict,
            intervals: cert
                .intervals
                .iter()
                .map(|r| BoundIntervalDoc {
                    n: r.n,
                    from: rat_string(&r.from),
                    lower: check_doc(&r.lower),
                    upper: check_doc(&r.upper),
                    endpoints_ok: r.endpoints_ok,
                })
                .collect(),
        }
    }
}

/// Result of an independent re-verification.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyOutcome {
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub problem: Option<String>,
}

impl VerifyOutcome {
    fn fail(problem: String) -> Self {
        VerifyOutcome { ok: false, problem: Some(problem) }
    }
    fn pass() -> Self {
        VerifyOutcome { ok: true, problem: None }
    }
}

fn kind_of(kind: &str, t: Option<&String>) -> Result<PatchworkKind> {
    match kind {
        "motzkin" => Ok(PatchworkKind::Motzkin),
        "rank1" => Ok(PatchworkKind::Rank1),
        "legendre" => {
            let t = t.ok_or_else(|| Error::InvalidInput("legendre document without t".into()))?;
            Ok(PatchworkKind::Legendre(parse_rat(t)?))
        }
        other => Err(Error::InvalidInput(format!("unknown patchwork kind `{other}`"))),
    }
}

fn parse_numerator(coeffs: &[String]) -> Result<Vec<BigInt>> {
    coeffs
        .iter()
        .map(|s| {
            s.parse::<BigInt>()
                .map_err(|_| Error::InvalidInput(format!("bad coefficient `{s}`")))
        })
        .collect()
}

fn parse_method(doc: &CheckDoc) -> Result<Method> {
    match doc.method.as_str() {
        "shift" => {
            let k = doc.k.ok_or_else(|| Error::InvalidInput("shift method without k".into()))?;
            Ok(Method::Shift { k })
        }
        "sturm" => Ok(Method::Sturm { distinct_roots: doc.distinct_roots.unwrap_or(0) }),
        other => Err(Error::InvalidInput(format!("unknown method `{other}`"))),
    }
}

/// Re-validate a monotonicity certificate from its serialized form.
pub fn verify_monotonicity_document(doc: &MonotonicityDocument) -> Result<VerifyOutcome> {
    if doc.document != MONOTONICITY_DOCUMENT {
        return Err(Error::InvalidInput(format!("not a monotonicity certificate: {}", doc.document)));
    }
    let kind = kind_of(&doc.kind, doc.t.as_ref())?;
    let patchwork = build_patchwork(kind, doc.built_to)?;
    if patchwork.pieces.len() != doc.intervals.len() {
        return Ok(VerifyOutcome::fail(format!(
            "document covers {} intervals, patchwork has {}",
            doc.intervals.len(),
            patchwork.pieces.len()
        )));
    }
    let mut all = true;
    for (piece, record) in patchwork.pieces.iter().zip(&doc.intervals) {
        if piece.start != record.n {
            return Ok(VerifyOutcome::fail(format!(
                "interval mismatch: piece at {} vs record at {}",
                piece.start, record.n
            )));
        }
        let stored = parse_numerator(&record.check.numerator)?;
        let recomputed = piece.func.derivative_numerator().primitive_bigint_coeffs();
        if stored != recomputed {
            return Ok(VerifyOutcome::fail(format!(
                "numerator mismatch on interval ({}, {})",
                record.n,
                record.n + 1
            )));
        }
        let method = parse_method(&record.check)?;
        let rerun = recheck(&stored, &method, &rat(record.n), &rat(record.n + 1), doc.strict);
        if rerun != record.check.verdict {
            return Ok(VerifyOutcome::fail(format!(
                "verdict mismatch on interval ({}, {}): stored {}, re-checked {}",
                record.n,
                record.n + 1,
                record.check.verdict,
                rerun
            )));
        }
        all &= rerun;
    }
    if all != doc.verdict {
        return Ok(VerifyOutcome::fail(format!(
            "overall verdict mismatch: stored {}, conjunction {}",
            doc.verdict, all
        )));
    }
    Ok(VerifyOutcome::pass())
}

/// Re-validate a bound certificate from its serialized form.
pub fn verify_bounds_document(doc: &BoundDocument) -> Result<VerifyOutcome> {
    if doc.document != BOUND_DOCUMENT {
        return Err(Error::InvalidInput(format!("not a bound certificate: {}", doc.document)));
    }
    let kind = kind_of(&doc.kind, doc.t.as_ref())?;
    let patchwork = build_patchwork(kind, doc.built_to)?;
    let lo = parse_rat(&doc.lo)?;
    let hi = parse_rat(&doc.hi)?;
    let from = parse_rat(&doc.from)?;
    let relevant: Vec<_> =
        patchwork.pieces.iter().filter(|piece| rat(piece.start + 1) > from).collect();
    if relevant.len() != doc.intervals.len() {
        return Ok(VerifyOutcome::fail(format!(
            "document covers {} intervals, patchwork has {}",
            doc.intervals.len(),
            relevant.len()
        )));
    }
    let mut all = true;
    for (piece, record) in relevant.iter().zip(&doc.intervals) {
        if piece.start != record.n {
            return Ok(VerifyOutcome::fail(format!(
                "interval mismatch: piece at {} vs record at {}",
                piece.start, record.n
            )));
        }
        let left = rat(record.n).max(from.clone());
        if parse_rat(&record.from)? != left {
            return Ok(VerifyOutcome::fail(format!("clip mismatch on interval at {}", record.n)));
        }
        let right = rat(record.n + 1);
        let u = piece.func.num();
        let v = piece.func.den();
        let expectations = [
            (&record.lower, &(u - &v.scale(&lo))),
            (&record.upper, &(&v.scale(&hi) - u)),
        ];
        for (stored_doc, poly) in expectations {
            let stored = parse_numerator(&stored_doc.numerator)?;
            if stored != poly.primitive_bigint_coeffs() {
                return Ok(VerifyOutcome::fail(format!(
                    "numerator mismatch on interval ({}, {})",
                    record.n,
                    record.n + 1
                )));
            }
            let method = parse_method(stored_doc)?;
            let rerun = recheck(&stored, &method, &left, &right, false);
            if rerun != stored_doc.verdict {
                return Ok(VerifyOutcome::fail(format!(
                    "verdict mismatch on interval ({}, {})",
                    record.n,
                    record.n + 1
                )));
            }
            all &= rerun;
        }
        let endpoints = [&left, &right].iter().all(|x| {
            use num_traits::Signed;
            !(u - &v.scale(&lo)).eval(x).is_negative() && !(&v.scale(&hi) - u).eval(x).is_negative()
        });
        if endpoints != record.endpoints_ok {
            return Ok(VerifyOutcome::fail(format!("endpoint mismatch at {}", record.n)));
        }
        all &= endpoints;
    }
    if all != doc.verdict {
        return Ok(VerifyOutcome::fail(format!(
            "overall verdict mismatch: stored {}, conjunction {}",
            doc.verdict, all
        )));
    }
    Ok(VerifyOutcome::pass())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::bounds::certify_bounds;
    use crate::certify::monotonicity::{certify_increasing, CertifyOptions};
    use crate::exact::ratio;

    #[test]
    fn monotonicity_roundtrip_verifies() {
        let p = build_patchwork(PatchworkKind::Motzkin, 10).unwrap();
        let cert = certify_increasing(&p, &CertifyOptions::default());
        let doc = MonotonicityDocument::from(&cert);
        let json = serde_json::to_string_pretty(&doc).unwrap();
        let parsed: MonotonicityDocument = serde_json::from_str(&json).unwrap();
        let outcome = verify_monotonicity_document(&parsed).unwrap();
        assert!(outcome.ok, "{:?}", outcome.problem);
    }

    #[test]
    fn tampered_coefficient_is_caught() {
        let p = build_patchwork(PatchworkKind::Motzkin, 8).unwrap();
        let cert = certify_increasing(&p, &CertifyOptions::default());
        let mut doc = MonotonicityDocument::from(&cert);
        // find an interval with a nonempty numerator and bump one coefficient
        let record = doc
            .intervals
            .iter_mut()
            .find(|r| !r.check.numerator.is_empty())
            .expect("nonconstant piece");
        let bumped: BigInt = record.check.numerator[0].parse::<BigInt>().unwrap() + 1;
        record.check.numerator[0] = bumped.to_string();
        let outcome = verify_monotonicity_document(&doc).unwrap();
        assert!(!outcome.ok);
        assert!(outcome.problem.unwrap().contains("numerator mismatch"));
    }

    #[test]
    fn tampered_verdict_is_caught() {
        let p = build_patchwork(PatchworkKind::Legendre(rat(2)), 8).unwrap();
        let cert = certify_increasing(&p, &CertifyOptions::default());
        let mut doc = MonotonicityDocument::from(&cert);
        doc.intervals.last_mut().unwrap().check.verdict = false;
        let outcome = verify_monotonicity_document(&doc).unwrap();
        assert!(!outcome.ok);
    }

    #[test]
    fn bounds_roundtrip_and_tamper() {
        let p = build_patchwork(PatchworkKind::Motzkin, 9).unwrap();
        let cert = certify_bounds(&p, &rat(2), &ratio(7, 2), &rat(2), 8, true);
        let doc = BoundDocument::from(&cert);
        let json = serde_json::to_string(&doc).unwrap();
        let mut parsed: BoundDocument = serde_json::from_str(&json).unwrap();
        assert!(verify_bounds_document(&parsed).unwrap().ok);
        parsed.intervals[2].lower.numerator[0] = "999999".into();
        assert!(!verify_bounds_document(&parsed).unwrap().ok);
    }
}
