//! Piecewise-rational continuous extensions of ratio recursions.
//!
//! Each patchwork starts as a constant on a base interval and continues by
//! substituting the already-built pieces, shifted, into the step rule of the
//! ratio recursion. Every piece is an exact rational function in canonical
//! form; construction verifies that no piece has a pole (in fact that its
//! denominator stays strictly positive) on its closed interval.
//!
//! The ratio value x_n is always the right endpoint value of the piece on
//! [n-1, n]. For the Motzkin and Legendre systems the left endpoint of the
//! next piece agrees exactly, so the patchwork is a continuous function. The
//! rank-1 system is different: its step rule looks three intervals back, and
//! at the first non-base interval it reads the base constant 2 at x = 2
//! where the underlying ratio sequence has x_2 = 1. The literal construction
//! therefore carries small junction mismatches from x = 5 on (first one:
//! left value 2 vs right value 113/56). Those gaps are recorded, not
//! papered over; integer-point ratio values remain exact throughout.

use num_traits::Signed;

use crate::exact::poly::Poly;
use crate::exact::ratfunc::RatFunc;
use crate::exact::{rat, rat_string, roots, Rat};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PatchworkKind {
    /// x_n = (2n+1)/(n+2) + 3(n-1)/(n+2) / x_{n-1}; base value 2 on [2, 3].
    Motzkin,
    /// The rank-1 secondary structure ratio rule (three back-references);
    /// base value 2 on [2, 5].
    Rank1,
    /// Legendre ratio rule x_n = t(2n-1)/n - (n-1)/n / x_{n-1};
    /// base value t on [0, 1].
    Legendre(Rat),
}

impl PatchworkKind {
    pub fn name(&self) -> &'static str {
        match self {
            PatchworkKind::Motzkin => "motzkin",
            PatchworkKind::Rank1 => "rank1",
            PatchworkKind::Legendre(_) => "legendre",
        }
    }

    pub fn base_interval(&self) -> (i64, i64) {
        match self {
            PatchworkKind::Motzkin => (2, 3),
            PatchworkKind::Rank1 => (2, 5),
            PatchworkKind::Legendre(_) => (0, 1),
        }
    }

    pub fn base_value(&self) -> Rat {
        match self {
            PatchworkKind::Motzkin | PatchworkKind::Rank1 => rat(2),
            PatchworkKind::Legendre(t) => t.clone(),
        }
    }

    /// How many earlier unit intervals the step rule reads.
    pub fn arity(&self) -> usize {
        match self {
            PatchworkKind::Rank1 => 3,
            _ => 1,
        }
    }

    /// Whether the construction yields exact junction continuity. True for
    /// the one-back rules whose base is consistent with the step rule; the
    /// rank-1 base is not (see module docs), so its junctions carry gaps.
    pub fn continuity_guaranteed(&self) -> bool {
        !matches!(self, PatchworkKind::Rank1)
    }
}

/// One piece: the exact rational function on `[start, start + 1]`.
#[derive(Clone, Debug)]
pub struct Piece {
    pub start: i64,
    pub func: RatFunc,
}

#[derive(Clone, Debug)]
pub struct Patchwork {
    pub kind: PatchworkKind,
    pub pieces: Vec<Piece>,
}

/// A junction where adjacent pieces disagree, with both exact values.
#[derive(Clone, Debug)]
pub struct JunctionGap {
    pub n: i64,
    pub left: Rat,
    pub right: Rat,
}

impl Patchwork {
    pub fn first_start(&self) -> i64 {
        self.pieces.first().expect("non-empty").start
    }

    pub fn built_to(&self) -> i64 {
        self.pieces.last().expect("non-empty").start + 1
    }

    pub fn piece_at(&self, start: i64) -> Option<&Piece> {
        let first = self.first_start();
        usize::try_from(start - first).ok().and_then(|i| self.pieces.get(i))
    }

    /// The function value at integer `n`, read from the piece ending at `n`
    /// (its right endpoint). This is the value that equals the ratio x_n.
    pub fn value_at_integer(&self, n: i64) -> Option<Rat> {
        if n == self.first_start() {
            return self.pieces.first().and_then(|p| p.func.eval(&rat(n)));
        }
        self.piece_at(n - 1).and_then(|p| p.func.eval(&rat(n)))
    }

    /// All junctions where the left and right pieces disagree, exactly.
    pub fn junction_gaps(&self) -> Vec<JunctionGap> {
        let mut gaps = Vec::new();
        for w in self.pieces.windows(2) {
            let x = rat(w[1].start);
            let left = w[0].func.eval(&x).expect("no pole on closed interval");
            let right = w[1].func.eval(&x).expect("no pole on closed interval");
            if left != right {
                gaps.push(JunctionGap { n: w[1].start, left, right });
            }
        }
        gaps
    }
}

/// Build the patchwork for `kind` with pieces covering `[base_lo, upto]`.
///
/// Construction substitutes the earlier pieces (shifted) into the step rule,
/// canonicalizes, and verifies on every piece that the denominator is
/// strictly positive on the closed interval. For kinds with guaranteed
/// continuity a junction mismatch is an error.
pub fn build_patchwork(kind: PatchworkKind, upto: i64) -> Result<Patchwork> {
    let (base_lo, base_hi) = kind.base_interval();
    if upto < base_hi {
        return Err(Error::InvalidInput(format!(
            "patchwork must extend to at least {base_hi}, got {upto}"
        )));
    }
    let base = RatFunc::constant(kind.base_value());
    let mut pieces: Vec<Piece> =
        (base_lo..base_hi).map(|start| Piece { start, func: base.clone() }).collect();

    for start in base_hi..upto {
        let back = |i: usize| -> RatFunc {
            let idx = pieces.len() - i;
            pieces[idx].func.substitute_shift(-(i as i64))
        };
        let func = match &kind {
            PatchworkKind::Motzkin => step_motzkin(&back(1)),
            PatchworkKind::Legendre(t) => step_legendre(t, &back(1)),
            PatchworkKind::Rank1 => step_rank1(&back(1), &back(2), &back(3)),
        };
        ensure_positive_denominator(&func, start)?;
        pieces.push(Piece { start, func });
    }

    let patchwork = Patchwork { kind, pieces };
    if patchwork.kind.continuity_guaranteed() {
        if let Some(gap) = patchwork.junction_gaps().first() {
            return Err(Error::ContinuityViolation {
                n: gap.n,
                left: rat_string(&gap.left),
                right: rat_string(&gap.right),
            });
        }
    }
    Ok(patchwork)
}

/// f(x) = (2x+1)/(x+2) + 3(x-1)/(x+2) * 1/g(x), assembled as one fraction:
/// ((2x+1) u + 3(x-1) v) / ((x+2) u) for g = u/v.
fn step_motzkin(g: &RatFunc) -> RatFunc {
    let u = g.num();
    let v = g.den();
    let num = &(&Poly::from_ints(&[1, 2]) * u) + &(&Poly::from_ints(&[-3, 3]) * v);
    let den = &Poly::from_ints(&[2, 1]) * u;
    RatFunc::new(num, den)
}

/// f(x) = t(2x-1)/x - (x-1)/x * 1/g(x) = (t(2x-1) u - (x-1) v) / (x u).
fn step_legendre(t: &Rat, g: &RatFunc) -> RatFunc {
    let u = g.num();
    let v = g.den();
    let num = &(&Poly::from_ints(&[-1, 2]).scale(t) * u) - &(&Poly::from_ints(&[-1, 1]) * v);
    let den = &Poly::x() * u;
    RatFunc::new(num, den)
}

/// f(x) = [ (2x+1) + (x-1)/g1 + (2x-5)/(g1 g2) - (x-4)/(g1 g2 g3) ] / (x+2)
/// over the common denominator (x+2) u1 u2 u3.
///
/// The numerators u2 and u3 of the two deeper references divide the raw
/// numerator as well as the raw denominator (each v_i contains the next
/// u_{i+1} as a factor by construction), so the structural quotient brings
/// the piece straight down to its canonical degree without a giant gcd. The
/// general gcd in `RatFunc::new` still runs afterwards on the small pair,
/// and the slow path covers any case where the structural division fails.
fn step_rank1(g1: &RatFunc, g2: &RatFunc, g3: &RatFunc) -> RatFunc {
    let (u1, v1) = (g1.num(), g1.den());
    let (u2, v2) = (g2.num(), g2.den());
    let (u3, v3) = (g3.num(), g3.den());
    let u23 = u2 * u3;
    let v12 = v1 * v2;
    let term1 = &Poly::from_ints(&[1, 2]) * &(u1 * &u23);
    let term2 = &Poly::from_ints(&[-1, 1]) * &(v1 * &u23);
    let term3 = &Poly::from_ints(&[-5, 2]) * &(&v12 * u3);
    let term4 = &Poly::from_ints(&[-4, 1]) * &(&v12 * v3);
    let num = &(&(&term1 + &term2) + &term3) - &term4;
    let den = &Poly::from_ints(&[2, 1]) * &(u1 * &u23);
    match (num.exact_div(&u23), den.exact_div(&u23)) {
        (Some(n), Some(d)) => RatFunc::new(n, d),
        _ => RatFunc::new(num, den),
    }
}

/// The canonical denominator must be strictly positive on [start, start+1];
/// this is the precondition for all numerator-sign reasoning. Cheap path:
/// all coefficients of den(x + start) nonnegative with positive constant
/// term proves positivity on [start, oo). Fallback: exact Sturm check.
fn ensure_positive_denominator(func: &RatFunc, start: i64) -> Result<()> {
    let den = func.den();
    let shifted = den.shift(start);
    let coeffs = shifted.coeffs();
    if !coeffs.is_empty()
        && coeffs.iter().all(|c| !c.is_negative())
        && coeffs[0].is_positive()
    {
        return Ok(());
    }
    let (lo, hi) = (rat(start), rat(start + 1));
    let ok = den.eval(&lo).is_positive()
        && den.eval(&hi).is_positive()
        && roots::is_strictly_positive_on(den, &lo, &hi);
    if ok {
        Ok(())
    } else {
        Err(Error::PoleInInterval { n: start })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;
    use crate::sequences;

    fn rf(num: &[i64], den: &[i64]) -> RatFunc {
        RatFunc::new(Poly::from_ints(num), Poly::from_ints(den))
    }

    #[test]
    fn motzkin_pieces_match_known_forms() {
        let p = build_patchwork(PatchworkKind::Motzkin, 6).unwrap();
        // [2,3] is the constant 2
        assert_eq!(p.piece_at(2).unwrap().func, RatFunc::constant(rat(2)));
        // [3,4] is (7x-1)/(2(x+2))
        assert_eq!(p.piece_at(3).unwrap().func, rf(&[-1, 7], &[4, 2]));
        // [4,5] is (20x^2-9x-14)/(7x^2+6x-16)
        assert_eq!(p.piece_at(4).unwrap().func, rf(&[-14, -9, 20], &[-16, 6, 7]));
    }

    #[test]
    fn motzkin_is_continuous_and_anchored() {
        let p = build_patchwork(PatchworkKind::Motzkin, 12).unwrap();
        assert!(p.junction_gaps().is_empty());
        let m = sequences::motzkin_short(12).unwrap();
        let x = sequences::ratio_sequence(&m).unwrap();
        for n in 2..=12 {
            assert_eq!(&p.value_at_integer(n).unwrap(), x.get(n).unwrap(), "at n = {n}");
        }
    }

    #[test]
    fn legendre_constant_at_t_one() {
        let p = build_patchwork(PatchworkKind::Legendre(rat(1)), 8).unwrap();
        for piece in &p.pieces {
            assert_eq!(piece.func, RatFunc::constant(rat(1)));
        }
        assert!(p.junction_gaps().is_empty());
    }

    #[test]
    fn legendre_pieces_track_ratios() {
        let t = rat(3);
        let p = build_patchwork(PatchworkKind::Legendre(t.clone()), 10).unwrap();
        assert!(p.junction_gaps().is_empty());
        let values = sequences::legendre_values(&t, 10);
        let x = sequences::ratio_sequence_rational(&values).unwrap();
        for n in 1..=10 {
            assert_eq!(&p.value_at_integer(n).unwrap(), x.get(n).unwrap(), "at n = {n}");
        }
    }

    #[test]
    fn rank1_right_endpoints_give_ratios() {
        let p = build_patchwork(PatchworkKind::Rank1, 12).unwrap();
        let s = sequences::sec_struct_rank1(12).unwrap();
        let x = sequences::ratio_sequence(&s).unwrap();
        for n in 3..=12 {
            assert_eq!(&p.value_at_integer(n).unwrap(), x.get(n).unwrap(), "at n = {n}");
        }
        // first piece past the base: (23x-2)/(8(x+2))
        assert_eq!(p.piece_at(5).unwrap().func, rf(&[-2, 23], &[16, 8]));
    }

    #[test]
    fn rank1_junction_gaps_are_recorded_and_small() {
        let p = build_patchwork(PatchworkKind::Rank1, 12).unwrap();
        let gaps = p.junction_gaps();
        assert!(!gaps.is_empty());
        // first gap at x = 5: base value 2 against 113/56
        assert_eq!(gaps[0].n, 5);
        assert_eq!(gaps[0].left, rat(2));
        assert_eq!(gaps[0].right, ratio(113, 56));
        // all gaps are tiny and they shrink
        for gap in &gaps[1..] {
            assert!((&gap.left - &gap.right).abs() < ratio(1, 100), "gap at {}", gap.n);
        }
    }

    #[test]
    fn degrees_grow_linearly() {
        let p = build_patchwork(PatchworkKind::Rank1, 20).unwrap();
        for piece in &p.pieces {
            if piece.start >= 5 {
                let expect = (piece.start - 4) as usize;
                assert_eq!(piece.func.num().degree(), Some(expect), "num at {}", piece.start);
                assert_eq!(piece.func.den().degree(), Some(expect), "den at {}", piece.start);
            }
        }
    }

    #[test]
    fn upto_must_cover_base() {
        assert!(build_patchwork(PatchworkKind::Rank1, 4).is_err());
        assert!(build_patchwork(PatchworkKind::Rank1, 5).is_ok());
    }
}
