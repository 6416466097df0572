//! Sequence engines: every family computed exactly from its recursion,
//! closed form, or identity, with provenance recorded on the table.
//!
//! Recursions that demand an exact division (the holonomic short forms)
//! check exactness at every step and fail loudly otherwise — a non-exact
//! division always means an implementation bug, never bad data. Derived
//! recursions that the underlying theory does not state (general-rank
//! secondary structures, Schröder) are validated against the enumeration
//! oracles at construction time.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exact::{rat, Rat};
use crate::oracles;
use crate::{Error, Result};

/// How a table's values were produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    ShortRecursion,
    LongRecursion,
    ClosedForm,
    BinomialIdentity,
    Oracle,
    DerivedRecursion,
}

impl Provenance {
    pub fn as_str(&self) -> &'static str {
        match self {
            Provenance::ShortRecursion => "short-recursion",
            Provenance::LongRecursion => "long-recursion",
            Provenance::ClosedForm => "closed-form",
            Provenance::BinomialIdentity => "binomial-identity",
            Provenance::Oracle => "oracle",
            Provenance::DerivedRecursion => "derived-recursion",
        }
    }
}

/// A named integer sequence with explicit start index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceTable {
    pub name: String,
    pub start_index: i64,
    pub values: Vec<BigInt>,
    pub provenance: Provenance,
}

impl SequenceTable {
    pub fn new(name: &str, start_index: i64, values: Vec<BigInt>, provenance: Provenance) -> Self {
        assert!(!values.is_empty(), "sequence table must be non-empty");
        SequenceTable { name: name.into(), start_index, values, provenance }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn last_index(&self) -> i64 {
        self.start_index + self.values.len() as i64 - 1
    }

    /// Value at absolute index `n`.
    pub fn get(&self, n: i64) -> Option<&BigInt> {
        usize::try_from(n - self.start_index).ok().and_then(|i| self.values.get(i))
    }

    pub fn iter_indexed(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.values.iter().enumerate().map(|(i, v)| (self.start_index + i as i64, v))
    }

    pub fn to_rationals(&self) -> Vec<Rat> {
        self.values.iter().cloned().map(Rat::from_integer).collect()
    }
}

/// A named rational sequence (Legendre values at rational argument).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSequence {
    pub name: String,
    pub start_index: i64,
    pub values: Vec<Rat>,
}

/// Consecutive-term ratios x_n = a_n / a_{n-1} of a positive sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioSequence {
    pub base_name: String,
    pub start_index: i64,
    pub values: Vec<Rat>,
}

impl RatioSequence {
    /// Ratio at absolute index `n`.
    pub fn get(&self, n: i64) -> Option<&Rat> {
        usize::try_from(n - self.start_index).ok().and_then(|i| self.values.get(i))
    }

    pub fn last_index(&self) -> i64 {
        self.start_index + self.values.len() as i64 - 1
    }

    pub fn iter_indexed(&self) -> impl Iterator<Item = (i64, &Rat)> {
        self.values.iter().enumerate().map(|(i, v)| (self.start_index + i as i64, v))
    }
}

fn exact_div(num: BigInt, den: &BigInt, name: &str, index: i64) -> Result<BigInt> {
    let (q, r) = num_integer::Integer::div_rem(&num, den);
    if !r.is_zero() {
        return Err(Error::NonExactDivision { name: name.into(), index });
    }
    Ok(q)
}

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

/// Row `n` of Pascal's triangle, `k = 0..=n`.
pub fn binomial_row(n: usize) -> SequenceTable {
    let mut row = vec![BigInt::one()];
    for i in 0..n {
        // C(n, k+1) = C(n, k) * (n - k) / (k + 1), always exact
        let next = &row[i] * big((n - i) as i64) / big(i as i64 + 1);
        row.push(next);
    }
    SequenceTable::new(&format!("binomial-row-{n}"), 0, row, Provenance::ClosedForm)
}

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut value = BigInt::one();
    for i in 0..k.min(n - k) {
        value = value * big((n - i) as i64) / big(i as i64 + 1);
    }
    value
}

/// Catalan numbers C_0..C_{n_max} via the closed form C_n = C(2n, n)/(n+1).
pub fn catalan(n_max: usize) -> Result<SequenceTable> {
    let mut values = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let c = exact_div(binomial(2 * n, n), &big(n as i64 + 1), "catalan", n as i64)?;
        values.push(c);
    }
    Ok(SequenceTable::new("catalan", 0, values, Provenance::ClosedForm))
}

/// Narayana number N(n, k) = C(n, k) C(n, k-1) / n, with N(0, 0) = 1.
/// Zero outside the triangle 1 <= k <= n.
pub fn narayana(n: usize, k: usize) -> Result<BigInt> {
    if n == 0 && k == 0 {
        return Ok(BigInt::one());
    }
    if k == 0 || k > n {
        return Ok(BigInt::zero());
    }
    exact_div(binomial(n, k) * binomial(n, k - 1), &big(n as i64), "narayana", n as i64)
}

/// Row N(n, 1..=n) of the Narayana triangle, for n >= 1.
pub fn narayana_row(n: usize) -> Result<SequenceTable> {
    assert!(n >= 1, "narayana rows start at n = 1");
    let values = (1..=n).map(|k| narayana(n, k)).collect::<Result<Vec<_>>>()?;
    Ok(SequenceTable::new(&format!("narayana-row-{n}"), 1, values, Provenance::ClosedForm))
}

/// Unsigned Stirling numbers of the first kind c(n, k) for n = 0..=n_max,
/// via c(n, k) = c(n-1, k-1) + (n-1) c(n-1, k). Row n holds k = 0..=n.
pub fn stirling1_triangle(n_max: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let mut row = vec![BigInt::zero(); n + 1];
        for k in 1..=n {
            let mut v = prev.get(k).cloned().unwrap_or_else(BigInt::zero) * big(n as i64 - 1);
            v += &prev[k - 1];
            row[k] = v;
        }
        rows.push(row);
    }
    rows
}

/// Stirling numbers of the second kind S(n, k) for n = 0..=n_max, via
/// S(n, k) = S(n-1, k-1) + k S(n-1, k). Row n holds k = 0..=n.
pub fn stirling2_triangle(n_max: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let mut row = vec![BigInt::zero(); n + 1];
        for k in 1..=n {
            let mut v = prev.get(k).cloned().unwrap_or_else(BigInt::zero) * big(k as i64);
            v += &prev[k - 1];
            row[k] = v;
        }
        rows.push(row);
    }
    rows
}

/// Coefficients of P_n(x) = sum_k S(n, k) x^k as a polynomial.
pub fn bell_poly_coeffs(n: usize) -> crate::exact::Poly {
    let row = stirling2_triangle(n).pop().expect("row n");
    crate::exact::Poly::from_bigints(row)
}

/// Motzkin numbers M_0..M_{n_max} from the three-term recursion
/// (n+2) M_n = (2n+1) M_{n-1} + 3(n-1) M_{n-2}, M_0 = M_1 = 1.
pub fn motzkin_short(n_max: usize) -> Result<SequenceTable> {
    let mut values = vec![BigInt::one()];
    if n_max >= 1 {
        values.push(BigInt::one());
    }
    for n in 2..=n_max as i64 {
        let rhs = big(2 * n + 1) * &values[(n - 1) as usize] + big(3 * (n - 1)) * &values[(n - 2) as usize];
        values.push(exact_div(rhs, &big(n + 2), "motzkin-short", n)?);
    }
    Ok(SequenceTable::new("motzkin", 0, values, Provenance::ShortRecursion))
}

/// Motzkin numbers from the convolution M_{n+1} = M_n + sum M_k M_{n-1-k}.
pub fn motzkin_long(n_max: usize) -> SequenceTable {
    let mut values = vec![BigInt::one()];
    for n in 1..=n_max {
        let mut next = values[n - 1].clone();
        for k in 0..n - 1 {
            next += &values[k] * &values[n - 2 - k];
        }
        values.push(next);
    }
    SequenceTable::new("motzkin", 0, values, Provenance::LongRecursion)
}

/// Motzkin numbers via the binomial identity M_n = sum_k C(n, 2k) C_k.
pub fn motzkin_via_catalan(n_max: usize) -> Result<SequenceTable> {
    let cats = catalan(n_max / 2 + 1)?;
    let mut values = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut m = BigInt::zero();
        let mut k = 0;
        while 2 * k <= n {
            m += binomial(n, 2 * k) * &cats.values[k];
            k += 1;
        }
        values.push(m);
    }
    Ok(SequenceTable::new("motzkin", 0, values, Provenance::BinomialIdentity))
}

/// Catalan numbers via the inverse identity C_{n+1} = sum_k C(n, k) M_k.
pub fn catalan_via_motzkin(n_max: usize) -> Result<SequenceTable> {
    let motzkin = motzkin_short(n_max.saturating_sub(1))?;
    let mut values = vec![BigInt::one()];
    for n in 1..=n_max {
        let mut c = BigInt::zero();
        for k in 0..n {
            c += binomial(n - 1, k) * &motzkin.values[k];
        }
        values.push(c);
    }
    Ok(SequenceTable::new("catalan", 0, values, Provenance::BinomialIdentity))
}

/// Rank-1 secondary structure numbers from the five-term recursion
/// (n+2) S(n) = (2n+1) S(n-1) + (n-1) S(n-2) + (2n-5) S(n-3) - (n-4) S(n-4),
/// with S(0) = S(1) = S(2) = 1, S(3) = 2.
pub fn sec_struct_rank1(n_max: usize) -> Result<SequenceTable> {
    let seed = [1i64, 1, 1, 2];
    let mut values: Vec<BigInt> = seed.iter().take(n_max + 1).map(|&v| big(v)).collect();
    for n in 4..=n_max as i64 {
        let i = n as usize;
        let rhs = big(2 * n + 1) * &values[i - 1]
            + big(n - 1) * &values[i - 2]
            + big(2 * n - 5) * &values[i - 3]
            - big(n - 4) * &values[i - 4];
        values.push(exact_div(rhs, &big(n + 2), "sec-struct-rank1", n)?);
    }
    Ok(SequenceTable::new("sec-struct-rank1", 0, values, Provenance::ShortRecursion))
}

/// Rank-l secondary structure numbers via the last-vertex decomposition
/// S(n+1) = S(n) + sum_{j=1}^{n-l} S(j-1) S(n-j).
///
/// This convolution is derived, not quoted, so it is validated against the
/// exhaustive arc-set oracle on a prefix before the table is returned.
pub fn sec_struct_general(l: usize, n_max: usize) -> Result<SequenceTable> {
    let mut values = vec![BigInt::one()];
    for n in 0..n_max {
        let mut next = values[n].clone();
        let top = n as i64 - l as i64;
        for j in 1..=top.max(0) as usize {
            next += &values[j - 1] * &values[n - j];
        }
        values.push(next);
    }
    let table = SequenceTable::new(
        &format!("sec-struct-rank{l}"),
        0,
        values,
        Provenance::DerivedRecursion,
    );
    validate_against_oracle(&table, 12, |n| oracles::enum_secondary(l as i64, n))?;
    Ok(table)
}

/// Legendre polynomial values P_0(t)..P_{n_max}(t) at rational t, from the
/// Bonnet recursion P_n = ((2n-1)/n) t P_{n-1} - ((n-1)/n) P_{n-2}.
pub fn legendre_values(t: &Rat, n_max: usize) -> RationalSequence {
    let mut values = vec![rat(1)];
    if n_max >= 1 {
        values.push(t.clone());
    }
    for n in 2..=n_max as i64 {
        let i = n as usize;
        let a = Rat::new(big(2 * n - 1), big(n)) * t * &values[i - 1];
        let b = Rat::new(big(n - 1), big(n)) * &values[i - 2];
        values.push(a - b);
    }
    RationalSequence { name: format!("legendre({})", crate::exact::rat_string(t)), start_index: 0, values }
}

/// Central Delannoy numbers D(n) = P_n(3), checked to be integers.
pub fn delannoy(n_max: usize) -> Result<SequenceTable> {
    let legendre = legendre_values(&rat(3), n_max);
    let mut values = Vec::with_capacity(n_max + 1);
    for (i, v) in legendre.values.iter().enumerate() {
        if !v.denom().is_one() {
            return Err(Error::NonIntegerValue { name: "delannoy".into(), index: i as i64 });
        }
        values.push(v.numer().clone());
    }
    Ok(SequenceTable::new("delannoy", 0, values, Provenance::ClosedForm))
}

/// Big Schröder numbers r_0..r_{n_max} from the derived three-term recursion
/// (n+1) r_n = 3(2n-1) r_{n-1} - (n-2) r_{n-2}, r_0 = 1, r_1 = 2,
/// validated against the path-enumeration oracle on a prefix.
pub fn schroeder(n_max: usize) -> Result<SequenceTable> {
    let seed = [1i64, 2];
    let mut values: Vec<BigInt> = seed.iter().take(n_max + 1).map(|&v| big(v)).collect();
    for n in 2..=n_max as i64 {
        let i = n as usize;
        let rhs = big(3 * (2 * n - 1)) * &values[i - 1] - big(n - 2) * &values[i - 2];
        values.push(exact_div(rhs, &big(n + 1), "schroeder", n)?);
    }
    let table = SequenceTable::new("schroeder", 0, values, Provenance::DerivedRecursion);
    validate_against_oracle(&table, 10, oracles::enum_schroeder)?;
    Ok(table)
}

fn validate_against_oracle(
    table: &SequenceTable,
    prefix: usize,
    oracle: impl Fn(usize) -> Result<u64>,
) -> Result<()> {
    for n in 0..=prefix.min(table.values.len() - 1) {
        let expected = oracle(n)?;
        if table.values[n] != BigInt::from(expected) {
            return Err(Error::OracleMismatch {
                family: table.name.clone(),
                n,
                got: table.values[n].to_string(),
                expected: expected.to_string(),
            });
        }
    }
    Ok(())
}

/// Consecutive-term ratios of a positive integer sequence.
pub fn ratio_sequence(table: &SequenceTable) -> Result<RatioSequence> {
    ratios(&table.name, table.start_index, &table.to_rationals())
}

/// Consecutive-term ratios of a positive rational sequence.
pub fn ratio_sequence_rational(seq: &RationalSequence) -> Result<RatioSequence> {
    ratios(&seq.name, seq.start_index, &seq.values)
}

fn ratios(name: &str, start_index: i64, values: &[Rat]) -> Result<RatioSequence> {
    for (i, v) in values.iter().enumerate() {
        if !v.is_positive() {
            return Err(Error::NonPositiveValue { name: name.into(), index: start_index + i as i64 });
        }
    }
    let ratios = values.windows(2).map(|w| &w[1] / &w[0]).collect();
    Ok(RatioSequence { base_name: name.into(), start_index: start_index + 1, values: ratios })
}
