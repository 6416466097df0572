//! seqcert: sequence tables, enumeration oracles, log-behavior checks,
//! monotonicity/bound certificates, growth-constant enclosures, and reports,
//! all over exact arithmetic.
//!
//! Exit codes: 0 success / property holds; 1 property violated or
//! certificate failed; 2 usage error; 3 internal consistency failure
//! (oracle mismatch, non-exact division, pole or continuity violation).

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use seqcert_core::certify::{
    self, alpha_root, build_patchwork, certify_bounds, certify_increasing, check_log_behavior,
    check_log_behavior_rationals, interlace_check, series_identity_check, CertifyOptions,
    GeneratingFunction, InterlaceBound, LogBehavior, PatchworkKind,
};
use seqcert_core::exact::{decimal_string, parse_rat, rat, rat_string, QuadraticSurd, Rat};
use seqcert_core::oracles::{self, OracleConfig};
use seqcert_core::sequences::{self, RationalSequence, SequenceTable};
use seqcert_core::Error as CoreError;

#[derive(Parser)]
#[command(name = "seqcert", version, about = "Exact combinatorial sequence computation and certification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a sequence table (CSV by default)
    Seq {
        name: SeqName,
        /// Largest index to compute (inclusive, starting from the family's first index)
        #[arg(long, default_value_t = 50)]
        n: usize,
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Run an enumeration oracle and compare it against the recursion engine
    Oracle {
        family: OracleFamily,
        /// Largest size to enumerate (defaults to the family budget)
        #[arg(long)]
        n: Option<usize>,
        /// Rank for the secondary-structure oracle (may be -1)
        #[arg(long, default_value_t = 1)]
        rank: i64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Classify the log-behavior of a sequence and compare with its expected property
    Check {
        name: SeqName,
        #[arg(long, default_value_t = 100)]
        n: usize,
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Build a patchwork and emit a monotonicity (or bound) certificate, or verify one
    Certify {
        kind: Option<CertifyKind>,
        /// Build pieces up to [to-1, to]
        #[arg(long, default_value_t = 60)]
        to: i64,
        /// Largest shift tried before the Sturm fallback
        #[arg(long, default_value_t = 8)]
        kmax: i64,
        /// Legendre argument t as an exact rational "p/q"
        #[arg(long)]
        t: Option<String>,
        /// Require strict positivity of the derivative
        #[arg(long)]
        strict: bool,
        /// Certify bounds "lo:hi" instead of monotonicity
        #[arg(long)]
        bounds: Option<String>,
        /// Left end of the bound certificate (rational; defaults to the base start)
        #[arg(long)]
        from: Option<String>,
        /// Re-verify a previously emitted certificate file
        #[arg(long, value_name = "FILE")]
        verify: Option<PathBuf>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Enclose the growth constant alpha_l (largest root of x^l (x-2)^2 = 1)
    Alpha {
        #[arg(long, default_value_t = 1)]
        rank: u32,
        /// Enclosure width as an exact rational
        #[arg(long, default_value = "1/1000000000000")]
        tol: String,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Diagnostic reports over exact data
    Report {
        #[command(subcommand)]
        kind: ReportKind,
    },
}

#[derive(Subcommand)]
enum ReportKind {
    /// Exact gap between a tail ratio and its limit
    Limit {
        #[arg(long, value_enum)]
        seq: LimitSeq,
        #[arg(long, default_value_t = 2000)]
        n: usize,
        #[arg(long, default_value = "1/100")]
        tol: String,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Motzkin growth against sqrt(3/(4 pi)) 3^(n+1) n^(-3/2)
    Asymptotic {
        #[arg(long, default_value_t = 2000)]
        n: i64,
        /// Also compute at a smaller index and require the deviation to shrink
        #[arg(long)]
        compare_n: Option<i64>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Sandwich the ratio sequence between consecutive terms of its comparison sequence
    Interlace {
        #[arg(long, value_enum)]
        seq: InterlaceSeq,
        #[arg(long, default_value_t = 1000)]
        n: usize,
        /// First index checked (defaults to 3 for motzkin, 6 for rank1)
        #[arg(long)]
        from: Option<i64>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Expand a closed-form generating function and compare with the recursion
    Series {
        #[arg(long, value_enum)]
        kind: SeriesKind,
        #[arg(long, default_value_t = 50)]
        order: usize,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Args)]
struct FamilyArgs {
    /// Rank for secondary-structure sequences
    #[arg(long)]
    rank: Option<usize>,
    /// Legendre argument t as an exact rational "p/q"
    #[arg(long)]
    t: Option<String>,
}

#[derive(Args)]
struct OutArgs {
    /// Write to a file instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum SeqName {
    Motzkin,
    MotzkinLong,
    MotzkinViaCatalan,
    Catalan,
    CatalanViaMotzkin,
    Secondary,
    Delannoy,
    Schroeder,
    Legendre,
    BinomialRow,
    NarayanaRow,
    Stirling1,
    Stirling2,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum OracleFamily {
    Dyck,
    Motzkin,
    Secondary,
    Delannoy,
    Schroeder,
    Cycles,
    Blocks,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
#[allow(clippy::enum_variant_names)] // the CLI surface is literally "<kind>-patchwork"
enum CertifyKind {
    MotzkinPatchwork,
    Rank1Patchwork,
    LegendrePatchwork,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum LimitSeq {
    Motzkin,
    Delannoy,
    Rank1,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum InterlaceSeq {
    Motzkin,
    Rank1,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum SeriesKind {
    MotzkinGf,
    DelannoyGf,
}

/// 0 = ok, 1 = property violated, 2 = usage, 3 = internal consistency.
enum Outcome {
    Ok,
    PropertyViolated,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::PropertyViolated) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn exit_code_for(err: &CliError) -> u8 {
    match err {
        CliError::Core(core) => match core {
            CoreError::InvalidInput(_) | CoreError::BudgetExceeded { .. } => 2,
            _ => 3,
        },
        CliError::Io(_) => 2,
    }
}

#[derive(Debug)]
enum CliError {
    Core(CoreError),
    Io(std::io::Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

type CliResult<T> = Result<T, CliError>;

fn run(cli: Cli) -> CliResult<Outcome> {
    match cli.command {
        Command::Seq { name, n, family, format, out } => cmd_seq(name, n, &family, format, &out),
        Command::Oracle { family, n, rank, format, out } => cmd_oracle(family, n, rank, format, &out),
        Command::Check { name, n, family, out } => cmd_check(name, n, &family, &out),
        Command::Certify { kind, to, kmax, t, strict, bounds, from, verify, out } => {
            cmd_certify(kind, to, kmax, t, strict, bounds, from, verify, &out)
        }
        Command::Alpha { rank, tol, out } => cmd_alpha(rank, &tol, &out),
        Command::Report { kind } => cmd_report(kind),
    }
}

fn emit(out: &OutArgs, content: &str) -> CliResult<()> {
    match &out.out {
        Some(path) => std::fs::write(path, content)?,
        None => print!("{content}"),
    }
    Ok(())
}

fn emit_json<T: Serialize>(out: &OutArgs, doc: &T) -> CliResult<()> {
    let body = serde_json::to_string_pretty(doc).expect("serializable");
    emit(out, &format!("{body}\n"))
}

/// Either an integer table or a rational one; both render exactly.
enum Table {
    Integers(SequenceTable),
    Rationals(RationalSequence),
}

impl Table {
    fn name(&self) -> &str {
        match self {
            Table::Integers(t) => &t.name,
            Table::Rationals(t) => &t.name,
        }
    }

    fn rows(&self) -> Vec<(i64, String)> {
        match self {
            Table::Integers(t) => t.iter_indexed().map(|(n, v)| (n, v.to_string())).collect(),
            Table::Rationals(t) => t
                .values
                .iter()
                .enumerate()
                .map(|(i, v)| (t.start_index + i as i64, rat_string(v)))
                .collect(),
        }
    }
}

fn build_table(name: SeqName, n: usize, family: &FamilyArgs) -> CliResult<Table> {
    let table = match name {
        SeqName::Motzkin => Table::Integers(sequences::motzkin_short(n)?),
        SeqName::MotzkinLong => Table::Integers(sequences::motzkin_long(n)),
        SeqName::MotzkinViaCatalan => Table::Integers(sequences::motzkin_via_catalan(n)?),
        SeqName::Catalan => Table::Integers(sequences::catalan(n)?),
        SeqName::CatalanViaMotzkin => Table::Integers(sequences::catalan_via_motzkin(n)?),
        SeqName::Secondary => {
            let rank = family.rank.unwrap_or(1);
            if rank == 1 {
                Table::Integers(sequences::sec_struct_rank1(n)?)
            } else {
                Table::Integers(sequences::sec_struct_general(rank, n)?)
            }
        }
        SeqName::Delannoy => Table::Integers(sequences::delannoy(n)?),
        SeqName::Schroeder => Table::Integers(sequences::schroeder(n)?),
        SeqName::Legendre => {
            let t = parse_required_t(family)?;
            Table::Rationals(sequences::legendre_values(&t, n))
        }
        SeqName::BinomialRow => Table::Integers(sequences::binomial_row(n)),
        SeqName::NarayanaRow => {
            if n == 0 {
                return Err(CoreError::InvalidInput("narayana rows start at n = 1".into()).into());
            }
            Table::Integers(sequences::narayana_row(n)?)
        }
        SeqName::Stirling1 => Table::Integers(stirling_row_table("stirling1-row", n, true)),
        SeqName::Stirling2 => Table::Integers(stirling_row_table("stirling2-row", n, false)),
    };
    Ok(table)
}

fn stirling_row_table(prefix: &str, n: usize, first_kind: bool) -> SequenceTable {
    let triangle = if first_kind {
        sequences::stirling1_triangle(n)
    } else {
        sequences::stirling2_triangle(n)
    };
    let row = triangle.into_iter().last().expect("row n");
    SequenceTable::new(&format!("{prefix}-{n}"), 0, row, sequences::Provenance::ShortRecursion)
}

fn parse_required_t(family: &FamilyArgs) -> CliResult<Rat> {
    let t = family
        .t
        .as_deref()
        .ok_or_else(|| CoreError::InvalidInput("legendre needs --t p/q".into()))?;
    Ok(parse_rat(t)?)
}

fn cmd_seq(name: SeqName, n: usize, family: &FamilyArgs, format: Format, out: &OutArgs) -> CliResult<Outcome> {
    let table = build_table(name, n, family)?;
    match format {
        Format::Csv => {
            let mut csv = String::from("n,value\n");
            for (idx, value) in table.rows() {
                let _ = writeln!(csv, "{idx},{value}");
            }
            emit(out, &csv)?;
        }
        Format::Json => {
            let rows = table.rows();
            let doc = json!({
                "command": "seq",
                "version": env!("CARGO_PKG_VERSION"),
                "name": table.name(),
                "start_index": rows.first().map(|(n, _)| *n).unwrap_or(0),
                "values": rows.iter().map(|(_, v)| v.clone()).collect::<Vec<_>>(),
            });
            emit_json(out, &doc)?;
        }
    }
    Ok(Outcome::Ok)
}

fn cmd_oracle(
    family: OracleFamily,
    n: Option<usize>,
    rank: i64,
    format: Format,
    out: &OutArgs,
) -> CliResult<Outcome> {
    let cfg = OracleConfig::default();
    let budget = &cfg.budget;
    let (label, max_default): (&str, usize) = match family {
        OracleFamily::Dyck => ("dyck", budget.dyck),
        OracleFamily::Motzkin => ("motzkin", budget.motzkin),
        OracleFamily::Secondary => ("secondary", budget.secondary),
        OracleFamily::Delannoy => ("delannoy", budget.delannoy),
        OracleFamily::Schroeder => ("schroeder", budget.schroeder),
        OracleFamily::Cycles => ("cycles", budget.permutations),
        OracleFamily::Blocks => ("blocks", budget.partitions),
    };
    let n_max = n.unwrap_or(max_default);
    let mut rows: Vec<(String, String, String)> = Vec::new();
    let mut all_match = true;

    match family {
        OracleFamily::Dyck => {
            let engine = sequences::catalan(n_max)?;
            for i in 0..=n_max {
                let e = oracles::enum_dyck_with(i, &cfg)?;
                push_row(&mut rows, &mut all_match, i.to_string(), e.count.to_string(), engine.values[i].to_string());
            }
        }
        OracleFamily::Motzkin => {
            let engine = sequences::motzkin_short(n_max)?;
            for i in 0..=n_max {
                let count = oracles::enum_motzkin_with(i, &cfg)?;
                push_row(&mut rows, &mut all_match, i.to_string(), count.to_string(), engine.values[i].to_string());
            }
        }
        OracleFamily::Secondary => {
            if rank < -1 {
                return Err(CoreError::InvalidInput(format!("rank {rank} < -1")).into());
            }
            let engine: Option<SequenceTable> = if rank == 1 {
                Some(sequences::sec_struct_rank1(n_max)?)
            } else if rank >= 0 {
                Some(sequences::sec_struct_general(rank as usize, n_max)?)
            } else {
                None // degenerate rank -1 has no recursion engine; counts only
            };
            for i in 0..=n_max {
                let count = oracles::enum_secondary_with(rank, i, &cfg)?;
                let expected = engine
                    .as_ref()
                    .map(|t| t.values[i].to_string())
                    .unwrap_or_else(|| count.to_string());
                push_row(&mut rows, &mut all_match, i.to_string(), count.to_string(), expected);
            }
        }
        OracleFamily::Delannoy => {
            let engine = sequences::delannoy(n_max)?;
            for i in 0..=n_max {
                let count = oracles::enum_delannoy_with(i, &cfg)?;
                push_row(&mut rows, &mut all_match, i.to_string(), count.to_string(), engine.values[i].to_string());
            }
        }
        OracleFamily::Schroeder => {
            let engine = sequences::schroeder(n_max)?;
            for i in 0..=n_max {
                let count = oracles::enum_schroeder_with(i, &cfg)?;
                push_row(&mut rows, &mut all_match, i.to_string(), count.to_string(), engine.values[i].to_string());
            }
        }
        OracleFamily::Cycles => {
            let triangle = sequences::stirling1_triangle(n_max);
            for (i, expected_row) in triangle.iter().enumerate() {
                let row = oracles::enum_permutations_by_cycles_with(i, &cfg)?;
                for (k, count) in row.iter().enumerate() {
                    push_row(
                        &mut rows,
                        &mut all_match,
                        format!("{i},{k}"),
                        count.to_string(),
                        expected_row[k].to_string(),
                    );
                }
            }
        }
        OracleFamily::Blocks => {
            let triangle = sequences::stirling2_triangle(n_max);
            for (i, expected_row) in triangle.iter().enumerate() {
                let row = oracles::enum_partitions_by_blocks_with(i, &cfg)?;
                for (k, count) in row.iter().enumerate() {
                    push_row(
                        &mut rows,
                        &mut all_match,
                        format!("{i},{k}"),
                        count.to_string(),
                        expected_row[k].to_string(),
                    );
                }
            }
        }
    }

    match format {
        Format::Csv => {
            let key_header = if matches!(family, OracleFamily::Cycles | OracleFamily::Blocks) {
                "n,k"
            } else {
                "n"
            };
            let mut csv = format!("{key_header},oracle,engine,match\n");
            for (key, oracle, engine) in &rows {
                let _ = writeln!(csv, "{key},{oracle},{engine},{}", oracle == engine);
            }
            emit(out, &csv)?;
        }
        Format::Json => {
            let doc = json!({
                "command": "oracle",
                "version": env!("CARGO_PKG_VERSION"),
                "family": label,
                "rank": if matches!(family, OracleFamily::Secondary) { Some(rank) } else { None },
                "rows": rows.iter().map(|(key, oracle, engine)| json!({
                    "n": key, "oracle": oracle, "engine": engine, "match": oracle == engine
                })).collect::<Vec<_>>(),
                "all_match": all_match,
            });
            emit_json(out, &doc)?;
        }
    }

    if all_match {
        Ok(Outcome::Ok)
    } else {
        // a failed oracle comparison is an internal consistency failure
        let bad = rows.iter().find(|(_, o, e)| o != e).expect("mismatch row");
        Err(CoreError::OracleMismatch {
            family: label.into(),
            n: bad.0.split(',').next().unwrap_or("0").parse().unwrap_or(0),
            got: bad.2.clone(),
            expected: bad.1.clone(),
        }
        .into())
    }
}

fn push_row(
    rows: &mut Vec<(String, String, String)>,
    all_match: &mut bool,
    key: String,
    oracle: String,
    engine: String,
) {
    *all_match &= oracle == engine;
    rows.push((key, oracle, engine));
}

fn expected_behavior(name: SeqName, t: Option<&Rat>) -> Option<LogBehavior> {
    match name {
        SeqName::Motzkin
        | SeqName::MotzkinLong
        | SeqName::MotzkinViaCatalan
        | SeqName::Catalan
        | SeqName::CatalanViaMotzkin
        | SeqName::Secondary
        | SeqName::Delannoy
        | SeqName::Schroeder => Some(LogBehavior::LogConvex),
        SeqName::Legendre => {
            // log-convexity is claimed for t >= 1; t = 1 degenerates to all ones
            t.and_then(|t| {
                if *t == rat(1) {
                    Some(LogBehavior::LogStraight)
                } else if *t > rat(1) {
                    Some(LogBehavior::LogConvex)
                } else {
                    None
                }
            })
        }
        SeqName::BinomialRow | SeqName::NarayanaRow | SeqName::Stirling1 | SeqName::Stirling2 => {
            Some(LogBehavior::LogConcave)
        }
    }
}

fn cmd_check(name: SeqName, n: usize, family: &FamilyArgs, out: &OutArgs) -> CliResult<Outcome> {
    let t_arg = match name {
        SeqName::Legendre => Some(parse_required_t(family)?),
        _ => None,
    };
    let report = match name {
        SeqName::Legendre => {
            let values = sequences::legendre_values(t_arg.as_ref().unwrap(), n);
            check_log_behavior_rationals(&values)?
        }
        SeqName::Stirling1 | SeqName::Stirling2 => {
            // rows start with a structural zero at k = 0; classify k >= 1
            let table = build_table(name, n, family)?;
            let Table::Integers(table) = table else { unreachable!() };
            let positive = SequenceTable::new(
                &table.name,
                1,
                table.values[1..].to_vec(),
                table.provenance,
            );
            check_log_behavior(&positive)?
        }
        _ => match build_table(name, n, family)? {
            Table::Integers(table) => check_log_behavior(&table)?,
            Table::Rationals(seq) => check_log_behavior_rationals(&seq)?,
        },
    };
    let expected = expected_behavior(name, t_arg.as_ref());
    let holds = expected.map(|e| e == report.property);
    let violation = match expected {
        Some(LogBehavior::LogConvex) => report.first_convexity_violation,
        Some(LogBehavior::LogConcave) => report.first_concavity_violation,
        Some(LogBehavior::LogStraight) => {
            report.first_concavity_violation.or(report.first_convexity_violation)
        }
        _ => None,
    };
    let doc = json!({
        "command": "check",
        "version": env!("CARGO_PKG_VERSION"),
        "sequence": report.sequence,
        "property": report.property.as_str(),
        "violation": violation,
        "peak": report.peak.as_ref().map(|p| json!({"index": p.index, "plateau": p.plateau})),
        "expected": expected.map(|e| e.as_str()),
        "holds": holds,
    });
    emit_json(out, &doc)?;
    match holds {
        Some(false) => Ok(Outcome::PropertyViolated),
        _ => Ok(Outcome::Ok),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_certify(
    kind: Option<CertifyKind>,
    to: i64,
    kmax: i64,
    t: Option<String>,
    strict: bool,
    bounds: Option<String>,
    from: Option<String>,
    verify: Option<PathBuf>,
    out: &OutArgs,
) -> CliResult<Outcome> {
    if let Some(path) = verify {
        return cmd_verify(&path, out);
    }
    let kind = kind.ok_or_else(|| {
        CoreError::InvalidInput("certify needs a patchwork kind or --verify FILE".into())
    })?;
    let patchwork_kind = match kind {
        CertifyKind::MotzkinPatchwork => PatchworkKind::Motzkin,
        CertifyKind::Rank1Patchwork => PatchworkKind::Rank1,
        CertifyKind::LegendrePatchwork => {
            let t = t.as_deref().ok_or_else(|| {
                CoreError::InvalidInput("legendre-patchwork needs --t p/q".into())
            })?;
            PatchworkKind::Legendre(parse_rat(t)?)
        }
    };
    let patchwork = build_patchwork(patchwork_kind, to)?;
    if let Some(range) = bounds {
        let (lo, hi) = range
            .split_once(':')
            .ok_or_else(|| CoreError::InvalidInput("bounds must be lo:hi".into()))?;
        let lo = parse_rat(lo)?;
        let hi = parse_rat(hi)?;
        let from = match from {
            Some(f) => parse_rat(&f)?,
            None => rat(patchwork.first_start()),
        };
        let cert = certify_bounds(&patchwork, &lo, &hi, &from, kmax, true);
        let verdict = cert.verdict;
        let doc = certify::certificate::BoundDocument::from(&cert);
        emit_json(out, &doc)?;
        return Ok(if verdict { Outcome::Ok } else { Outcome::PropertyViolated });
    }
    let opts = CertifyOptions { k_max: kmax, strict, ..Default::default() };
    let cert = certify_increasing(&patchwork, &opts);
    let verdict = cert.verdict;
    let doc = certify::certificate::MonotonicityDocument::from(&cert);
    emit_json(out, &doc)?;
    Ok(if verdict { Outcome::Ok } else { Outcome::PropertyViolated })
}

fn cmd_verify(path: &PathBuf, out: &OutArgs) -> CliResult<Outcome> {
    let body = std::fs::read_to_string(path)?;
    let probe: serde_json::Value = serde_json::from_str(&body)
        .map_err(|e| CoreError::InvalidInput(format!("bad JSON: {e}")))?;
    let document = probe.get("document").and_then(|d| d.as_str()).unwrap_or_default();
    let outcome = match document {
        certify::certificate::MONOTONICITY_DOCUMENT => {
            let doc: certify::certificate::MonotonicityDocument = serde_json::from_str(&body)
                .map_err(|e| CoreError::InvalidInput(format!("bad certificate: {e}")))?;
            certify::verify_monotonicity_document(&doc)?
        }
        certify::certificate::BOUND_DOCUMENT => {
            let doc: certify::certificate::BoundDocument = serde_json::from_str(&body)
                .map_err(|e| CoreError::InvalidInput(format!("bad certificate: {e}")))?;
            certify::verify_bounds_document(&doc)?
        }
        other => {
            return Err(CoreError::InvalidInput(format!("unknown document type `{other}`")).into())
        }
    };
    let ok = outcome.ok;
    let doc = json!({
        "command": "verify",
        "version": env!("CARGO_PKG_VERSION"),
        "file": path.display().to_string(),
        "ok": ok,
        "problem": outcome.problem,
    });
    emit_json(out, &doc)?;
    Ok(if ok { Outcome::Ok } else { Outcome::PropertyViolated })
}

fn cmd_alpha(rank: u32, tol: &str, out: &OutArgs) -> CliResult<Outcome> {
    let tol = parse_rat(tol)?;
    let (lo, hi) = alpha_root(rank, &tol)?;
    let doc = json!({
        "command": "alpha",
        "version": env!("CARGO_PKG_VERSION"),
        "rank": rank,
        "tol": rat_string(&tol),
        "lo": rat_string(&lo),
        "hi": rat_string(&hi),
        "lo_decimal": decimal_string(&lo, 15),
        "hi_decimal": decimal_string(&hi, 15),
    });
    emit_json(out, &doc)?;
    Ok(Outcome::Ok)
}

fn cmd_report(kind: ReportKind) -> CliResult<Outcome> {
    match kind {
        ReportKind::Limit { seq, n, tol, out } => {
            let tol = parse_rat(&tol)?;
            let (ratios, target) = match seq {
                LimitSeq::Motzkin => (
                    sequences::ratio_sequence(&sequences::motzkin_short(n)?)?,
                    QuadraticSurd::from_rational(rat(3)),
                ),
                LimitSeq::Delannoy => (
                    sequences::ratio_sequence(&sequences::delannoy(n)?)?,
                    QuadraticSurd::three_plus_two_sqrt2(),
                ),
                LimitSeq::Rank1 => (
                    sequences::ratio_sequence(&sequences::sec_struct_rank1(n)?)?,
                    QuadraticSurd::half_three_plus_sqrt5(),
                ),
            };
            let report = certify::limit_report(&ratios, &target, &tol);
            let ok = report.within_tolerance && report.tail_nondecreasing;
            let doc = json!({
                "command": "report-limit",
                "version": env!("CARGO_PKG_VERSION"),
                "sequence": report.base_name,
                "n": report.n,
                "target": report.target,
                "tolerance": rat_string(&report.tolerance),
                "within_tolerance": report.within_tolerance,
                "tail_nondecreasing": report.tail_nondecreasing,
                "last_ratio_decimal": report.last_ratio_decimal,
            });
            emit_json(&out, &doc)?;
            Ok(if ok { Outcome::Ok } else { Outcome::PropertyViolated })
        }
        ReportKind::Asymptotic { n, compare_n, out } => {
            let table = sequences::motzkin_short(n.max(1) as usize)?;
            let report = certify::asymptotic_check_motzkin(&table, n)?;
            let compare = compare_n
                .map(|m| certify::asymptotic_check_motzkin(&table, m))
                .transpose()?;
            let ok = report.deviation.abs() <= 0.01
                && compare.as_ref().is_none_or(|c| report.deviation.abs() < c.deviation.abs());
            let doc = json!({
                "command": "report-asymptotic",
                "version": env!("CARGO_PKG_VERSION"),
                "n": report.n,
                "deviation": format!("{:.3e}", report.deviation),
                "compare_n": compare.as_ref().map(|c| c.n),
                "compare_deviation": compare.as_ref().map(|c| format!("{:.3e}", c.deviation)),
                "ok": ok,
                "note": "float computation, ~1e-12 headroom against the 1% tolerance",
            });
            emit_json(&out, &doc)?;
            Ok(if ok { Outcome::Ok } else { Outcome::PropertyViolated })
        }
        ReportKind::Interlace { seq, n, from, out } => {
            let (ratios, bound) = match seq {
                InterlaceSeq::Motzkin => (
                    sequences::ratio_sequence(&sequences::motzkin_short(n)?)?,
                    InterlaceBound::Motzkin,
                ),
                InterlaceSeq::Rank1 => (
                    sequences::ratio_sequence(&sequences::sec_struct_rank1(n)?)?,
                    InterlaceBound::Rank1,
                ),
            };
            let from = from.unwrap_or_else(|| bound.default_start());
            let results = interlace_check(&ratios, bound, from, n as i64);
            let first_failure = results.iter().find(|(_, ok)| !ok).map(|(n, _)| *n);
            let doc = json!({
                "command": "report-interlace",
                "version": env!("CARGO_PKG_VERSION"),
                "sequence": ratios.base_name,
                "from": from,
                "to": results.last().map(|(n, _)| *n),
                "ok": first_failure.is_none(),
                "first_failure": first_failure,
            });
            emit_json(&out, &doc)?;
            Ok(if first_failure.is_none() { Outcome::Ok } else { Outcome::PropertyViolated })
        }
        ReportKind::Series { kind, order, out } => {
            let gf = match kind {
                SeriesKind::MotzkinGf => GeneratingFunction::Motzkin,
                SeriesKind::DelannoyGf => GeneratingFunction::Delannoy,
            };
            let result = series_identity_check(gf, order);
            let (ok, mismatch) = match &result {
                Ok(()) => (true, None),
                Err(CoreError::SeriesMismatch { index, .. }) => (false, Some(*index)),
                Err(e) => return Err(e.clone().into()),
            };
            let doc = json!({
                "command": "report-series",
                "version": env!("CARGO_PKG_VERSION"),
                "kind": match kind { SeriesKind::MotzkinGf => "motzkin-gf", SeriesKind::DelannoyGf => "delannoy-gf" },
                "order": order,
                "ok": ok,
                "first_mismatch": mismatch,
            });
            emit_json(&out, &doc)?;
            if ok {
                Ok(Outcome::Ok)
            } else {
                // a mismatch here means an engine bug, not a failed property
                Err(result.unwrap_err().into())
            }
        }
    }
}
