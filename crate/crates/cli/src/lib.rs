//! Command implementations behind the `stern` binary.

use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;
use thiserror::Error;

use stern_core::bfile::{parse_bfile, write_bfile, BFileError};
use stern_core::budget::{Budget, MAX_BITS_ENV};
use stern_core::calculus::{stern_a_matrix, stern_s_matrix};
use stern_core::checks::{self, SuiteReport};
use stern_core::classifier::{family_of, generate_kbit, table_row, TABLE_3};
use stern_core::search::records_scan_with;
use stern_core::{
    hyperbinary_count_dp, records_scan, stern_a, stern_s, Convention, Error, GenString,
};

/// Bit length limit for the closed-form source.
pub const CLOSED_FORM_MAX_BITS: u32 = 64;

/// Random pairs drawn by the identities suite.
pub const IDENTITY_SAMPLES: usize = 10_000;

#[derive(Debug, Parser)]
#[command(
    name = "stern",
    version,
    about = "Stern's diatomic sequence and its record-setters"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a(n), or s(n) = a(n + 1) with `--convention S`.
    Value {
        n: String,
        #[arg(long, default_value = "A")]
        convention: ConventionArg,
        #[arg(long, value_enum, default_value_t = Method::Recurrence)]
        method: Method,
    },
    /// List record-setters.
    Records(RecordsArgs),
    /// Run verification suites.
    Verify {
        /// Bit-length range `lo..hi` (inclusive).
        #[arg(long, default_value = "1..24")]
        k_range: String,
        /// Comma-separated: tables, identities, substrings, extremal, crossval.
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "tables,identities,substrings,extremal,crossval"
        )]
        suites: Vec<Suite>,
        /// Local b-file whose `n value` pairs are checked against a(n).
        #[arg(long)]
        bfile: Option<PathBuf>,
    },
    /// Emit `n,a(n),running_max` rows for 0 <= n <= max.
    Plot {
        #[arg(long)]
        max: u64,
        #[arg(long, value_enum, default_value_t = PlotFormat::Csv)]
        format: PlotFormat,
    },
    /// Reproduce one of the three small tables.
    Table {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=3))]
        which: u8,
    },
}

#[derive(Debug, Args)]
pub struct RecordsArgs {
    /// All record-setters with at most this many bits.
    #[arg(long, required_unless_present = "bits", conflicts_with = "bits")]
    pub max_bits: Option<u32>,
    /// Record-setters with exactly this many bits.
    #[arg(long)]
    pub bits: Option<u32>,
    #[arg(long, default_value = "A")]
    pub convention: ConventionArg,
    #[arg(long, value_enum, default_value_t = Source::Scan)]
    pub source: Source,
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
    pub format: OutputFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConventionArg(pub Convention);

impl std::str::FromStr for ConventionArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        s.parse()
            .map(ConventionArg)
            .map_err(|_| format!("expected A or S, got {s:?}"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Recurrence,
    Matrix,
    Dp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Source {
    Scan,
    ClosedForm,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Plain,
    Csv,
    Jsonlines,
    Bfile,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PlotFormat {
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Tables,
    Identities,
    Substrings,
    Extremal,
    Crossval,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error(transparent)]
    BFile(#[from] BFileError),
    #[error("{0}")]
    Usage(String),
    #[error("verification failed")]
    Verification,
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    /// 1 verification failure, 2 usage, 3 budget exceeded.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification => 1,
            CliError::Core(Error::BudgetExceeded { .. }) => 3,
            CliError::Io(_) => 1,
            _ => 2,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Budget from the environment, falling back to the default.
pub fn budget_from_env() -> CliResult<Budget> {
    match std::env::var(MAX_BITS_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Budget::new)
            .map_err(|_| CliError::Usage(format!("{MAX_BITS_ENV}={v:?} is not a bit count"))),
        Err(_) => Ok(Budget::default()),
    }
}

pub fn run(cli: Cli, budget: &Budget, out: &mut dyn Write) -> CliResult<()> {
    match cli.command {
        Command::Value {
            n,
            convention,
            method,
        } => {
            let v = cmd_value(&n, convention.0, method)?;
            writeln!(out, "{v}")?;
        }
        Command::Records(args) => out.write_all(cmd_records(&args, budget)?.as_bytes())?,
        Command::Verify {
            k_range,
            suites,
            bfile,
        } => {
            let (lo, hi) = parse_k_range(&k_range)?;
            let reports = cmd_verify(lo..=hi, &suites, bfile.as_deref(), budget)?;
            let passed = reports.iter().all(SuiteReport::passed);
            out.write_all(render_reports(&reports).as_bytes())?;
            writeln!(out, "{}", if passed { "PASS" } else { "FAIL" })?;
            if !passed {
                return Err(CliError::Verification);
            }
        }
        Command::Plot { max, format: _ } => cmd_plot(max, budget, out)?,
        Command::Table { which } => out.write_all(cmd_table(which).as_bytes())?,
    }
    Ok(())
}

fn parse_n(n: &str) -> CliResult<BigUint> {
    n.trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("not a non-negative integer: {n:?}")))
}

pub fn cmd_value(n: &str, convention: Convention, method: Method) -> CliResult<BigUint> {
    let n = parse_n(n)?;
    if method == Method::Matrix {
        return Ok(match convention {
            Convention::A => stern_a_matrix(&n),
            Convention::S => stern_s_matrix(&n),
        });
    }
    let small = u64::try_from(&n)
        .ok()
        .filter(|&v| v < 1 << 63)
        .ok_or_else(|| {
            CliError::Usage(format!(
                "{n} is too large for {method:?}; use --method matrix"
            ))
        })?;
    Ok(match (method, convention) {
        (Method::Dp, Convention::S) => hyperbinary_count_dp(small).into_inner(),
        (Method::Dp, Convention::A) if small == 0 => BigUint::from(0u32),
        (Method::Dp, Convention::A) => hyperbinary_count_dp(small - 1).into_inner(),
        (_, Convention::A) => stern_a(small).into_inner(),
        (_, Convention::S) => stern_s(small).into_inner(),
    })
}

/// One output line of `records`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Listing {
    #[serde(serialize_with = "as_string")]
    pub index: BigUint,
    pub bits: String,
    #[serde(serialize_with = "as_string")]
    pub value: BigUint,
    pub k: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
}

fn as_string<S: serde::Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

impl Listing {
    /// Builds the line for the a-index `a_index`, shifting to the
    /// s-index under the S convention. The family always names the a-index.
    fn new(a_index: BigUint, value: BigUint, convention: Convention) -> Self {
        let a_bits = GenString::binary_of_big(&a_index);
        let family = family_of(&a_bits).map(|d| d.to_string());
        let index = match convention {
            Convention::A => a_index,
            Convention::S => a_index - 1u32,
        };
        let k = if index == BigUint::from(0u32) {
            0
        } else {
            index.bits() as u32
        };
        Listing {
            bits: GenString::binary_of_big(&index).to_string(),
            index,
            value,
            k,
            family,
        }
    }
}

/// a-convention record-setters `(index, value)` in increasing order.
fn a_records(args: &RecordsArgs, budget: &Budget) -> CliResult<Vec<(BigUint, BigUint)>> {
    let (k, exact) = match (args.max_bits, args.bits) {
        (Some(k), None) => (k, false),
        (None, Some(k)) => (k, true),
        _ => {
            return Err(CliError::Usage(
                "give exactly one of --max-bits, --bits".into(),
            ))
        }
    };
    if k == 0 {
        return Err(Error::InvalidBitLength(0).into());
    }
    match args.source {
        Source::Scan => Ok(records_scan_with(k, Convention::A, budget)?
            .into_iter()
            .filter(|r| !exact || r.bit_length == k)
            .map(|r| (BigUint::from(r.index), r.value.into_inner()))
            .collect()),
        Source::ClosedForm => {
            if k > CLOSED_FORM_MAX_BITS {
                return Err(CliError::Usage(format!(
                    "closed-form listings go up to {CLOSED_FORM_MAX_BITS} bits"
                )));
            }
            let lengths = if exact { k..=k } else { 1..=k };
            let mut out = Vec::new();
            if !exact {
                out.push((BigUint::from(0u32), BigUint::from(0u32)));
            }
            for len in lengths {
                out.extend(
                    generate_kbit(len)
                        .into_iter()
                        .map(|e| (e.index, e.stern_value)),
                );
            }
            Ok(out)
        }
    }
}

pub fn record_listings(args: &RecordsArgs, budget: &Budget) -> CliResult<Vec<Listing>> {
    let convention = args.convention.0;
    let exact = args.bits;
    Ok(a_records(args, budget)?
        .into_iter()
        .filter(|(index, _)| convention == Convention::A || *index != BigUint::from(0u32))
        .map(|(index, value)| Listing::new(index, value, convention))
        .filter(|l| exact.is_none_or(|k| l.k == k))
        .collect())
}

pub fn cmd_records(args: &RecordsArgs, budget: &Budget) -> CliResult<String> {
    Ok(render_listings(
        &record_listings(args, budget)?,
        args.format,
    ))
}

pub fn render_listings(listings: &[Listing], format: OutputFormat) -> String {
    let mut out = String::new();
    match format {
        OutputFormat::Plain => {
            for l in listings {
                write!(out, "{} {} {}", l.index, l.bits, l.value).unwrap();
                if let Some(f) = &l.family {
                    write!(out, " {f}").unwrap();
                }
                out.push('\n');
            }
        }
        OutputFormat::Csv => {
            out.push_str("index,bits,value,k,family\n");
            for l in listings {
                let family = l.family.as_deref().unwrap_or("");
                writeln!(out, "{},{},{},{},{family}", l.index, l.bits, l.value, l.k).unwrap();
            }
        }
        OutputFormat::Jsonlines => {
            for l in listings {
                out.push_str(&serde_json::to_string(l).expect("listing serializes"));
                out.push('\n');
            }
        }
        OutputFormat::Bfile => out = write_bfile(listings.iter().map(|l| (&l.index, &l.value))),
    }
    out
}

fn parse_k_range(s: &str) -> CliResult<(u32, u32)> {
    let bad = || CliError::Usage(format!("expected lo..hi, got {s:?}"));
    let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
    let lo: u32 = lo.trim().parse().map_err(|_| bad())?;
    let hi: u32 = hi
        .trim()
        .trim_start_matches('=')
        .parse()
        .map_err(|_| bad())?;
    if lo == 0 || lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

pub fn cmd_verify(
    range: std::ops::RangeInclusive<u32>,
    suites: &[Suite],
    bfile: Option<&std::path::Path>,
    budget: &Budget,
) -> CliResult<Vec<SuiteReport>> {
    let mut reports = Vec::new();
    for suite in suites {
        reports.push(match suite {
            Suite::Tables => checks::tables(range.clone(), budget)?,
            Suite::Identities => checks::identities(IDENTITY_SAMPLES, checks::DEFAULT_SEED),
            Suite::Substrings => checks::substrings(*range.end(), budget)?,
            Suite::Extremal => checks::extremal(8),
            Suite::Crossval => checks::crossval(range.clone(), budget)?,
        });
    }
    if let Some(path) = bfile {
        let text = std::fs::read_to_string(path)?;
        reports.push(checks::against_pairs(&parse_bfile(&text)?));
    }
    Ok(reports)
}

pub fn render_reports(reports: &[SuiteReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        writeln!(
            out,
            "{:<11} {status}  checked {}, discrepancies {}",
            r.name,
            r.checked,
            r.discrepancies.len()
        )
        .unwrap();
        for d in &r.discrepancies {
            writeln!(out, "  ! {d}").unwrap();
        }
        for n in &r.notes {
            writeln!(out, "  note: {n}").unwrap();
        }
    }
    out
}

pub fn cmd_plot(max: u64, budget: &Budget, out: &mut dyn Write) -> CliResult<()> {
    budget.check((64 - max.leading_zeros()).max(1))?;
    let mut best = 0u64;
    let mut w = io::BufWriter::new(out);
    for n in 0..=max {
        let v = stern_a(n).to_u64().expect("row values fit u64");
        best = best.max(v);
        writeln!(w, "{n},{v},{best}")?;
    }
    w.flush()?;
    Ok(())
}

pub fn cmd_table(which: u8) -> String {
    let mut out = String::new();
    let join = |xs: &[String]| xs.join("\t");
    match which {
        1 => {
            let n: Vec<String> = (0..16).map(|i| i.to_string()).collect();
            let a: Vec<String> = (0..16).map(|i| stern_a(i).to_string()).collect();
            writeln!(out, "n\t{}\na(n)\t{}", join(&n), join(&a)).unwrap();
        }
        2 => {
            let records: Vec<_> = records_scan(8, Convention::A)
                .expect("8 bits is within every budget")
                .into_iter()
                .take(checks::TABLE_2_INDICES.len())
                .collect();
            let i: Vec<String> = (0..records.len()).map(|i| i.to_string()).collect();
            let v: Vec<String> = records.iter().map(|r| r.index.to_string()).collect();
            let a: Vec<String> = records.iter().map(|r| r.value.to_string()).collect();
            writeln!(
                out,
                "i\t{}\nv_i\t{}\na(v_i)\t{}",
                join(&i),
                join(&v),
                join(&a)
            )
            .unwrap();
        }
        _ => {
            out.push_str("k\trecord-setters\tvalues\n");
            for &(k, _) in TABLE_3 {
                for (j, e) in generate_kbit(k).iter().enumerate() {
                    let label = if j == 0 { k.to_string() } else { String::new() };
                    writeln!(out, "{label}\t{}\t{}", e.bits, e.index).unwrap();
                }
                debug_assert_eq!(generate_kbit(k).len(), table_row(k).map_or(0, |r| r.len()));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(max_bits: Option<u32>, bits: Option<u32>, source: Source) -> RecordsArgs {
        RecordsArgs {
            max_bits,
            bits,
            convention: ConventionArg(Convention::A),
            source,
            format: OutputFormat::Plain,
        }
    }

    #[test]
    fn value_methods() {
        for m in [Method::Recurrence, Method::Matrix, Method::Dp] {
            assert_eq!(
                cmd_value("11", Convention::A, m).unwrap(),
                BigUint::from(5u32)
            );
            assert_eq!(
                cmd_value("0", Convention::S, m).unwrap(),
                BigUint::from(1u32)
            );
            assert_eq!(
                cmd_value("0", Convention::A, m).unwrap(),
                BigUint::from(0u32)
            );
        }
        assert_eq!(
            cmd_value("2731", Convention::A, Method::Matrix).unwrap(),
            BigUint::from(233u32)
        );
        assert!(matches!(
            cmd_value("99999999999999999999", Convention::A, Method::Dp),
            Err(CliError::Usage(_))
        ));
        assert!(cmd_value("12x", Convention::A, Method::Matrix).is_err());
    }

    #[test]
    fn sources_agree() {
        let budget = Budget::default();
        for k in 1..=14 {
            let scan = record_listings(&args(None, Some(k), Source::Scan), &budget).unwrap();
            let closed =
                record_listings(&args(None, Some(k), Source::ClosedForm), &budget).unwrap();
            assert_eq!(scan, closed, "k = {k}");
        }
        let scan = record_listings(&args(Some(13), None, Source::Scan), &budget).unwrap();
        let closed = record_listings(&args(Some(13), None, Source::ClosedForm), &budget).unwrap();
        assert_eq!(scan, closed);
    }

    #[test]
    fn s_convention_listing() {
        let mut a = args(Some(4), None, Source::ClosedForm);
        a.convention = ConventionArg(Convention::S);
        let listed: Vec<String> = record_listings(&a, &Budget::default())
            .unwrap()
            .iter()
            .map(|l| l.index.to_string())
            .collect();
        assert_eq!(listed, ["0", "2", "4", "8", "10"]);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(
            CliError::Core(Error::BudgetExceeded {
                bits: 30,
                limit_bits: 24
            })
            .exit_code(),
            3
        );
        assert_eq!(CliError::Usage("x".into()).exit_code(), 2);
        assert_eq!(CliError::Verification.exit_code(), 1);
        assert!(matches!(
            cmd_records(&args(Some(30), None, Source::Scan), &Budget::default()),
            Err(CliError::Core(Error::BudgetExceeded { .. }))
        ));
    }

    #[test]
    fn k_range_parsing() {
        assert_eq!(parse_k_range("1..24").unwrap(), (1, 24));
        assert_eq!(parse_k_range("12..=24").unwrap(), (12, 24));
        assert!(parse_k_range("5..2").is_err());
        assert!(parse_k_range("0..3").is_err());
        assert!(parse_k_range("7").is_err());
    }

    #[test]
    fn tables_render() {
        assert!(cmd_table(1).ends_with("a(n)\t0\t1\t1\t2\t1\t3\t2\t3\t1\t4\t3\t5\t2\t5\t3\t4\n"));
        assert!(cmd_table(2)
            .contains("a(v_i)\t0\t1\t2\t3\t4\t5\t7\t8\t9\t11\t13\t14\t15\t18\t19\t21\t23\t26\n"));
        let t3 = cmd_table(3);
        assert_eq!(t3.lines().count(), 1 + 40);
        assert!(t3.contains("\n11\t10001010101\t1109\n"));
    }
}
