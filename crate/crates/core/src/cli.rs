//! Command-line surface. `main.rs` only forwards to [`main_with_args`].
//!
//! Exit codes: `0` success, `1` mathematical degeneracy or failed
//! verification, `2` usage or input error.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::constructor::{
    self, cubic_rp, cubic_rp_base_point, cubic_rr, cubic_rr_base_point, descend_further,
    pair_from_ra_u, pair_from_rp_point, pair_from_rr_point, ConstructError, CurvePoint,
};
use crate::families::{verify_pair, Family, FamilyError, PairKind, TrianglePair, VerificationReport};
use crate::rational::{self, int, parse_rational, Rational};
use crate::search::{self, find_pairs, write_csv, write_jsonl, PairRecord, SearchConfig, SearchError};

/// Relative `search --output` paths are resolved against this directory when set.
pub const OUTPUT_DIR_ENV: &str = "HERON_PAIRS_OUTPUT_DIR";

#[derive(Debug, Parser)]
#[command(name = "heron-pairs", version, about = "Rational triangle pairs with a common circumradius")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    /// common circumradius and perimeter
    Rp,
    /// common circumradius and inradius
    Rr,
    /// common circumradius and area
    Ra,
}

impl From<KindArg> for PairKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Rp => PairKind::CommonRp,
            KindArg::Rr => PairKind::CommonRr,
            KindArg::Ra => PairKind::CommonRa,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum PairFormat {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum SearchFormat {
    #[default]
    Jsonl,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct Params {
    #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
    pub t1: Option<Rational>,
    #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
    pub t2: Option<Rational>,
    /// single parameter of the area family
    #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
    pub t: Option<Rational>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a published closed-form family
    Family {
        kind: KindArg,
        #[command(flatten)]
        params: Params,
        /// use the t2 = 1 specialization (rp and rr only)
        #[arg(long)]
        right: bool,
        #[arg(long, value_enum, default_value_t)]
        format: PairFormat,
    },
    /// Re-derive a pair with the tangent or Fermat construction
    Solve {
        kind: KindArg,
        #[command(flatten)]
        params: Params,
        /// common perimeter or inradius scale (rp, rr)
        #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
        m: Option<Rational>,
        #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
        n: Option<Rational>,
        #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
        q: Option<Rational>,
        #[arg(long, value_enum, default_value_t)]
        format: PairFormat,
    },
    /// Produce further solutions by tangent/chord or repeated Fermat steps
    Descend {
        kind: KindArg,
        #[command(flatten)]
        params: Params,
        #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
        m: Option<Rational>,
        #[arg(long)]
        steps: usize,
    },
    /// Re-certify pairs from a JSON or JSON Lines file
    Verify { input: PathBuf },
    /// Brute-force search over integer Heron triangles
    Search {
        #[arg(long)]
        max_side: u64,
        /// repeatable; all kinds when omitted
        #[arg(long = "kind", value_enum)]
        kinds: Vec<KindArg>,
        #[arg(long)]
        primitive_only: bool,
        #[arg(long)]
        scalene_only: bool,
        /// write here instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: SearchFormat,
    },
}

fn parse_rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Degenerate(String),
    #[error("verification failed")]
    VerificationFailed,
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Degenerate(_) | CliError::VerificationFailed => 1,
            CliError::Usage(_) | CliError::Input(_) | CliError::Io(_) => 2,
        }
    }
}

impl From<FamilyError> for CliError {
    fn from(e: FamilyError) -> Self {
        CliError::Degenerate(e.to_string())
    }
}

impl From<ConstructError> for CliError {
    fn from(e: ConstructError) -> Self {
        match e {
            ConstructError::InvalidParameter(msg) => CliError::Usage(msg),
            other => CliError::Degenerate(other.to_string()),
        }
    }
}

impl From<SearchError> for CliError {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::Io(io) => CliError::Io(io),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

fn require(value: &Option<Rational>, flag: &str, kind: KindArg) -> Result<Rational, CliError> {
    value.clone().ok_or_else(|| {
        CliError::Usage(format!("--{flag} is required for kind {}", PairKind::from(kind).short_name()))
    })
}

fn reject(value: &Option<Rational>, flag: &str, kind: KindArg) -> Result<(), CliError> {
    match value {
        Some(_) => Err(CliError::Usage(format!(
            "--{flag} is not accepted for kind {}",
            PairKind::from(kind).short_name()
        ))),
        None => Ok(()),
    }
}

/// `(t1, t2)` for rp/rr, or `t` for ra.
fn two_params(p: &Params, kind: KindArg) -> Result<(Rational, Rational), CliError> {
    reject(&p.t, "t", kind)?;
    Ok((require(&p.t1, "t1", kind)?, require(&p.t2, "t2", kind)?))
}

fn one_param(p: &Params, kind: KindArg) -> Result<Rational, CliError> {
    reject(&p.t1, "t1", kind)?;
    reject(&p.t2, "t2", kind)?;
    require(&p.t, "t", kind)
}

fn family_of(kind: KindArg, params: &Params, right: bool) -> Result<Family, CliError> {
    Ok(match (kind, right) {
        (KindArg::Rp, false) => {
            let (t1, t2) = two_params(params, kind)?;
            Family::Rp { t1, t2 }
        }
        (KindArg::Rr, false) => {
            let (t1, t2) = two_params(params, kind)?;
            Family::Rr { t1, t2 }
        }
        (KindArg::Rp | KindArg::Rr, true) => {
            reject(&params.t, "t", kind)?;
            reject(&params.t2, "t2", kind)?;
            let t1 = require(&params.t1, "t1", kind)?;
            if kind == KindArg::Rp {
                Family::RpRight { t1 }
            } else {
                Family::RrRight { t1 }
            }
        }
        (KindArg::Ra, false) => Family::Ra { t: one_param(params, kind)? },
        (KindArg::Ra, true) => {
            return Err(CliError::Usage("--right is only available for rp and rr".into()))
        }
    })
}

fn write_pair(pair: &TrianglePair, format: PairFormat, out: &mut dyn Write) -> Result<(), CliError> {
    match format {
        PairFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, pair)?;
            writeln!(out)?;
        }
        PairFormat::Csv => write_csv(&[pair], &mut *out)?,
    }
    Ok(())
}

#[derive(Serialize)]
struct DescentOutput {
    kind: PairKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    base_point: Option<CurvePoint>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    points: Vec<CurvePoint>,
    #[serde(skip_serializing_if = "Vec::is_empty", serialize_with = "ser_rationals")]
    u: Vec<Rational>,
    pairs: Vec<TrianglePair>,
    /// points whose pair could not be formed, with the reason
    failures: Vec<(usize, String)>,
}

fn ser_rationals<S: serde::Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(rational::format_rational))
}

fn descend(kind: KindArg, params: &Params, m: &Option<Rational>, steps: usize) -> Result<DescentOutput, CliError> {
    let mut pairs = Vec::new();
    let mut failures = Vec::new();
    match kind {
        KindArg::Rp | KindArg::Rr => {
            let (t1, t2) = two_params(params, kind)?;
            let m = m.clone().unwrap_or_else(|| int(1));
            let (curve, base) = if kind == KindArg::Rp {
                (cubic_rp(&t1, &t2, &m)?, cubic_rp_base_point(&t1, &t2, &m))
            } else {
                (cubic_rr(&t1, &t2, &m)?, cubic_rr_base_point(&t1, &t2, &m))
            };
            let points = descend_further(&curve, std::slice::from_ref(&base), steps)?;
            for (i, p) in points.iter().enumerate() {
                let pair = if kind == KindArg::Rp {
                    pair_from_rp_point(&t1, &t2, &m, p)
                } else {
                    pair_from_rr_point(&t1, &t2, &m, p)
                };
                match pair {
                    Ok(pair) => pairs.push(pair),
                    Err(e) => failures.push((i, e.to_string())),
                }
            }
            Ok(DescentOutput { kind: kind.into(), base_point: Some(base), points, u: Vec::new(), pairs, failures })
        }
        KindArg::Ra => {
            reject(m, "m", kind)?;
            let t = one_param(params, kind)?;
            let us = constructor::solve_ra_iterate(&t, steps)?;
            for (i, u) in us.iter().enumerate() {
                match pair_from_ra_u(&t, u, &int(1), &int(1)) {
                    Ok(pair) => pairs.push(pair),
                    Err(e) => failures.push((i, e.to_string())),
                }
            }
            Ok(DescentOutput { kind: kind.into(), base_point: None, points: Vec::new(), u: us, pairs, failures })
        }
    }
}

/// Reads pairs from a file holding one pair object, an array of pairs, an
/// object with a `pairs` array, or JSON Lines of pairs or search records.
pub fn load_pairs(path: &Path) -> Result<Vec<TrianglePair>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    match serde_json::from_str::<serde_json::Value>(&text) {
        Ok(value) => pairs_from_value(value),
        Err(_) => text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|line| pairs_from_value(serde_json::from_str(line)?))
            .collect::<Result<Vec<_>, _>>()
            .map(|v| v.into_iter().flatten().collect()),
    }
}

fn pairs_from_value(value: serde_json::Value) -> Result<Vec<TrianglePair>, CliError> {
    use serde_json::Value;
    match value {
        Value::Array(items) => items
            .into_iter()
            .map(pairs_from_value)
            .collect::<Result<Vec<_>, _>>()
            .map(|v| v.into_iter().flatten().collect()),
        Value::Object(ref map) if map.contains_key("pairs") => {
            pairs_from_value(map["pairs"].clone())
        }
        Value::Object(ref map) if map.contains_key("pair") => {
            Ok(vec![serde_json::from_value::<PairRecord>(value)?.pair])
        }
        other => Ok(vec![serde_json::from_value::<TrianglePair>(other)?]),
    }
}

#[derive(Serialize)]
struct VerifyEntry<'a> {
    index: usize,
    all_passed: bool,
    #[serde(flatten)]
    report: &'a VerificationReport,
}

fn resolve_output(path: &Path) -> PathBuf {
    match std::env::var_os(OUTPUT_DIR_ENV) {
        Some(dir) if path.is_relative() => Path::new(&dir).join(path),
        _ => path.to_path_buf(),
    }
}

/// Executes one command, writing results to `out`.
pub fn run(cmd: &Command, out: &mut dyn Write) -> Result<(), CliError> {
    match cmd {
        Command::Family { kind, params, right, format } => {
            let pair = family_of(*kind, params, *right)?.evaluate()?;
            write_pair(&pair, *format, out)
        }
        Command::Solve { kind, params, m, n, q, format } => {
            let pair = match kind {
                KindArg::Rp | KindArg::Rr => {
                    reject(n, "n", *kind)?;
                    reject(q, "q", *kind)?;
                    let (t1, t2) = two_params(params, *kind)?;
                    let m = m.clone().unwrap_or_else(|| int(1));
                    if *kind == KindArg::Rp {
                        constructor::solve_rp(&t1, &t2, &m)?
                    } else {
                        constructor::solve_rr(&t1, &t2, &m)?
                    }
                }
                KindArg::Ra => {
                    reject(m, "m", *kind)?;
                    let t = one_param(params, *kind)?;
                    let n = n.clone().unwrap_or_else(|| int(1));
                    let q = q.clone().unwrap_or_else(|| int(1));
                    constructor::solve_ra_scaled(&t, &n, &q)?
                }
            };
            write_pair(&pair, *format, out)
        }
        Command::Descend { kind, params, m, steps } => {
            let result = descend(*kind, params, m, *steps)?;
            serde_json::to_writer_pretty(&mut *out, &result)?;
            writeln!(out)?;
            Ok(())
        }
        Command::Verify { input } => {
            let pairs = load_pairs(input)?;
            let reports: Vec<VerificationReport> = pairs.iter().map(verify_pair).collect();
            let entries: Vec<VerifyEntry> = reports
                .iter()
                .enumerate()
                .map(|(index, report)| VerifyEntry { index, all_passed: report.all_passed(), report })
                .collect();
            serde_json::to_writer_pretty(&mut *out, &entries)?;
            writeln!(out)?;
            if reports.iter().all(VerificationReport::all_passed) {
                Ok(())
            } else {
                Err(CliError::VerificationFailed)
            }
        }
        Command::Search { max_side, kinds, primitive_only, scalene_only, output, format } => {
            let kinds: Vec<PairKind> = if kinds.is_empty() {
                PairKind::ALL.to_vec()
            } else {
                kinds.iter().map(|&k| k.into()).collect()
            };
            let cfg = SearchConfig {
                primitive_only: *primitive_only,
                scalene_only: *scalene_only,
                ..SearchConfig::new(*max_side, kinds)
            };
            let records = find_pairs(&cfg).map_err(|e| match e {
                SearchError::InvalidConfig(_) => CliError::Usage(e.to_string()),
                other => other.into(),
            })?;
            let write = |sink: &mut dyn Write| -> Result<(), CliError> {
                match format {
                    SearchFormat::Jsonl => write_jsonl(&records, sink)?,
                    SearchFormat::Csv => {
                        let pairs: Vec<&TrianglePair> = records.iter().map(|r| &r.pair).collect();
                        search::write_csv(&pairs, sink)?
                    }
                }
                Ok(())
            };
            match output {
                Some(path) => {
                    let path = resolve_output(path);
                    let mut file = BufWriter::new(File::create(&path)?);
                    write(&mut file)?;
                    file.flush()?;
                    writeln!(out, "{} records written to {}", records.len(), path.display())?;
                    Ok(())
                }
                None => write(out),
            }
        }
    }
}

/// Parses `args` (including the program name), runs, and returns the exit code.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{e}");
            return code;
        }
    };
    match run(&cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = main_with_args(
            std::iter::once("heron-pairs").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn family_rr_json() {
        let (code, out, _) = run_args(&["family", "rr", "--t1", "9/2", "--t2", "7/6"]);
        assert_eq!(code, 0);
        let pair: TrianglePair = serde_json::from_str(&out).unwrap();
        assert_eq!(pair.shared_other, int(228));
    }

    #[test]
    fn negative_parameters_parse() {
        let (code, _, err) = run_args(&["family", "rr", "--t1", "-9/2", "--t2", "-7/6"]);
        assert!(code == 0 || code == 1, "{err}");
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_args(&["family", "rr", "--t1", "2", "--t2", "1/0"]).0, 2);
        assert_eq!(run_args(&["family", "rr", "--t1", "2"]).0, 2);
        assert_eq!(run_args(&["family", "ra", "--t1", "2"]).0, 2);
        assert_eq!(run_args(&["family", "ra", "--t", "2", "--right"]).0, 2);
        assert_eq!(run_args(&["search", "--max-side", "2"]).0, 2);
        assert_eq!(run_args(&["bogus"]).0, 2);
    }

    #[test]
    fn degeneracy_exits_1_and_names_factor() {
        let (code, _, err) = run_args(&["family", "rr", "--t1", "2", "--right"]);
        assert_eq!(code, 1);
        assert!(err.contains("t1 - 2"), "{err}");
    }
}
