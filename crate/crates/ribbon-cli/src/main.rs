//! `ribbon`: command-line front end for ribbon-tableaux.
//!
//! Every subcommand except `verify` reads one JSON document on stdin and
//! writes one JSON document on stdout. Exit status is 0 on success, 1 when
//! a verification fails or an input violates a precondition, and 2 when
//! the input is malformed.

mod commands;

use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ribbon_tableaux::Error;
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(
    name = "ribbon",
    version,
    about = "Ribbon tableaux, shape data and growth diagrams over JSON"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Convert a partition to or from its edge sequence or its core and quotient.
    Convert(ConvertArgs),
    /// Apply a shape datum to one square, in either direction.
    Datum(DatumArgs),
    /// Fill a growth diagram from a matrix or a coloured permutation.
    Grow(GrowArgs),
    /// Rebuild a growth diagram from its pair of tableaux.
    Shrink(ShrinkArgs),
    /// Decide whether a skew shape is a ribbon strip, and describe it.
    Strip(StripArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Edge,
    Partition,
    Quotient,
}

/// Input `{"partition": [...]}`, `{"edge": {...}}` or
/// `{"core": [...], "quotient": [[...], ...]}`.
#[derive(Args, Debug)]
pub struct ConvertArgs {
    /// What to produce.
    #[arg(long, value_enum)]
    pub to: Target,
    /// Ribbon length for `--to quotient`.
    #[arg(long)]
    pub r: Option<usize>,
    /// First index of the displayed bit window.
    #[arg(long, allow_hyphen_values = true)]
    pub lo: Option<i64>,
    /// One past the last index of the displayed bit window.
    #[arg(long, allow_hyphen_values = true)]
    pub hi: Option<i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Way {
    Insert,
    Extract,
}

/// Insertion reads `{"lambda", "mu", "nu", "a"}`; extraction reads
/// `{"mu", "nu", "kappa"}`.
#[derive(Args, Debug)]
pub struct DatumArgs {
    pub way: Way,
    /// rsk, burge, burge-edge, factored-rsk, factored-burge, spin-sym or spin-asym.
    #[arg(long)]
    pub name: String,
    #[arg(long, default_value_t = 1)]
    pub r: usize,
    /// Include the per-index log of the scan where the datum has one.
    #[arg(long)]
    pub trace: bool,
}

/// With `--datum`, reads `{"matrix": [[a, ...], ...], "core": [...]}`.
/// With `--tag`, reads `{"permutation": [...], "colours": [...], "core": [...]}`.
#[derive(Args, Debug)]
pub struct GrowArgs {
    /// Shape datum of a Knuth growth diagram.
    #[arg(long, conflicts_with = "tag", required_unless_present = "tag")]
    pub datum: Option<String>,
    /// r-correspondence of a Schensted growth diagram: row, col,
    /// factored-row, factored-col, sw, ws or bvg.
    #[arg(long)]
    pub tag: Option<String>,
    #[arg(long, default_value_t = 1)]
    pub r: usize,
}

/// Reads `{"p": [shapes], "q": [shapes]}`.
#[derive(Args, Debug)]
pub struct ShrinkArgs {
    #[arg(long, conflicts_with = "tag", required_unless_present = "tag")]
    pub datum: Option<String>,
    #[arg(long)]
    pub tag: Option<String>,
    #[arg(long, default_value_t = 1)]
    pub r: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrientationArg {
    H,
    V,
}

/// Reads `{"lower": [...], "upper": [...]}`.
#[derive(Args, Debug)]
pub struct StripArgs {
    #[arg(long, default_value_t = 1)]
    pub r: usize,
    #[arg(long, value_enum, default_value_t = OrientationArg::H)]
    pub orientation: OrientationArg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Claims,
    Cauchy,
    Qcauchy,
    AsymCauchy,
    SchenstedCount,
    Properties,
}

/// Suites run only for the parameters given; a suite without `--r` (or
/// without `--w` for claims) has no checks and passes.
#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
    /// Word of 0 and 1 for the placement claims.
    #[arg(long)]
    pub w: Option<String>,
    /// Ribbon length; for `properties` every length up to it.
    #[arg(long)]
    pub r: Option<usize>,
    /// Truncation degree in X for the placement claims.
    #[arg(long, default_value_t = 4)]
    pub bound: u32,
    /// Truncation degree of the identities.
    #[arg(long, default_value_t = 3)]
    pub deg: u32,
    /// Number of X variables.
    #[arg(long, default_value_t = 2)]
    pub nx: usize,
    /// Number of Y variables.
    #[arg(long, default_value_t = 2)]
    pub ny: usize,
    /// Core as comma-separated parts; empty for the empty core.
    #[arg(long, default_value = "")]
    pub core: String,
    /// Largest shape size of the commutation check.
    #[arg(long, default_value_t = 6)]
    pub max_size: usize,
    /// Largest permutation size of the Schensted counts.
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    /// Box of the property suite.
    #[arg(long, default_value_t = 4)]
    pub rows: usize,
    #[arg(long, default_value_t = 4)]
    pub cols: usize,
    /// Largest rank of a tried in the insertion direction.
    #[arg(long, default_value_t = 2)]
    pub max_rank: u64,
    /// Worker threads; reports are merged in a fixed order.
    #[arg(long)]
    pub jobs: Option<usize>,
}

/// Why a command did not succeed.
#[derive(Debug)]
pub enum Failure {
    /// Exit status 2.
    Malformed(String),
    /// Exit status 1.
    Rejected(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidPartition(_)
            | Error::FillMismatch { .. }
            | Error::ChargeMismatch(_)
            | Error::Divergent
            | Error::InvalidInput(_)
            | Error::MissingBound => Failure::Malformed(e.to_string()),
            _ => Failure::Rejected(e.to_string()),
        }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Malformed(format!("invalid JSON input: {e}"))
    }
}

/// Result of a command: the JSON to print and whether it counts as a pass.
pub type Outcome = Result<(Value, bool), Failure>;

fn read_stdin() -> Result<String, Failure> {
    let mut s = String::new();
    std::io::stdin()
        .read_to_string(&mut s)
        .map_err(|e| Failure::Malformed(format!("cannot read stdin: {e}")))?;
    Ok(s)
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Convert(a) => commands::convert(&a, &read_stdin()?),
        Command::Datum(a) => commands::datum(&a, &read_stdin()?),
        Command::Grow(a) => commands::grow(&a, &read_stdin()?),
        Command::Shrink(a) => commands::shrink(&a, &read_stdin()?),
        Command::Strip(a) => commands::strip(&a, &read_stdin()?),
        Command::Verify(a) => commands::verify(&a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (value, code) = match run(cli) {
        Ok((v, true)) => (v, 0),
        Ok((v, false)) => (v, 1),
        Err(Failure::Rejected(msg)) => (json!({ "ok": false, "error": msg }), 1),
        Err(Failure::Malformed(msg)) => (json!({ "ok": false, "error": msg }), 2),
    };
    let text = serde_json::to_string_pretty(&value).expect("JSON values always serialise");
    // A closed pipe downstream is not an error of this command.
    let _ = writeln!(std::io::stdout().lock(), "{text}");
    ExitCode::from(code)
}
