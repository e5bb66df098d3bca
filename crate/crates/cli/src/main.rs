//! `awspec`: exact Laplace spectra of W^{1,1} from the command line.
//!
//! Exit codes: 0 success, 1 invariant failure, 2 usage or domain error.

#![allow(clippy::result_large_err)]

mod checks;
mod commands;
mod output;

use std::io::{self, Write};
use std::process::ExitCode;

use awspec_core::{parse_rational, Rational};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::checks::Suite;
use crate::output::{Format, Style};

pub const EXIT_INVARIANT: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// Environment variable capping the oracle depth (default 40).
pub const DEPTH_ENV: &str = "AWSPEC_ORACLE_MAX_DEPTH";

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

#[derive(Debug, Parser)]
#[command(
    name = "awspec",
    version,
    about = "Exact Laplace spectra of the Aloff-Wallach space W^{1,1}"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "csv")]
    format: Format,

    /// Render rationals as decimals with this many digits instead of p/q.
    #[arg(long, global = true)]
    decimals: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Spherical triples in lexicographic order with (h, v) and multiplicity.
    Table(TableArgs),
    /// Merged spectrum of g(t0,t1).
    Spectrum(SpectrumArgs),
    /// First nonzero eigenvalue, realizing triples and curvature regime.
    First(FirstArgs),
    /// Eigenvalue branches along a family of metrics.
    Curves(CurvesArgs),
    /// Run an invariant suite.
    Check(CheckArgs),
    /// Convert between (t0,t1), (r0,r1) and (alpha,delta).
    Convert(ConvertArgs),
    /// Sp(2)xSp(1) -> Sp(1)' branching multiplicities.
    Sp2(Sp2Args),
    /// Lower bound for the first basic eigenvalue of a 3-(alpha,delta)-Sasaki family.
    Bound(BoundArgs),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct TableSize {
    /// Number of triples to list.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    first: Option<u64>,
    /// List every triple with z1 <= ZMAX.
    #[arg(long)]
    zmax: Option<u32>,
}

#[derive(Debug, Args)]
struct TableArgs {
    #[command(flatten)]
    size: TableSize,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct SpectrumRange {
    /// Every eigenvalue <= BOUND.
    #[arg(long, value_parser = rational_arg)]
    bound: Option<Rational>,
    /// The first N distinct eigenvalues, starting at 0.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    first: Option<u64>,
}

#[derive(Debug, Args)]
struct SpectrumArgs {
    #[arg(long, value_parser = rational_arg)]
    t0: Rational,
    #[arg(long, value_parser = rational_arg)]
    t1: Rational,
    #[command(flatten)]
    range: SpectrumRange,
}

#[derive(Debug, Args)]
struct FirstArgs {
    #[arg(long, value_parser = rational_arg, requires = "t1", conflicts_with_all = ["alpha", "delta", "r0", "r1"])]
    t0: Option<Rational>,
    #[arg(long, value_parser = rational_arg, requires = "t0")]
    t1: Option<Rational>,
    #[arg(long, value_parser = rational_arg, requires = "delta", conflicts_with_all = ["t0", "t1", "r0", "r1"])]
    alpha: Option<Rational>,
    #[arg(long, value_parser = rational_arg, requires = "alpha")]
    delta: Option<Rational>,
    #[arg(long, value_parser = rational_arg, requires = "r1", conflicts_with_all = ["t0", "t1", "alpha", "delta"])]
    r0: Option<Rational>,
    #[arg(long, value_parser = rational_arg, requires = "r0", allow_hyphen_values = true)]
    r1: Option<Rational>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CurveMode {
    Raw,
    #[value(name = "constant_volume", alias = "constant-volume")]
    ConstantVolume,
    Estimates,
}

#[derive(Debug, Args)]
struct CurvesArgs {
    /// Fixed t0 (raw and estimates modes) or reference scale (constant_volume).
    #[arg(long, value_parser = rational_arg, default_value = "1/2")]
    t0: Rational,
    /// Sampled t1 interval [A, B] (raw and estimates modes).
    #[arg(long, num_args = 2, value_names = ["A", "B"], value_parser = rational_arg)]
    t1_range: Option<Vec<Rational>>,
    /// Sampled s interval for constant_volume: t1 = s^4, t0 = T0 * s^-3.
    #[arg(long, num_args = 2, value_names = ["A", "B"], value_parser = rational_arg)]
    s_range: Option<Vec<Rational>>,
    /// Number of equally spaced samples (>= 2).
    #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u64).range(2..))]
    samples: u64,
    #[arg(long, value_enum, default_value = "raw")]
    mode: CurveMode,
    /// Number of branches: the first K nontrivial spherical triples.
    #[arg(long, default_value_t = 12)]
    branches: usize,
    /// Dimension parameter n of the estimates.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(i64).range(1..))]
    n: i64,
}

#[derive(Debug, Args)]
struct CheckArgs {
    #[arg(long, value_enum, default_value = "all")]
    suite: Suite,
    /// Maximal z1 (oracle) or n (sp2).
    #[arg(long)]
    depth: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ParamKind {
    T,
    R,
    Sasaki,
}

#[derive(Debug, Args)]
struct ConvertArgs {
    #[arg(long, value_enum)]
    from: ParamKind,
    #[arg(long, value_enum)]
    to: ParamKind,
    #[arg(value_parser = rational_arg, allow_hyphen_values = true)]
    first: Rational,
    #[arg(value_parser = rational_arg, allow_hyphen_values = true)]
    second: Rational,
}

#[derive(Debug, Args)]
struct Sp2Args {
    /// List every (n1,n2,n3) with all entries <= MAX.
    #[arg(long, default_value_t = 4)]
    max: u32,
    /// Only list spherical triples.
    #[arg(long)]
    spherical_only: bool,
}

#[derive(Debug, Args)]
struct BoundArgs {
    /// su-so-even, so-odd-sp, e6, e7, e8, f4 or g2.
    #[arg(long)]
    family: String,
    #[arg(long, default_value_t = 1)]
    n: i64,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    alpha: Rational,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    delta: Rational,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let style = Style {
        format: cli.format,
        decimals: cli.decimals,
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = commands::dispatch(cli.command, style, &mut out);
    let _ = out.flush();
    match result {
        Ok(code) => ExitCode::from(code),
        // downstream closed the pipe (e.g. `| head`): not an error
        Err(commands::CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => {
            ExitCode::SUCCESS
        }
        Err(e) => {
            commands::report_error(&e, style);
            ExitCode::from(EXIT_USAGE)
        }
    }
}
