//! `fcgf`: series expansion, heap enumeration, table reproduction and the
//! verification suite.
//!
//! Exit codes: 0 success, 1 check failure, 2 usage error, 3 resource bound
//! exceeded or checks skipped, 4 inconclusive.

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use fcgf_core::catalog::{AuxName, FamilyType, Fault, SpecialName};
use fcgf_core::oracle::Column;
use fcgf_core::verify::{CheckId, Suite, TableId};

#[derive(Parser)]
#[command(name = "fcgf", version, about = "Length generating functions of fully commutative elements")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, env = "FCGF_FORMAT", default_value_t = Format::Text)]
    format: Format,

    /// Run everything on one thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Expand coefficients of a generating function or named series.
    Series(SeriesArgs),
    /// Count heaps by brute force.
    Oracle(OracleArgs),
    /// Run verification checks.
    Verify(VerifyArgs),
    /// Reproduce a printed table from the closed forms.
    Table(TableArgs),
}

#[derive(Args)]
#[command(group(ArgGroup::new("series").required(true).args(["family", "special", "aux"])))]
pub struct SeriesArgs {
    /// Coxeter type: A, B, D, Atilde, Btilde, Ctilde, Dtilde.
    #[arg(long)]
    pub family: Option<FamilyType>,
    /// Count only involutions.
    #[arg(long, conflicts_with = "all")]
    pub inv: bool,
    /// Count all fully commutative elements (the default).
    #[arg(long)]
    pub all: bool,
    #[arg(long)]
    pub special: Option<SpecialName>,
    #[arg(long)]
    pub aux: Option<AuxName>,
    /// x-degree or inclusive range `lo..hi`.
    #[arg(long, visible_alias = "xdeg", value_parser = parse_degrees)]
    pub n: (usize, usize),
    #[arg(long, default_value_t = 40)]
    pub qmax: i64,
    /// Lowest q-exponent kept during the computation.
    #[arg(long, allow_hyphen_values = true)]
    pub qmin: Option<i64>,
}

#[derive(Args)]
#[command(group(ArgGroup::new("what").required(true).args(["family", "alternating"])))]
pub struct OracleArgs {
    /// Coxeter type; the graph is the one counted by the coefficient of `x^n`.
    #[arg(long)]
    pub family: Option<FamilyType>,
    /// Alternating heaps over a path or a cycle of `n` points.
    #[arg(long, value_enum)]
    pub alternating: Option<ShapeKind>,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub lmax: usize,
    /// Count only involutions (self-dual heaps).
    #[arg(long, visible_alias = "self-dual")]
    pub involutions: bool,
    /// Constraint on the first column of a path.
    #[arg(long, default_value = "any")]
    pub first: Column,
    /// Constraint on the last column of a path.
    #[arg(long, default_value = "any")]
    pub last: Column,
    /// Keep only heaps using every generator.
    #[arg(long)]
    pub full_support: bool,
    /// Run beyond the desk-scale bound.
    #[arg(long)]
    pub force: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ShapeKind {
    Path,
    Cycle,
}

#[derive(Args)]
pub struct VerifyArgs {
    /// identities, agreements, oracle, q1, periodicity, tables or all.
    #[arg(long, default_value = "all")]
    pub suite: Suite,
    /// Run only these checks, e.g. I16, X:Btilde:4, P:L:3, Q1:catalan:5.
    #[arg(long = "check")]
    pub checks: Vec<CheckId>,
    /// Negate one affine table coefficient, e.g. R3B or R2D-inv:3.
    #[arg(long)]
    pub inject_fault: Option<Fault>,
    #[arg(long)]
    pub xorder: Option<usize>,
    #[arg(long)]
    pub qmax: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub qmin: Option<i64>,
    #[arg(long)]
    pub max_generators: Option<usize>,
    #[arg(long)]
    pub lmax: Option<usize>,
    /// Also write the JSON report to this file.
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Args)]
pub struct TableArgs {
    /// finite, finite-inv, affine or affine-inv.
    pub which: TableId,
}

fn parse_degrees(s: &str) -> Result<(usize, usize), String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("bad degree '{t}': {e}"));
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (num(lo)?, num(hi.trim_start_matches('='))?),
        None => (num(s)?, num(s)?),
    };
    if lo > hi {
        return Err(format!("empty degree range {s}"));
    }
    Ok((lo, hi))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.sequential {
        fcgf_core::exec::set_exec(fcgf_core::exec::Exec::Sequential);
    }
    let out = match &cli.command {
        Command::Series(a) => commands::series(a, cli.format),
        Command::Oracle(a) => commands::oracle(a, cli.format),
        Command::Verify(a) => commands::verify(a, cli.format),
        Command::Table(a) => commands::table(a, cli.format),
    };
    match out {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("fcgf: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
