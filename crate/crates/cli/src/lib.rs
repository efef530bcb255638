//! The `quandle` command line: argument parsing and output formatting over
//! `quandle_core`. Nothing here computes anything about groups or graphs.

pub mod commands;
pub mod spec;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use quandle_core::dsl::DslError;
use quandle_core::graph::GraphError;
use quandle_core::group::GroupError;
use quandle_core::verify::VerifyError;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad arguments, spec strings, files or configs. Exit code 2.
    #[error("{0}")]
    Usage(String),
    /// The input parsed but is not what it claims to be, e.g. a raw table
    /// that is not a quandle. Exit code 1.
    #[error("{0}")]
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }
}

macro_rules! usage_from {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Usage(e.to_string())
            }
        }
    )*};
}

usage_from!(DslError, GroupError, GraphError, VerifyError);

#[derive(Debug, Parser)]
#[command(name = "quandle", version, about = "Build quandles, analyze their Cayley graphs, run the verification suite")]
pub struct Cli {
    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    pub json: bool,
    /// Reserved; every computation is deterministic.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a quandle, check the axioms and print it as JSON.
    Build(QuandleArgs),
    /// Report components, degrees, diameters and symmetry of the Cayley graph.
    Analyze {
        #[command(flatten)]
        quandle: QuandleArgs,
        /// Also emit the graph: dot, json or adjlist.
        #[arg(long)]
        export: Option<String>,
    },
    /// Print the Cayley graph.
    Export {
        #[command(flatten)]
        quandle: QuandleArgs,
        /// dot, json or adjlist.
        #[arg(long, default_value = "dot")]
        format: String,
    },
    /// Run the verification suite.
    Verify(VerifyArgs),
    /// Decide whether the Cayley graphs of two quandles are isomorphic.
    Isomorphic {
        /// Compact spec, e.g. `alexander(Z4xZ4; matrix:[[0,1],[3,2]])`.
        first: String,
        second: String,
    },
}

#[derive(Debug, Args)]
pub struct QuandleArgs {
    /// Compact spec such as `dihedral(4)` or `gen_alexander(S4; inner:(12))`;
    /// alternative to the flags below.
    pub spec: Option<String>,
    /// trivial | conj | core | dihedral | alexander | gen_alexander | raw
    #[arg(long)]
    pub family: Option<String>,
    /// Group spec, e.g. `Z4xZ4`, `D6`, `S4`.
    #[arg(long)]
    pub group: Option<String>,
    /// Automorphism spec, e.g. `inner:(12)` or `matrix:[[0,1],[3,2]]`.
    #[arg(long, visible_alias = "t")]
    pub phi: Option<String>,
    /// Order for trivial and dihedral quandles.
    #[arg(long)]
    pub n: Option<usize>,
    /// Quandle JSON file for the raw family.
    #[arg(long)]
    pub raw_path: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Suite config JSON; defaults apply to missing fields.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Only run these checks (repeatable or comma-separated).
    #[arg(long = "check", value_delimiter = ',')]
    pub checks: Vec<String>,
    /// Inclusive `a..b` range for the dihedral checks.
    #[arg(long)]
    pub range: Option<String>,
    /// Show per-report timings (output is then no longer reproducible).
    #[arg(long)]
    pub timings: bool,
}

/// Result of a successful command: what to print and the exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub exit_code: u8,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome { output, exit_code: 0 }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Build(q) => commands::build(q),
        Command::Analyze { quandle, export } => commands::analyze(quandle, export.as_deref(), cli.json),
        Command::Export { quandle, format } => commands::export(quandle, format),
        Command::Verify(args) => commands::verify(args, cli.json),
        Command::Isomorphic { first, second } => commands::isomorphic(first, second, cli.json),
    }
}
