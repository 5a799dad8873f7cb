use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "pardeg",
    version,
    about = "Degree of parabolic quantum groups at roots of unity"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Degree report for one type and Levi subset.
    Degree(DegreeArgs),
    /// One report per Levi subset.
    Table(TableArgs),
    /// Run the lemma oracles.
    Verify(VerifyArgs),
    /// Reduced word of w0 and its convex order.
    Roots(RootsArgs),
}

#[derive(Debug, Args)]
pub struct Common {
    /// Cartan type such as A3 or G2.
    #[arg(long = "type", value_name = "TYPE")]
    pub cartan_type: String,
    /// Word seed; omit for the deterministic smallest-ascent word.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Reading of the Levi roots: levi-internal or literal-paper.
    #[arg(long, default_value = "levi-internal")]
    pub convention: String,
    /// Write output to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DegreeArgs {
    #[command(flatten)]
    pub common: Common,
    /// Comma list of 1-based simple roots, `all` or `none`.
    #[arg(long, default_value = "none")]
    pub levi: String,
    #[arg(long)]
    pub l: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long)]
    pub l: u64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct RootsArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, default_value = "none")]
    pub levi: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// wdeco, kernel, kernel-vectors, torus, rank-invariance or all.
    #[arg(long)]
    pub suite: String,
    /// Required by every suite except torus.
    #[arg(long = "type", value_name = "TYPE")]
    pub cartan_type: Option<String>,
    /// Levi subset; every subset when omitted.
    #[arg(long)]
    pub levi: Option<String>,
    /// Modulus; defaults to 5 (3 for the torus suite alone).
    #[arg(long)]
    pub l: Option<u64>,
    /// Torus trials (default 20) or reduced words per subset (default 3).
    #[arg(long)]
    pub trials: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Largest Weyl group enumerated exhaustively by the wdeco suite.
    #[arg(long, env = "PARDEG_GUARD", default_value_t = pardeg_core::weyl::DEFAULT_GROUP_GUARD)]
    pub guard: u128,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}
