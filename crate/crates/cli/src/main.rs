//! `cyclepat`: counts, generating functions, verification suites, bijection
//! traces and arc diagrams for pattern-avoiding permutations with restricted
//! cycle lengths.

mod commands;
mod render;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cyclepat::enumerate::CycleSet;
use cyclepat::lattice::{Composition, DyckWord, MotzkinPath};
use cyclepat::perm::Permutation;
use cyclepat::verify::Suite;

#[derive(Parser)]
#[command(name = "cyclepat", version, about = "Pattern avoidance among permutations with restricted cycle lengths")]
struct Cli {
    /// Worker threads for oracle runs; results do not depend on it.
    #[arg(long, global = true, env = "CYCLEPAT_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Markdown,
    Svg,
    Ascii,
}

#[derive(Subcommand)]
enum Command {
    /// Count avoiders of a pattern with cycle lengths in a set.
    Count(CountArgs),
    /// Count avoiders by number of 1-, 2- and 3-cycles.
    Census(CountArgs),
    /// Expand a named generating function.
    Gf(GfArgs),
    /// Run a verification suite; exits 1 on any mismatch.
    Verify(VerifyArgs),
    /// Trace a Dyck word through reduction to a Motzkin path and back.
    Bijection(BijectionArgs),
    /// Draw the arc diagram of a permutation.
    Render(RenderArgs),
    /// Estimate growth as (a_{n+3}/a_n)^(1/3).
    Growth(GrowthArgs),
}

#[derive(Args)]
pub struct CountArgs {
    #[arg(long)]
    pub n: usize,
    /// Allowed cycle lengths, e.g. 1,2,3.
    #[arg(long)]
    pub cycles: CycleSet,
    #[arg(long)]
    pub pattern: Permutation,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Args)]
pub struct GfArgs {
    /// One of the catalogue names, e.g. a13_132 or a231 (with --cycles).
    #[arg(long)]
    pub name: String,
    #[arg(long)]
    pub cycles: Option<CycleSet>,
    /// Highest power kept (weighted degree for trivariate functions).
    #[arg(long, default_value_t = 12)]
    pub order: usize,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Args)]
pub struct VerifyArgs {
    #[arg(long, default_value = "all")]
    pub suite: Suite,
    #[arg(long, default_value_t = 10)]
    pub n_max: usize,
    #[arg(long, default_value_t = 8)]
    pub m_max: usize,
    /// Extend the oracle to n = 12 and the lemma sweeps by one size.
    #[arg(long)]
    pub deep: bool,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Args)]
pub struct BijectionArgs {
    /// A Dyck word over 0/1.
    #[arg(long, conflicts_with_all = ["path", "composition"])]
    pub word: Option<DyckWord>,
    /// A Motzkin path over u/d/f, decoded with --composition.
    #[arg(long, requires = "composition", allow_hyphen_values = true)]
    pub path: Option<MotzkinPath>,
    #[arg(long, requires = "path")]
    pub composition: Option<Composition>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Args)]
pub struct RenderArgs {
    /// One-line or cycle notation.
    pub permutation: Permutation,
    #[arg(long, value_enum, default_value = "svg")]
    pub format: Format,
}

#[derive(Args)]
pub struct GrowthArgs {
    #[arg(long, default_value = "a13_132")]
    pub name: String,
    #[arg(long)]
    pub cycles: Option<CycleSet>,
    #[arg(long, default_value_t = 300)]
    pub n: usize,
    /// Truncation order; defaults to n + 10.
    #[arg(long)]
    pub order: Option<usize>,
    /// Exit 1 unless the estimate lies in LO,HI.
    #[arg(long, value_parser = commands::parse_band)]
    pub band: Option<commands::Band>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

/// Why a command did not succeed.
pub enum Failure {
    /// Bad input: exit 2.
    Usage(String),
    /// A check or computation disagreed: exit 1.
    Mismatch(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(k) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(k).build_global() {
            eprintln!("cyclepat: {e}");
            return ExitCode::from(2);
        }
    }
    let result = match cli.command {
        Command::Count(args) => commands::count(&args),
        Command::Census(args) => commands::census(&args),
        Command::Gf(args) => commands::gf(&args),
        Command::Verify(args) => commands::verify(&args),
        Command::Bijection(args) => commands::bijection(&args),
        Command::Render(args) => commands::render(&args),
        Command::Growth(args) => commands::growth(&args),
    };
    match result {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Mismatch(text)) => {
            print!("{text}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("cyclepat: {msg}");
            ExitCode::from(2)
        }
    }
}
