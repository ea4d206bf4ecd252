//! `cdindex`: compute cd-indices and `β`/`γ` values, run the verification
//! suites and scans, and cross-check against explicit posets.

mod commands;
mod config;
mod error;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::config::{Config, CACHE_ENV};
use crate::error::CliError;

#[derive(Parser, Debug)]
#[command(name = "cdindex", version, about = "Exact cd-index computations")]
struct Cli {
    /// Worker threads for scans (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// key = value config file (max_rank, oracle caps, cache_dir).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the cd-index of a Boolean or cubical lattice, or the ab-index
    /// of the subspace lattice.
    Index {
        family: FamilyArg,
        #[arg(long)]
        rank: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Ghat)]
        method: MethodArg,
        #[arg(long)]
        json: bool,
    },
    /// Coefficient of a monomial in the Boolean cd-index.
    Beta { monomial: String },
    /// Coefficient of a monomial in the cubical cd-index.
    Gamma { monomial: String },
    /// Run theorem-backed invariant suites.
    Verify {
        /// Omit to run every suite.
        #[arg(long, value_enum)]
        suite: Option<SuiteArg>,
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
        #[arg(long)]
        json: bool,
    },
    /// Run an identity, inequality or conjecture scan.
    Scan {
        #[command(flatten)]
        scan: ScanArgs,
        #[arg(long)]
        json: bool,
        /// Also write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Flag vectors and Eulerian checks on an explicit poset.
    Oracle {
        /// boolean, cube, or file:PATH.
        #[arg(long)]
        poset: String,
        #[arg(long)]
        rank: Option<usize>,
        /// Compare with the algebraic index.
        #[arg(long)]
        compare: bool,
    },
    /// Write a monomial in terms of the generators 1, d, d², … under the
    /// bullet product.
    Decompose {
        monomial: String,
        #[arg(long)]
        json: bool,
    },
    /// Write a table or a scan report to a file.
    Export {
        #[arg(long, value_enum)]
        what: ExportWhat,
        #[arg(long, value_enum, default_value_t = ExportFormat::Json)]
        format: ExportFormat,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = FamilyArg::Boolean)]
        family: FamilyArg,
        #[arg(long = "scan", value_enum)]
        scan_kind: Option<ScanKind>,
        #[command(flatten)]
        params: ScanParams,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Boolean,
    Cubical,
    Subspace,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Ghat,
    Purtill,
    Phi,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Core,
    Coalgebra,
    Dual,
    Lattice,
    Oracle,
    Cubical,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ScanKind {
    Identities,
    Inequalities,
    Unimodal,
    Maxima,
    Balance,
    Divisibility,
    Products,
    Cubical,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExportWhat {
    Table,
    Report,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExportFormat {
    Json,
    Csv,
}

#[derive(Args, Debug, Clone)]
pub struct ScanArgs {
    #[arg(value_enum)]
    pub kind: ScanKind,
    #[command(flatten)]
    pub params: ScanParams,
}

#[derive(Args, Debug, Clone)]
pub struct ScanParams {
    #[arg(long, default_value_t = 12)]
    pub max_degree: usize,
    /// Lowest degree for the maxima scan.
    #[arg(long, default_value_t = 2)]
    pub min_degree: usize,
    /// Rank for the divisibility scan (default 13) or the exported table.
    #[arg(long)]
    pub rank: Option<usize>,
    #[arg(long, default_value_t = 1001)]
    pub modulus: u64,
    /// With `--j` and `--l`, scan the one family (i,…,i,j,i,…,i) of length l.
    #[arg(long)]
    pub i: Option<usize>,
    #[arg(long)]
    pub j: Option<usize>,
    #[arg(long)]
    pub l: Option<usize>,
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    if let Some(k) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build_global()
            .map_err(|e| CliError::Usage(format!("--jobs: {e}")))?;
    }
    let cfg = Config::load(cli.config.as_deref(), std::env::var(CACHE_ENV).ok())?;
    commands::load_cache(&cfg)?;
    match cli.command {
        Command::Index { family, rank, method, json } => {
            commands::index(&cfg, out, family, rank, method, json)
        }
        Command::Beta { monomial } => commands::coefficient(&cfg, out, &monomial, false),
        Command::Gamma { monomial } => commands::coefficient(&cfg, out, &monomial, true),
        Command::Verify { suite, max_degree, json } => commands::verify(out, suite, max_degree, json),
        Command::Scan { scan, json, out: path } => commands::scan(out, &scan, json, path.as_deref()),
        Command::Oracle { poset, rank, compare } => commands::oracle(&cfg, out, &poset, rank, compare),
        Command::Decompose { monomial, json } => commands::decompose(out, &monomial, json),
        Command::Export { what, format, out: path, family, scan_kind, params } => {
            commands::export(&cfg, what, format, &path, family, scan_kind, &params)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match run(cli, &mut lock) {
        Ok(()) => ExitCode::SUCCESS,
        // A closed pipe (e.g. `| head`) is not an error.
        Err(CliError::Io { source, .. }) if source.kind() == std::io::ErrorKind::BrokenPipe => {
            ExitCode::SUCCESS
        }
        Err(e) => {
            let _ = lock.flush();
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
