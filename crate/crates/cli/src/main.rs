//! `padic`: build and analyse automata for algebraic series and rational
//! diagonals modulo prime powers.
//!
//! Exit codes: 0 success, 1 parse or usage error, 2 invalid curve or input
//! hypothesis, 3 budget exceeded, 4 a check failed.

mod check;
mod commands;
mod input;
mod report;

use clap::{Args, Parser, Subcommand, ValueEnum};
use padic_automata::analysis::DEFAULT_ORBIT_BUDGET;
use padic_automata::automaton::DEFAULT_STATE_BUDGET;
use padic_automata::numeration::DEFAULT_MONOMIAL_BUDGET;
use padic_automata::oracle::DEFAULT_LATTICE_BUDGET;
use padic_automata::Error;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error("{0} check(s) failed")]
    CheckFailed(usize),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => 1,
            CliError::CheckFailed(_) => 4,
            CliError::Core(e) => match e {
                Error::BudgetExceeded { .. } => 3,
                Error::InvalidCurve(_)
                | Error::InvalidDenominator(_)
                | Error::Hypothesis(_)
                | Error::Precondition(_)
                | Error::ZeroPolynomial
                | Error::NotRepresentable
                | Error::NonUnit { .. } => 2,
                _ => 1,
            },
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Parser)]
#[command(
    name = "padic",
    version,
    about = "Automata for algebraic series modulo prime powers"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: Global,
}

#[derive(Args, Clone)]
pub struct Global {
    /// Emit a JSON report; every number is a decimal string.
    #[arg(long, global = true)]
    pub json: bool,
    /// Omit the timestamp and timing fields from JSON reports.
    #[arg(long, global = true)]
    pub deterministic: bool,
    /// Worker threads for automaton construction (default: available parallelism).
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    #[arg(long, global = true, env = "PADIC_STATE_BUDGET", default_value_t = DEFAULT_STATE_BUDGET)]
    pub state_budget: usize,
    #[arg(long, global = true, env = "PADIC_MONOMIAL_BUDGET", default_value_t = DEFAULT_MONOMIAL_BUDGET)]
    pub monomial_budget: u64,
    #[arg(long, global = true, env = "PADIC_ORBIT_BUDGET", default_value_t = DEFAULT_ORBIT_BUDGET)]
    pub orbit_budget: usize,
    #[arg(long, global = true, env = "PADIC_LATTICE_BUDGET", default_value_t = DEFAULT_LATTICE_BUDGET)]
    pub lattice_budget: u64,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Algebraic,
    Diagonal,
    Multivariate,
}

#[derive(Args, Clone)]
pub struct Ring {
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub alpha: u32,
}

/// A curve `P(x, y)` or a rational function `num / den`.
#[derive(Args, Clone)]
pub struct Source {
    #[arg(long, value_enum, default_value_t = Mode::Algebraic)]
    pub mode: Mode,
    /// The curve P(x, y), for algebraic mode.
    #[arg(long, allow_hyphen_values = true)]
    pub poly: Option<String>,
    /// Numerator, for diagonal modes.
    #[arg(long, allow_hyphen_values = true)]
    pub num: Option<String>,
    /// Denominator, for diagonal modes.
    #[arg(long, allow_hyphen_values = true)]
    pub den: Option<String>,
    /// Number of variables of num/den; inferred from the variable names when absent.
    #[arg(long)]
    pub nvars: Option<usize>,
    #[command(flatten)]
    pub ring: Ring,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
}

#[derive(Subcommand)]
pub enum Command {
    /// Build an automaton and report its size and bounds.
    Build {
        #[command(flatten)]
        source: Source,
        /// Write the automaton as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write a Graphviz rendering.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Write the minimized automaton instead of the full one.
        #[arg(long)]
        minimize: bool,
        /// Use expanded polynomial states for bivariate diagonals.
        #[arg(long)]
        direct: bool,
        /// Minimize with Hopcroft's algorithm instead of Moore's.
        #[arg(long)]
        hopcroft: bool,
    },
    /// Minimize a stored automaton.
    Minimize {
        #[arg(long)]
        automaton: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        hopcroft: bool,
    },
    /// Evaluate a stored automaton at one or more indices.
    Eval {
        #[arg(long)]
        automaton: PathBuf,
        #[arg(long, required = true)]
        n: Vec<u128>,
    },
    /// Convert a stored automaton to another format.
    Export {
        #[arg(long)]
        automaton: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Orbit of the initial state under lambda_{0,0}, or of S under the univariate lambda_0.
    Orbit {
        #[arg(long, allow_hyphen_values = true)]
        poly: Option<String>,
        /// Univariate R in z (with --s).
        #[arg(long = "R", allow_hyphen_values = true)]
        r: Option<String>,
        /// Univariate starting polynomial S in z.
        #[arg(long = "S", allow_hyphen_values = true)]
        s: Option<String>,
        #[command(flatten)]
        ring: Ring,
    },
    /// Period of 1/R mod p and of 1/R^(p^(alpha-1)) mod p^alpha.
    Period {
        #[arg(long = "R", allow_hyphen_values = true)]
        r: String,
        #[command(flatten)]
        ring: Ring,
    },
    /// Closed-form size bounds.
    Bounds {
        #[command(flatten)]
        source: Source,
    },
    /// Residues attained, and attained infinitely often.
    Stats {
        #[arg(long, conflicts_with_all = ["poly", "num", "den"])]
        automaton: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        poly: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        num: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        den: Option<String>,
        #[arg(long)]
        nvars: Option<usize>,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        alpha: Option<u32>,
    },
    /// Cross-validate an automaton against independent computations.
    Check {
        #[command(flatten)]
        source: Source,
        /// Sequence terms compared with the oracle (default 2000; 100 for three or more variables).
        #[arg(long)]
        terms: Option<usize>,
        /// Random words for the precision compatibility check.
        #[arg(long, default_value_t = 200)]
        words: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        /// Validate this stored automaton instead of building one.
        #[arg(long)]
        automaton: Option<PathBuf>,
    },
    /// Brute-force sequence computations.
    Oracle {
        #[command(subcommand)]
        which: OracleCommand,
    },
    /// Factor a univariate polynomial modulo p.
    Factor {
        #[arg(long = "R", allow_hyphen_values = true)]
        r: String,
        #[arg(long)]
        p: u64,
    },
}

#[derive(Subcommand)]
pub enum OracleCommand {
    /// Coefficients of the series root of P by Newton iteration.
    Series {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        ring: Ring,
    },
    /// Diagonal coefficients of num/den by full expansion.
    Diagonal {
        #[arg(long, allow_hyphen_values = true)]
        num: String,
        #[arg(long, allow_hyphen_values = true)]
        den: String,
        #[arg(long)]
        nvars: Option<usize>,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        ring: Ring,
    },
    /// Distinct prefixes among kernel subsequences a(p^e n + r), e <= e_max.
    Kernel {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, default_value_t = 6)]
        e_max: u32,
        #[arg(long, default_value_t = 64)]
        len: usize,
        #[command(flatten)]
        ring: Ring,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(w) = cli.global.workers {
        if w == 0 {
            eprintln!("error: --workers must be positive");
            return ExitCode::from(1);
        }
    }
    match commands::run(&cli) {
        Ok(report) => {
            print!(
                "{}",
                report.render(cli.global.json, cli.global.deterministic)
            );
            ExitCode::SUCCESS
        }
        Err((report, e)) => {
            if let Some(report) = report {
                print!(
                    "{}",
                    report.render(cli.global.json, cli.global.deterministic)
                );
            }
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
