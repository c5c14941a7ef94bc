//! `qdetect` command line.
//!
//! Exit codes: 0 success, 1 statistical check failed, 2 usage or validation
//! error, 3 I/O error. Data goes to stdout (or `--out`), diagnostics to stderr
//! at the level set by `QDETECT_LOG`.

mod commands;
mod grid;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;

pub use grid::linspace;

pub const EXIT_OK: i32 = 0;
pub const EXIT_STAT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "qdetect",
    version,
    about = "Classical vs. quantum relevance detection"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report classical and quantum detection for one term and prior.
    #[command(allow_negative_numbers = true)]
    Detect {
        p1_m0: f64,
        p1_m1: f64,
        xi: f64,
        #[arg(long)]
        lambda: Option<f64>,
    },
    /// P_e and Q_e along a grid of priors, as CSV `xi,pe,qe,fidelity`.
    Sweep(SweepArgs),
    /// P_e and Q_e over priors and pseudo-relevance presence probabilities,
    /// as CSV `xi,p1_m0,pe,qe`.
    Surface(SurfaceArgs),
    /// Average relative frequency of the title terms per topic.
    Topics {
        #[command(flatten)]
        corpus: CorpusArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Monte Carlo run of one detection channel.
    Simulate(SimulateArgs),
    /// Distributive law on oblique and orthogonal subspaces.
    LatticeDemo {
        #[arg(long, value_enum, default_value_t = LatticeMode::Both)]
        mode: LatticeMode,
    },
}

#[derive(Debug, Args)]
pub struct CorpusArgs {
    #[arg(long)]
    pub docs: PathBuf,
    #[arg(long)]
    pub topics: PathBuf,
    #[arg(long)]
    pub qrels: PathBuf,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, default_value_t = 0.0)]
    pub xi_min: f64,
    #[arg(long, default_value_t = 1.0)]
    pub xi_max: f64,
    #[arg(long, default_value_t = 101)]
    pub steps: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Explicit model, with --p1-m1.
    #[arg(long, requires = "p1_m1")]
    pub p1_m0: Option<f64>,
    #[arg(long, requires = "p1_m0")]
    pub p1_m1: Option<f64>,
    /// Pseudo-relevance model: document frequency, with --pseudo-size.
    #[arg(long, requires = "pseudo_size")]
    pub pseudo_n: Option<u64>,
    #[arg(long, requires = "pseudo_n")]
    pub pseudo_size: Option<u64>,
    #[arg(long, requires_all = ["docs", "topics", "qrels"])]
    pub topic: Option<String>,
    /// One title term; without it the topic average is swept.
    #[arg(long, requires = "topic")]
    pub term: Option<String>,
    #[arg(long)]
    pub docs: Option<PathBuf>,
    #[arg(long)]
    pub topics: Option<PathBuf>,
    #[arg(long)]
    pub qrels: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SurfaceArgs {
    #[arg(long, default_value_t = 0.0)]
    pub xi_min: f64,
    #[arg(long, default_value_t = 1.0)]
    pub xi_max: f64,
    /// Points along the prior axis.
    #[arg(long, default_value_t = 101)]
    pub steps: usize,
    #[arg(long, default_value_t = 0.01)]
    pub p_min: f64,
    #[arg(long, default_value_t = 0.99)]
    pub p_max: f64,
    /// Points along the presence-probability axis.
    #[arg(long, default_value_t = 99)]
    pub p_steps: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Channel {
    Classical,
    Quantum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LatticeMode {
    Oblique,
    Orthogonal,
    Both,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct SimulateArgs {
    #[arg(long)]
    pub p1_m0: f64,
    #[arg(long)]
    pub p1_m1: f64,
    #[arg(long, default_value_t = 0.5)]
    pub xi: f64,
    #[arg(long, default_value_t = 1_000_000)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum)]
    pub channel: Channel,
    #[arg(long)]
    pub lambda: Option<f64>,
}

/// Failure of a command, with its exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Io { .. } => EXIT_IO,
            _ => EXIT_USAGE,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl CliError {
    pub(crate) fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    pub(crate) fn io(path: Option<&std::path::Path>, e: std::io::Error) -> Self {
        let message = match path {
            Some(p) => format!("{}: {e}", p.display()),
            None => e.to_string(),
        };
        CliError {
            code: EXIT_IO,
            message,
        }
    }
}

/// Runs a parsed command, writing data to `stdout`. Returns the exit code.
pub fn execute(cli: Cli, stdout: &mut dyn Write) -> Result<i32, CliError> {
    match cli.command {
        Command::Detect {
            p1_m0,
            p1_m1,
            xi,
            lambda,
        } => commands::detect(p1_m0, p1_m1, xi, lambda, stdout),
        Command::Sweep(args) => commands::sweep(&args, stdout),
        Command::Surface(args) => commands::surface(&args, stdout),
        Command::Topics { corpus, out } => commands::topics(&corpus, out.as_deref(), stdout),
        Command::Simulate(args) => commands::simulate(&args, stdout),
        Command::LatticeDemo { mode } => commands::lattice_demo(mode, stdout),
    }
}

/// Parses `args` and runs the command; usage errors and failures are printed
/// to stderr.
pub fn run<I, T>(args: I, stdout: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(cli, stdout) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("qdetect: {}", e.message);
            e.code
        }
    }
}

fn init_logging() {
    let env = env_logger::Env::new().filter_or("QDETECT_LOG", "warn");
    let _ = env_logger::Builder::from_env(env)
        .format_timestamp(None)
        .target(env_logger::Target::Stderr)
        .try_init();
}

/// Entry point of the binary.
pub fn main() -> i32 {
    init_logging();
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    let code = run(std::env::args_os(), &mut lock);
    if lock.flush().is_err() {
        return EXIT_IO;
    }
    code
}
