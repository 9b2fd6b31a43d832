//! The `ncq` command-line front end.

pub mod commands;
pub mod input;
pub mod report;

use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::Error;
pub use report::{Check, RunReport, Status};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "ncq",
    version,
    about = "Exact checks for noncommutative quadrics and planes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for random draws; without an input file, draws a geometric quintuple.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Prime field to work over; reduces rational input files.
    #[arg(long, global = true)]
    pub field: Option<u32>,
    /// Degree cutoff (profile length, resolution depth, Veronese length).
    #[arg(long, global = true)]
    pub cutoff: Option<usize>,
    /// Add wall-clock time to the report.
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimension table dim A_{i,i+n} against the expected profile.
    Dims {
        file: Option<PathBuf>,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        from: i64,
        #[arg(long)]
        to: Option<usize>,
    },
    /// Geometricity, linearity, profile, resolution and W-space checks for a quintuple.
    Classify { file: Option<PathBuf> },
    /// Determinant forms, points, regularity, factorization and chain kernel.
    Pointscheme {
        file: Option<PathBuf>,
        #[arg(long)]
        factor: bool,
        #[arg(long)]
        chains: bool,
    },
    /// Helix arithmetic: extend [N], translate N, periodicity {1|2|quad}, omega.
    Helix {
        file: PathBuf,
        #[arg(long, num_args = 1..=2, value_names = ["OP", "ARG"], allow_negative_numbers = true, default_values = ["extend"])]
        op: Vec<String>,
    },
    /// Exactness of the minimal resolution shape at every residue.
    Resolution { file: Option<PathBuf> },
    /// Veronese dimensions and generation in degree two.
    Veronese { file: Option<PathBuf> },
    /// Print a quintuple input file.
    Fixture {
        #[arg(value_enum)]
        family: Family,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Linear,
    Geometric,
    Degenerate,
    /// Degenerate family with integer coefficients over the rationals.
    DegenerateRational,
}

/// Output text and exit code of one invocation.
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Input(_) | Error::Json(_) | Error::Io(_) => EXIT_INPUT,
        Error::Resource(_) => EXIT_RESOURCE,
        Error::Degenerate(_) | Error::Precondition(_) | Error::NotPeriodic(_) => EXIT_FAIL,
    }
}

pub fn execute(cli: &Cli) -> Outcome {
    let start = Instant::now();
    match commands::dispatch(cli) {
        Ok(commands::Output::Report(mut r)) => {
            if cli.timing {
                r.timing_ms = Some(start.elapsed().as_millis());
            }
            let code = if r.passed() { EXIT_PASS } else { EXIT_FAIL };
            let stdout = if cli.json {
                r.to_json() + "\n"
            } else {
                r.to_text()
            };
            Outcome {
                stdout,
                stderr: String::new(),
                code,
            }
        }
        Ok(commands::Output::Text(t)) => Outcome {
            stdout: t,
            stderr: String::new(),
            code: EXIT_PASS,
        },
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("ncq: {e}\n"),
            code: exit_code(&e),
        },
    }
}

/// Parses arguments, runs, prints, and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                EXIT_INPUT
            } else {
                EXIT_PASS
            };
        }
    };
    let out = execute(&cli);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}
