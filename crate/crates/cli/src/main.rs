//! `cyclo`: coefficients of cyclotomic polynomials and their inverses,
//! their value sets, densities and averages.
//!
//! Exit status: 0 on success, 1 when a verification fails (or a value is not
//! found below the scan ceiling), 2 on invalid input.

mod commands;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use cyclo_core::coeff::Sign;
use cyclo_core::Error;

use output::Format;

#[derive(Parser, Debug)]
#[command(name = "cyclo", version, about = "Exact statistics of cyclotomic coefficients")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// One coefficient a_n^eps(k), or the series up to a given order.
    Coeff(CoeffArgs),
    /// Regenerate one of the reference tables.
    Table(TableArgs),
    /// Run verification suites; exits 1 on any failure.
    Verify(VerifyArgs),
    /// Smallest k at which a value occurs as a coefficient.
    Kmin(KminArgs),
    /// Time the coefficient engines and the average routes.
    Bench(BenchArgs),
    /// The value set A(k) with its parity decomposition.
    Valueset(KArg),
    /// zeta(2)-scaled densities of every nonzero value at k.
    Density(KArg),
    /// The scaled averages e_k, f_k, g_k.
    Average(AverageArgs),
    /// Finite-range average and value frequency over n <= x.
    Empirical(EmpiricalArgs),
}

#[derive(Args, Debug)]
pub struct CoeffArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long, default_value_t = 0)]
    pub k: u64,
    /// Sign: 1 for the polynomial, -1 for the inverse series.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub eps: Sign,
    /// naive, gt, partition, or all.
    #[arg(long, default_value = "gt")]
    pub engine: String,
    /// Print a_n^eps(0..=K) instead of a single coefficient.
    #[arg(long, value_name = "K")]
    pub series: Option<u64>,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=6))]
    pub id: u8,
    /// Largest k to include (defaults to the table's own range).
    #[arg(long)]
    pub kmax: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    All,
    Identities,
    Engines,
    Tables,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub suite: Suite,
    /// Largest k for the identity suite and the engine suite.
    #[arg(long)]
    pub kmax: Option<u64>,
    /// Largest n for the engine suite.
    #[arg(long, default_value_t = 1000)]
    pub nmax: u64,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct KminTarget {
    #[arg(long, allow_hyphen_values = true)]
    pub v: Option<i64>,
    #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_hyphen_values = true)]
    pub range: Option<Vec<i64>>,
}

#[derive(Args, Debug)]
pub struct KminArgs {
    #[command(flatten)]
    pub target: KminTarget,
    #[arg(long, default_value_t = cyclo_core::stats::DEFAULT_KMIN_CEILING)]
    pub ceiling: u64,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    #[arg(long)]
    pub k: u64,
    /// Comma-separated coefficient engines and average routes
    /// (naive, gt, partition-engine, divisor, partition, odd_partition,
    /// corvier, prime); defaults to every route that applies to k.
    #[arg(long, value_delimiter = ',')]
    pub engine: Vec<String>,
    #[arg(long, default_value_t = 3)]
    pub repeat: u32,
    /// Coefficient engines are timed over n = 1..=nmax.
    #[arg(long, default_value_t = 1000)]
    pub nmax: u64,
}

#[derive(Args, Debug)]
pub struct KArg {
    #[arg(long)]
    pub k: u64,
}

#[derive(Args, Debug)]
pub struct AverageArgs {
    #[arg(long)]
    pub k: u64,
    /// Compute e_k through this route only.
    #[arg(long)]
    pub route: Option<String>,
}

#[derive(Args, Debug)]
pub struct EmpiricalArgs {
    #[arg(long)]
    pub k: u64,
    #[arg(long)]
    pub x: u64,
    #[arg(long, allow_hyphen_values = true)]
    pub v: Option<i64>,
}

/// A command failure with its exit status.
pub enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ZeroArgument
            | Error::InvalidArgument(_)
            | Error::RouteMismatch { .. }
            | Error::ParseRational(_) => Failure::Usage(e.to_string()),
            other => Failure::Internal(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Coeff(a) => commands::coeff(&a),
        Command::Table(a) => commands::table(&a),
        Command::Verify(a) => commands::verify(&a),
        Command::Kmin(a) => commands::kmin(&a),
        Command::Bench(a) => commands::bench(&a),
        Command::Valueset(a) => commands::valueset(a.k),
        Command::Density(a) => commands::density(a.k),
        Command::Average(a) => commands::average(&a),
        Command::Empirical(a) => commands::empirical(&a),
    };
    match result {
        Ok((report, ok)) => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            match report.write(cli.format, &mut lock).and_then(|_| lock.flush()) {
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => {}
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(1);
                }
                Ok(()) => {}
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
