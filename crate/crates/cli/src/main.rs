//! `f1`: zeta polynomials, point counts and K-theory of monoid schemes.

mod commands;
mod error;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::Context;
use error::CliError;
use report::Output;

#[derive(Parser)]
#[command(
    name = "f1",
    version,
    about = "Monoid schemes over F1: zeta polynomials, counts, K-theory"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Zeta polynomial, Euler characteristic, zeta function and points.
    Zeta {
        file: PathBuf,
        #[arg(long)]
        scheme: String,
        #[arg(long)]
        json: bool,
    },
    /// Point counts over F_q, with the brute-force count where feasible.
    Count {
        file: PathBuf,
        #[arg(long)]
        scheme: String,
        #[arg(long, value_delimiter = ',', required = true)]
        q: Vec<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Primes of a monoid and the unit groups of their stalks.
    Spec {
        file: PathBuf,
        #[arg(long)]
        monoid: String,
        #[arg(long)]
        json: bool,
    },
    /// GL_n orders, K+ groups and K0 of a finite monoid.
    K {
        file: PathBuf,
        #[arg(long)]
        monoid: String,
        #[arg(long = "k0-cap")]
        k0_cap: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Checks counts against N(q) and the oracle for prime powers q <= qmax.
    Verify {
        file: PathBuf,
        #[arg(long)]
        scheme: String,
        #[arg(long)]
        qmax: u64,
        #[arg(long)]
        json: bool,
    },
}

fn threads() -> Result<usize, CliError> {
    match std::env::var("F1_THREADS") {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(CliError::Usage(format!(
                "F1_THREADS must be a positive integer, got {v:?}"
            ))),
        },
        Err(_) => Ok(std::thread::available_parallelism().map_or(1, |n| n.get())),
    }
}

fn load(file: &PathBuf) -> Result<Context, CliError> {
    let text = std::fs::read_to_string(file).map_err(|source| CliError::Io {
        path: file.display().to_string(),
        source,
    })?;
    Ok(Context {
        doc: f1_core::load(&text)?,
        threads: threads()?,
    })
}

fn run(cli: Cli) -> Result<(Output, bool), CliError> {
    Ok(match cli.command {
        Command::Zeta { file, scheme, json } => (Output::Zeta(load(&file)?.zeta(&scheme)?), json),
        Command::Count { file, scheme, q, json } => (Output::Count(load(&file)?.count(&scheme, &q)?), json),
        Command::Spec { file, monoid, json } => (Output::Spec(load(&file)?.spec(&monoid)?), json),
        Command::K {
            file,
            monoid,
            k0_cap,
            json,
        } => (Output::K(load(&file)?.k(&monoid, k0_cap)?), json),
        Command::Verify {
            file,
            scheme,
            qmax,
            json,
        } => (Output::Verify(load(&file)?.verify(&scheme, qmax)?), json),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((output, json)) => {
            let text = if json {
                serde_json::to_string_pretty(&output).expect("reports serialize")
            } else {
                output.to_string()
            };
            let mut stdout = std::io::stdout().lock();
            if let Err(e) = writeln!(stdout, "{text}").and_then(|_| stdout.flush()) {
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    eprintln!("error: {e}");
                    return ExitCode::from(error::EXIT_IO);
                }
            }
            let failed = match &output {
                Output::Verify(r) => r.verification.as_ref().and_then(|v| {
                    if !v.failures.is_empty() {
                        Some(CliError::Verification)
                    } else if !v.unchecked.is_empty() {
                        Some(CliError::Unchecked(v.unchecked.clone()))
                    } else {
                        None
                    }
                }),
                _ => None,
            };
            match failed {
                Some(e) => ExitCode::from(e.exit_code()),
                None => ExitCode::SUCCESS,
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
