mod fock_cmd;
mod input;
mod lattice_cmd;
mod report;
mod stats_cmd;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use report::{CliError, Report};

#[derive(Parser)]
#[command(
    name = "qset",
    version,
    about = "Exact occupation-number states, counting statistics and orthomodular lattices"
)]
struct Cli {
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Counting of particle arrangements.
    #[command(subcommand)]
    Stats(stats_cmd::StatsCommand),
    /// Occupation-number states and their scalar products.
    #[command(subcommand)]
    Fock(fock_cmd::FockCommand),
    /// Orthomodular lattices, valuations and modal extensions.
    #[command(subcommand)]
    Lattice(lattice_cmd::LatticeCommand),
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Stats(c) => stats_cmd::run(c),
        Command::Fock(c) => fock_cmd::run(c),
        Command::Lattice(c) => lattice_cmd::run(c),
    }
}

fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes());
    let _ = out.flush();
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let pretty = std::env::args().any(|a| a == "--pretty");
            let message = e.render().to_string();
            let message = message
                .lines()
                .next()
                .unwrap_or("")
                .trim_start_matches("error: ");
            emit(&CliError::new("Usage", message).render(pretty));
            return ExitCode::from(2);
        }
    };
    match run(&cli) {
        Ok(report) => {
            emit(&report.render(cli.pretty));
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            emit(&e.render(cli.pretty));
            ExitCode::from(2)
        }
    }
}
