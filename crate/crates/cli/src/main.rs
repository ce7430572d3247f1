//! `specht`: decomposition matrices, reducibility classifiers and witnesses
//! for Specht modules at `q = -1`.
//!
//! Exit status: 0 on success, 1 when a check finds a counterexample, 2 on
//! usage errors, 3 on internal or I/O errors.

mod args;
mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use specht_core::Error;

use args::{Cli, Command, FockCommand, OutputFormat, RunConfig};
use commands::Report;

const EXIT_COUNTEREXAMPLE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let config = RunConfig::from_args(&cli.global);
    if let Err(e) = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build_global()
    {
        eprintln!("error: cannot start {} worker threads: {e}", config.jobs);
        return ExitCode::from(EXIT_INTERNAL);
    }
    match run(&cli.command, &config) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Internal(_) | Error::Io { .. } | Error::Cache { .. } | Error::Json(_) => {
            EXIT_INTERNAL
        }
        _ => EXIT_USAGE,
    }
}

fn run(command: &Command, config: &RunConfig) -> Result<u8, Error> {
    let cache = config.cache();
    match command {
        Command::Classify(a) => emit(&commands::classify(a, config, &cache)?, config),
        Command::Decompose(a) => emit(&commands::decompose(a, config, &cache)?, config),
        Command::Verify(a) => emit(&commands::verify(a, config, &cache)?, config),
        Command::Lr(a) => emit(&commands::lr(a)?, config),
        Command::Fock(FockCommand::Apply(a)) => {
            emit(&commands::fock_apply(a, config, &cache)?, config)
        }
        Command::Block(a) => emit(&commands::block(a)?, config),
    }
}

fn emit(report: &impl Report, config: &RunConfig) -> Result<u8, Error> {
    let text = match config.output {
        OutputFormat::Json => serde_json::to_string_pretty(report)? + "\n",
        OutputFormat::Table => report.table(),
    };
    let mut stdout = std::io::stdout().lock();
    stdout
        .write_all(text.as_bytes())
        .and_then(|()| stdout.flush())
        .map_err(|e| Error::Internal(format!("cannot write to standard output: {e}")))?;
    Ok(if report.passed() {
        0
    } else {
        EXIT_COUNTEREXAMPLE
    })
}
