mod args;
mod cmd;
mod config;
mod error;
mod input;
mod report;

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use config::Config;
use error::Result;
use report::Output;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}

fn run(cli: &Cli) -> Result<u8> {
    let config = Config::load(cli)?;
    if let Some(workers) = config.workers {
        // Best effort; a pool may already exist when tests drive this in-process.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global();
    }
    let output = dispatch(cli, &config)?;
    write_output(cli, &output)?;
    Ok(output.exit_code as u8)
}

fn dispatch(cli: &Cli, config: &Config) -> Result<Output> {
    match &cli.command {
        Command::Enumerate { n, set, order } => cmd::enumerate::run(config, *n, *set, *order),
        Command::Solve { equation } => cmd::solve::run(config, equation),
        Command::Check {
            word,
            primitive,
            greatest,
            lexical,
            broken_alternating,
        } => cmd::check::run(
            word,
            &cmd::check::Predicates {
                primitive: *primitive,
                greatest: *greatest,
                lexical: *lexical,
                broken_alternating: *broken_alternating,
            },
        ),
        Command::Psi { n, mode } => cmd::psi::run(config, *n, *mode),
    }
}

fn write_output(cli: &Cli, output: &Output) -> Result<()> {
    let rendered = if cli.json {
        let mut text = serde_json::to_string_pretty(&output.json).expect("report serializes");
        text.push('\n');
        text
    } else {
        let mut text = output.text.clone();
        text.push('\n');
        text
    };
    match &cli.out {
        Some(path) => fs::write(path, rendered)?,
        None => {
            // A closed pipe (lmr ... | head) ends the report early; that is
            // not an error worth reporting.
            if let Err(err) = std::io::stdout().write_all(rendered.as_bytes()) {
                if err.kind() != std::io::ErrorKind::BrokenPipe {
                    return Err(err.into());
                }
            }
        }
    }
    Ok(())
}
