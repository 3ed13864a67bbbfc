use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use sbc::cli::Cli;
use sbc::{run, RunConfig, Status};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = RunConfig::from_cli(&cli).and_then(|cfg| run(&cfg));
    let outcome = match outcome {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(Status::Usage as u8);
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &outcome.report),
        None => std::io::stdout()
            .lock()
            .write_all(outcome.report.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write report: {e}");
        return ExitCode::from(Status::Usage as u8);
    }
    ExitCode::from(outcome.status as u8)
}
