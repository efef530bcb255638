use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use quandle_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &outcome.output),
                None => std::io::stdout().write_all(outcome.output.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(outcome.exit_code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
