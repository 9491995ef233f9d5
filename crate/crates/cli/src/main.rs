mod args;
mod commands;
mod error;
mod input;
mod sweep;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::Cli;
use error::{CliError, EXIT_USAGE};

fn emit(text: &str) -> ExitCode {
    let mut out = std::io::stdout().lock();
    // A closed pipe is not an error worth reporting.
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
    ExitCode::SUCCESS
}

fn fail(err: &CliError, json: bool) -> ExitCode {
    if json {
        let body = serde_json::to_string(&err.report()).expect("plain data");
        println!("{body}");
    } else {
        eprintln!("error: {err}");
    }
    ExitCode::from(err.exit_code())
}

fn main() -> ExitCode {
    let json_requested = std::env::args().any(|a| a == "--json");
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            if json_requested {
                let msg = e.render().to_string();
                let first = msg.lines().next().unwrap_or("bad command").trim_start_matches("error: ");
                return fail(&CliError::Usage(first.to_string()), true);
            }
            let _ = e.print();
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let result = input::guard(cli.unsafe_n).and_then(|guard| commands::run(&cli.command, guard));
    match result {
        Ok(report) if cli.json => {
            let body = serde_json::to_string(&report.json).expect("plain data");
            emit(&format!("{body}\n"))
        }
        Ok(report) => emit(&report.text),
        Err(e) => fail(&e, cli.json),
    }
}
