//! `pardeg` command-line front end.
//!
//! Exit codes: 0 success, 1 usage or validation error, 2 failed mathematical
//! assertion (a discrepancy or a failing oracle verdict).

mod args;
mod commands;
mod config;
mod error;
mod output;
mod verify;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp
                | ErrorKind::DisplayVersion
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    let result = match &cli.command {
        Command::Degree(a) => commands::degree(a),
        Command::Table(a) => commands::table(a),
        Command::Verify(a) => verify::verify(a),
        Command::Roots(a) => commands::roots(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
