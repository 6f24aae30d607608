//! `diffusion`: command line front end for the diffusion model.
//!
//! Results print as JSON on stdout. Exit codes: 0 success, 1 a check
//! failed (or an output file could not be written), 2 invalid input,
//! 3 a size cap was exceeded.

mod args;
mod commands;
mod error;
mod report;
mod scenario;
mod sweep;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = args::Cli::parse();
    let argv: Vec<String> = std::env::args().skip(1).collect();
    match commands::run(&cli, argv) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.stdout.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
