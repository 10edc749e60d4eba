use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use sytpoly_cli::{execute, Cli};

fn main() -> ExitCode {
    let output = execute(Cli::parse());
    let _ = std::io::stdout().write_all(output.stdout.as_bytes());
    let _ = std::io::stderr().write_all(output.stderr.as_bytes());
    ExitCode::from(output.code as u8)
}
