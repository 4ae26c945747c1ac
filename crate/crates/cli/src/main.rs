use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use fiberbound_cli::{run, Cli, Exit};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match std::panic::catch_unwind(|| run(&cli)) {
        Ok(out) => out,
        Err(_) => return ExitCode::from(Exit::Internal.code() as u8),
    };
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.exit.code() as u8)
}
