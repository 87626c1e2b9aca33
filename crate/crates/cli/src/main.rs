use std::io::Write;
use std::process::ExitCode;

use expdio_cli::{run, MODULI_ENV};

fn main() -> ExitCode {
    let outcome = run(std::env::args_os(), std::env::var(MODULI_ENV).ok());
    // A closed pipe is not worth a panic.
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
