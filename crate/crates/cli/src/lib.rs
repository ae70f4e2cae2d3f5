//! The `gnf` command-line tool.
//!
//! Exit status 0 means success, 1 means a property violation was found, 2
//! means a usage, parse or I/O error.

mod args;
mod commands;

use std::ffi::OsString;
use std::io::{BufRead, Write};

use clap::Parser;

pub use args::{parse_range, Cli, Command};
pub use commands::{write_sweep, write_verdicts, CheckLine};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Success,
    Violation,
    Failure,
}

impl ExitStatus {
    pub fn code(self) -> u8 {
        match self {
            ExitStatus::Success => 0,
            ExitStatus::Violation => 1,
            ExitStatus::Failure => 2,
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> ExitStatus
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
                return ExitStatus::Failure;
            }
            let _ = write!(out, "{text}");
            return ExitStatus::Success;
        }
    };
    match commands::execute(cli.command, stdin, out) {
        Ok(status) => status,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            ExitStatus::Failure
        }
    }
}
