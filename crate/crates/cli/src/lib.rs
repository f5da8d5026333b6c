//! Command-line front end for `qtan-core`.
//!
//! [`run`] parses arguments, dispatches one command and returns the exit
//! status: 0 on success, 1 when a verification fails, 2 for usage errors and
//! 3 for arithmetic or domain errors.

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;

pub mod commands;
pub mod config;
pub mod document;

pub use commands::{eval_values, EvalValues, Outcome};
pub use config::{Args, Command, Format, RunConfig};
pub use document::Document;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_ARITHMETIC: i32 = 3;

pub fn dispatch(cfg: &RunConfig) -> qtan_core::Result<Outcome> {
    match cfg.command {
        Command::Brackets => commands::cmd_brackets(cfg),
        Command::Series => commands::cmd_series(cfg),
        Command::Expand => commands::cmd_expand(cfg),
        Command::Verify => commands::cmd_verify(cfg),
        Command::Convergent => commands::cmd_convergent(cfg),
        Command::Eval => commands::cmd_eval(cfg),
    }
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    let cfg = match RunConfig::from_args(args) {
        Ok(c) => c,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    match dispatch(&cfg) {
        Ok(outcome) => {
            let _ = out.write_all(outcome.stdout.as_bytes());
            match outcome.passed {
                Some(false) => EXIT_VERIFY_FAILED,
                _ => EXIT_OK,
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ARITHMETIC
        }
    }
}

/// Runs with captured output: `(status, stdout, stderr)`.
pub fn run_captured<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(args, &mut out, &mut err);
    (
        code,
        String::from_utf8_lossy(&out).into_owned(),
        String::from_utf8_lossy(&err).into_owned(),
    )
}
