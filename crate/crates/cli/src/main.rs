mod args;
mod commands;

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;

use args::Cli;

const EXIT_USAGE: i32 = 64;

/// What a command prints and how it exits.
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { stdout, stderr: String::new(), code: 0 }
    }
}

/// A command that could not produce its result.
#[derive(Debug)]
pub enum Failure {
    /// Bad input: invalid code, diagram or file.
    Domain(String),
    /// A search or enumeration limit was reached.
    Budget(String),
}

impl From<bouquet_core::Error> for Failure {
    fn from(e: bouquet_core::Error) -> Self {
        if e.is_budget() {
            Failure::Budget(e.to_string())
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

fn run(argv: impl IntoIterator<Item = OsString>) -> Output {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let text = e.render().to_string();
            return if code == 0 { Output::ok(text) } else { Output { stdout: String::new(), stderr: text, code } };
        }
    };
    match commands::dispatch(&cli) {
        Ok(out) => out,
        Err(Failure::Domain(msg)) => Output { stdout: String::new(), stderr: format!("error: {msg}\n"), code: 1 },
        Err(Failure::Budget(msg)) => Output { stdout: String::new(), stderr: format!("error: {msg}\n"), code: 2 },
    }
}

fn main() {
    let out = run(std::env::args_os());
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    std::process::exit(out.code);
}
