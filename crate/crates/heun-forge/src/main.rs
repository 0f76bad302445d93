//! `heun-forge`: series solutions of the non-stationary Heun equation from
//! the command line.
//!
//! Exit status: 0 ok, 1 usage or parse error, 2 resonance, 3 violated
//! precondition or inconsistent configuration, 4 internal error or a failed
//! verification suite.

mod args;
mod commands;
mod config;
mod error;
mod json;
mod value;

use args::Args;
use clap::Parser;
use error::{CliError, CliResult};
use heun_core::HeunError;
use serde_json::Value;
use std::io::Write;

fn error_doc(e: &CliError) -> Value {
    let mut err = json::object([
        ("kind", Value::from(e.kind())),
        ("message", Value::from(e.to_string())),
        ("exit_code", Value::from(e.exit_code())),
    ]);
    if let CliError::Core(HeunError::Resonance(r)) = e {
        err.insert("resonance_report".into(), commands::resonance_json(r));
    }
    json::document(json::object([("error", Value::Object(err))]))
}

fn execute(args: &Args) -> CliResult<bool> {
    let cfg = config::RunConfig::from_args(args)?;
    let out = commands::run(&cfg)?;
    match &args.out {
        Some(path) => std::fs::write(path, &out.text)?,
        None => std::io::stdout().write_all(out.text.as_bytes())?,
    }
    Ok(out.ok)
}

fn main() {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let code = match execute(&args) {
        Ok(true) => 0,
        Ok(false) => 4,
        Err(e) => {
            eprintln!("{}", error_doc(&e));
            e.exit_code()
        }
    };
    std::process::exit(code);
}
