//! Command-line front end for `gitkit-core`.
//!
//! Grammar: `gitkit <module> <op> [flags]`. Results go to stdout as JSON or an
//! aligned table; domain errors go to stderr as `{code, message, context}`.

pub mod args;
mod commands;
pub mod input;
pub mod output;
pub mod registry;
pub mod worked;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;
use serde_json::json;

use args::{Cli, Command};
use commands::Ctx;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

fn names(cmd: &Command) -> (&'static str, String) {
    fn op<T: std::fmt::Debug>(t: &T) -> String {
        let s = format!("{t:?}");
        let head = s.split([' ', '{', '(']).next().unwrap_or_default();
        let mut out = String::new();
        for (i, ch) in head.chars().enumerate() {
            if ch.is_uppercase() && i > 0 {
                out.push('-');
            }
            out.push(ch.to_ascii_lowercase());
        }
        out
    }
    match cmd {
        Command::Lie { op: o } => ("lie", op(o)),
        Command::Char { op: o } => ("char", op(o)),
        Command::Puzzles { op: o } => ("puzzles", op(o)),
        Command::Horn { op: o } => ("horn", op(o)),
        Command::Stability { op: o } => ("stability", op(o)),
        Command::Polytope { op: o } => ("polytope", op(o)),
        Command::Localize { op: o } => ("localize", op(o)),
        Command::PaperExamples { .. } => ("paper-examples", String::new()),
    }
}

/// Parses `argv`, runs the command and writes to the given streams.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let seed = match std::env::var("GITKIT_SEED") {
        Ok(s) => match s.trim().parse() {
            Ok(v) => v,
            Err(_) => {
                let _ = writeln!(
                    err,
                    "{}",
                    json!({ "code": "usage", "message": format!("GITKIT_SEED is not a u64: {s:?}"), "context": null })
                );
                return EXIT_USAGE;
            }
        },
        Err(_) => cli.global.seed,
    };
    let ctx = Ctx { seed, jobs: cli.global.jobs.max(1) };
    let result = match &cli.command {
        Command::Lie { op } => commands::lie(op),
        Command::Char { op } => commands::characters(op),
        Command::Puzzles { op } => commands::puzzles(op, &ctx),
        Command::Horn { op } => commands::horn(op, &ctx),
        Command::Stability { op } => commands::stability(op),
        Command::Polytope { op } => commands::polytope_op(op, &ctx),
        Command::Localize { op } => commands::localize(op, &ctx),
        Command::PaperExamples { timings } => {
            let (report, pass) = worked::run(*timings);
            let _ = writeln!(out, "{}", output::render(&report, cli.global.format).trim_end());
            return if pass { EXIT_OK } else { EXIT_DOMAIN };
        }
    };
    match result {
        Ok(v) => {
            let _ = writeln!(out, "{}", output::render(&v, cli.global.format).trim_end());
            EXIT_OK
        }
        Err(mut e) => {
            let (module, op) = names(&cli.command);
            e.context = json!({ "module": module, "op": op });
            let _ = writeln!(err, "{}", e.to_json());
            EXIT_DOMAIN
        }
    }
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(argv, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
