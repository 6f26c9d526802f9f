mod args;
mod commands;
mod expr;
mod output;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Request};
use commands::{dispatch, Context};
use output::Failure;

fn emit(records: &[output::Record], as_json: bool, out: &mut impl Write) {
    for r in records {
        let _ = writeln!(out, "{}", r.render(as_json));
    }
}

fn check_env() -> Result<(), Failure> {
    let var = orbit_goldie::matrixlie::RANK_BOUND_ENV;
    match std::env::var(var) {
        Ok(v) if v.trim().parse::<u32>().is_err() => Err(Failure::usage(format!("{var}={v:?} is not a nonnegative integer"))),
        _ => Ok(()),
    }
}

/// Runs every line of a batch file; the exit code is the worst seen.
fn run_batch(path: &std::path::Path, cli: &Cli) -> ExitCode {
    let content = match std::fs::read_to_string(path) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("usage error: cannot read {}: {e}", path.display());
            return ExitCode::from(1);
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut worst = 0u8;
    for (no, line) in content.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let result = shell_words::split(line)
            .map_err(|e| Failure::usage(e.to_string()))
            .and_then(|words| Request::try_parse_from(words).map_err(|e| Failure::usage(e.to_string())))
            .and_then(|req| {
                let ctx = Context { truncate: req.truncate.or(cli.truncate) };
                dispatch(&req.command, &ctx).map(|r| (r, req.json || cli.json))
            });
        match result {
            Ok((records, as_json)) => emit(&records, as_json, &mut out),
            Err(f) => {
                eprintln!("line {}: {f}", no + 1);
                worst = worst.max(f.exit_code());
            }
        }
    }
    ExitCode::from(worst)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    if let Err(f) = check_env() {
        eprintln!("{f}");
        return f.exit();
    }
    if let Some(path) = &cli.batch {
        if cli.command.is_some() {
            eprintln!("usage error: --batch does not take a subcommand");
            return ExitCode::from(1);
        }
        return run_batch(path, &cli);
    }
    let Some(command) = &cli.command else {
        eprintln!("usage error: a subcommand or --batch is required (see --help)");
        return ExitCode::from(1);
    };
    match dispatch(command, &Context { truncate: cli.truncate }) {
        Ok(records) => {
            emit(&records, cli.json, &mut io::stdout().lock());
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("{f}");
            f.exit()
        }
    }
}
