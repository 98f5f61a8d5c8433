mod args;
mod commands;
mod error;
mod render;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use error::{CliError, CliResult};

/// `PERSPECTRA_THREADS` caps the worker pool; 0 or unset means automatic.
fn configure_threads() -> CliResult<()> {
    let Ok(value) = std::env::var("PERSPECTRA_THREADS") else {
        return Ok(());
    };
    let threads: usize = value.trim().parse().map_err(|_| {
        CliError::Usage(format!(
            "PERSPECTRA_THREADS must be a nonnegative integer, got {value:?}"
        ))
    })?;
    if threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    Ok(())
}

fn run(cli: Cli) -> CliResult<()> {
    configure_threads()?;
    match cli.command {
        Command::Poly {
            source,
            engine,
            verify,
        } => commands::poly(&source, engine, verify),
        Command::Classify {
            source,
            full_precision,
        } => commands::classify(&source, full_precision),
        Command::Scan {
            family,
            l_max,
            k_max,
            out,
            svg,
        } => commands::scan_cmd(&family, l_max, k_max, out.as_deref(), svg.as_deref()),
        Command::Census {
            n,
            graph6_stream,
            out,
        } => commands::census_cmd(n, graph6_stream.as_deref(), out.as_deref()),
        Command::Construct(a) => commands::construct(&a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // help and version requests are not errors
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
