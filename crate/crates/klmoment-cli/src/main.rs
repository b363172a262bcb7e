//! `klm`: command-line access to moments, identity checks, local
//! invariants, Molien series and benchmarks.
//!
//! Exit codes: 0 on success, 1 when a verification or consistency check
//! fails, 2 on argument errors and out-of-scope requests, 3 when a
//! computation exceeds the desk-scale guard without `--force`.

mod args;
mod bench;
mod commands;
mod error;
mod report;

use args::{Cli, Command, Threads};
use bench::BenchParams;
use clap::Parser;
use error::CliError;
use klmoment::klsum::{KlStore, TableCache};
use report::Report;
use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

fn store_for(cache_dir: Option<&Path>) -> Result<KlStore, CliError> {
    let store = KlStore::default();
    let Some(dir) = cache_dir else {
        return Ok(store);
    };
    let cache = TableCache::new(dir)?;
    let probe = dir.join(".klm-write-probe");
    std::fs::write(&probe, b"")
        .and_then(|_| std::fs::remove_file(&probe))
        .map_err(|e| {
            CliError::Usage(format!(
                "cache directory {} is not writable: {e}",
                dir.display()
            ))
        })?;
    Ok(store.with_cache(cache))
}

fn run(cli: &Cli) -> Result<(Report, bool), CliError> {
    if let Threads::Fixed(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Failed(e.to_string()))?;
    }
    match &cli.command {
        Command::Moment {
            nplus1,
            lambda,
            p,
            depth,
            force,
            method,
        } => {
            let store = store_for(cli.cache_dir.as_deref())?;
            Ok((
                commands::moment(&store, *nplus1, lambda, *p, *depth, *force, *method)?,
                true,
            ))
        }
        Command::Verify { id, primes } => commands::verify(id, *primes),
        Command::Dims { nplus1, weight, p } => {
            Ok((commands::dims(*nplus1, &weight.weight(), *p)?, true))
        }
        Command::Hodge { nplus1, weight } => {
            Ok((commands::hodge(*nplus1, &weight.weight())?, true))
        }
        Command::Molien { group, terms } => Ok((commands::molien(*group, *terms)?, true)),
        Command::Swan { nplus1, weight, p } => {
            Ok((commands::swan(*nplus1, &weight.weight(), *p)?, true))
        }
        Command::Bench {
            scenario,
            reps,
            nplus1,
            q,
            pmax,
        } => bench::bench(
            *scenario,
            BenchParams {
                reps: *reps,
                nplus1: *nplus1,
                q: *q,
                pmax: *pmax,
                precision_bits: cli.precision_bits,
            },
        ),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((report, ok)) => {
            let mut out = std::io::stdout().lock();
            if let Err(e) = report.write(cli.format, &mut out).and_then(|_| out.flush()) {
                eprintln!("klm: {e}");
                return ExitCode::from(1);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("klm: verification failed");
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("klm: {e}");
            e.exit_code()
        }
    }
}
