//! Benchmark scenarios. Every scenario checks that the compared backends
//! agree exactly before reporting times.

use crate::args::Scenario;
use crate::error::CliError;
use crate::report::{record, Report};
use klmoment::exactalg::prime::{is_prime, prime_factors, primes_in};
use klmoment::klsum::{kl_table, within_weil_bound, Backend, KlStore};
use klmoment::monodromy::{molien, p3_data};
use klmoment::weylchar::{moment_over, HighestWeight, MomentMethod, MomentOptions};
use klmoment::CycInt;
use serde_json::Value;
use std::time::{Duration, Instant};

/// Parameters shared by the scenarios.
#[derive(Debug, Clone, Copy)]
pub struct BenchParams {
    pub reps: u32,
    pub nplus1: u32,
    pub q: u32,
    pub pmax: u32,
    pub precision_bits: u32,
}

fn timed<T>(
    reps: u32,
    mut f: impl FnMut() -> Result<T, CliError>,
) -> Result<(T, Duration), CliError> {
    let start = Instant::now();
    let mut last = f()?;
    for _ in 1..reps {
        last = f()?;
    }
    Ok((last, start.elapsed() / reps.max(1)))
}

fn rows(scenario: &str, reps: u32, timings: &[(&str, Duration)]) -> Report {
    let base = timings[0].1.as_secs_f64();
    let mut report = Report::default();
    for (variant, t) in timings {
        let ms = t.as_secs_f64() * 1e3;
        let speedup = if t.as_secs_f64() > 0.0 {
            base / t.as_secs_f64()
        } else {
            f64::INFINITY
        };
        report.records.push(record([
            ("scenario", Value::from(scenario)),
            ("variant", Value::from(*variant)),
            ("reps", Value::from(reps)),
            ("mean_ms", Value::from((ms * 1e3).round() / 1e3)),
            ("speedup", Value::from((speedup * 1e3).round() / 1e3)),
        ]));
        report.text.push(format!(
            "{scenario:<16} {variant:<22} {ms:>12.3} ms  ×{speedup:.2}"
        ));
    }
    report
}

fn field_of(q: u32) -> Result<(u32, u32), CliError> {
    let f = prime_factors(q as u64);
    match f.as_slice() {
        [p] => {
            let p = *p as u32;
            let r = (q as f64).ln() / (p as f64).ln();
            Ok((p, r.round() as u32))
        }
        _ => Err(CliError::Usage(format!("{q} is not a prime power"))),
    }
}

fn kl_naive_vs_conv(bp: BenchParams) -> Result<(Report, bool), CliError> {
    let (p, r) = field_of(bp.q)?;
    let (naive, t_naive) = timed(bp.reps, || Ok(kl_table(bp.nplus1, p, r, Backend::Naive)?))?;
    let (conv, t_conv) = timed(bp.reps, || {
        Ok(kl_table(bp.nplus1, p, r, Backend::Convolution)?)
    })?;
    let equal = naive.values() == conv.values();
    let total = |vals: &[CycInt]| {
        vals.iter()
            .try_fold(CycInt::zero(p), |acc, v| acc.try_add(v))
            .map_err(|e| CliError::Failed(e.to_string()))
    };
    let (tn, tc) = (total(naive.values())?, total(conv.values())?);
    let weil = conv
        .values()
        .iter()
        .all(|v| within_weil_bound(v, bp.nplus1, bp.q as u64, bp.precision_bits));
    let mut report = rows(
        "kl_naive_vs_conv",
        bp.reps,
        &[("naive", t_naive), ("convolution", t_conv)],
    );
    let shown = tc
        .to_rational()
        .map(|t| t.to_string())
        .unwrap_or_else(|_| "irrational".into());
    report.text.push(format!(
        "n+1 = {}, q = {}: tables equal {equal}, totals equal {}, Σ Kl = {shown}, Weil bound {weil}",
        bp.nplus1,
        bp.q,
        tn == tc
    ));
    report.summary = Some(record([
        ("tables_equal", Value::from(equal)),
        ("totals_equal", Value::from(tn == tc)),
        ("weil_bound", Value::from(weil)),
    ]));
    Ok((report, equal && tn == tc && weil))
}

fn moment_grid(bp: BenchParams) -> Result<(Report, bool), CliError> {
    let lambda = HighestWeight::sym(4);
    let primes: Vec<u32> = primes_in(2, bp.pmax as u64)
        .into_iter()
        .map(|p| p as u32)
        .collect();
    let store = KlStore::default();
    let run = |method| {
        let opts = MomentOptions {
            method,
            ..MomentOptions::default()
        };
        primes
            .iter()
            .map(|&p| moment_over(&store, 3, &lambda, p, 1, opts))
            .collect::<Result<Vec<_>, _>>()
            .map_err(CliError::from)
    };
    let (exact, t_exact) = timed(bp.reps, || run(MomentMethod::Exact))?;
    let (modular, t_mod) = timed(bp.reps, || run(MomentMethod::Modular))?;
    let equal = exact == modular;
    let mut report = rows(
        "moment_grid",
        bp.reps,
        &[("exact", t_exact), ("modular", t_mod)],
    );
    report.text.push(format!(
        "Sym^4 Kl_3 at {} primes ≤ {}: results equal {equal}",
        primes.len(),
        bp.pmax
    ));
    report.summary = Some(record([
        ("primes", Value::from(primes.len())),
        ("results_equal", Value::from(equal)),
    ]));
    Ok((report, equal))
}

fn molien_scenario(bp: BenchParams) -> Result<(Report, bool), CliError> {
    let data = p3_data()?;
    let mut outputs = Vec::new();
    let (_, t) = timed(bp.reps, || {
        outputs.push(molien(&data.g108.elements)?);
        Ok(())
    })?;
    let stable = outputs.iter().all(|m| *m == data.p);
    let mut report = rows("molien", bp.reps, &[("g108", t)]);
    report.text.push(format!(
        "{} repetitions, identical output {stable}",
        outputs.len()
    ));
    report.summary = Some(record([("stable", Value::from(stable))]));
    Ok((report, stable))
}

pub fn bench(scenario: Scenario, bp: BenchParams) -> Result<(Report, bool), CliError> {
    if bp.reps == 0 {
        return Err(CliError::Usage("--reps must be positive".into()));
    }
    match scenario {
        Scenario::KlNaiveVsConv => kl_naive_vs_conv(bp),
        Scenario::MomentGrid => {
            if bp.pmax < 2 || !primes_in(2, bp.pmax as u64).iter().any(|&p| is_prime(p)) {
                return Err(CliError::Usage("--pmax must be at least 2".into()));
            }
            moment_grid(bp)
        }
        Scenario::Molien => molien_scenario(bp),
    }
}
