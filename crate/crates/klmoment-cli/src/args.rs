//! Command-line arguments.

use crate::report::Format;
use clap::{Args, Parser, Subcommand, ValueEnum};
use klmoment::klsum::CACHE_ENV;
use klmoment::weylchar::HighestWeight;
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(
    name = "klm",
    version,
    about = "Exact moments of Kloosterman sheaves and their local invariants"
)]
pub struct Cli {
    /// Directory for cached Kloosterman tables.
    #[arg(long, global = true, env = CACHE_ENV)]
    pub cache_dir: Option<PathBuf>,
    /// Worker threads: a positive integer or `auto`.
    #[arg(long, global = true, default_value = "auto", value_parser = parse_threads)]
    pub threads: Threads,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Working precision of numeric checks, in bits.
    #[arg(long, global = true, default_value_t = 128)]
    pub precision_bits: u32,
    #[command(subcommand)]
    pub command: Command,
}

/// Thread-count setting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Threads {
    Auto,
    Fixed(usize),
}

fn parse_threads(s: &str) -> Result<Threads, String> {
    if s == "auto" {
        return Ok(Threads::Auto);
    }
    match s.parse::<usize>() {
        Ok(n) if n > 0 => Ok(Threads::Fixed(n)),
        _ => Err(format!("expected a positive integer or `auto`, got {s:?}")),
    }
}

/// Inclusive prime range `lo..hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeRange {
    pub lo: u32,
    pub hi: u32,
}

fn parse_range(s: &str) -> Result<PrimeRange, String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("expected lo..hi, got {s:?}"))?;
    let lo = lo
        .trim()
        .parse::<u32>()
        .map_err(|e| format!("{lo:?}: {e}"))?;
    let hi = hi
        .trim()
        .trim_start_matches('=')
        .parse::<u32>()
        .map_err(|e| format!("{hi:?}: {e}"))?;
    Ok(PrimeRange { lo, hi })
}

fn parse_weight(s: &str) -> Result<HighestWeight, String> {
    s.parse::<HighestWeight>().map_err(|e| e.to_string())
}

/// Either `--k` (a symmetric power) or `--lambda`.
#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct WeightArg {
    /// Symmetric power `k`.
    #[arg(long)]
    pub k: Option<u32>,
    /// Highest weight as comma-separated integers, trailing zeros implied.
    #[arg(long, value_parser = parse_weight)]
    pub lambda: Option<HighestWeight>,
}

impl WeightArg {
    pub fn weight(&self) -> HighestWeight {
        match (&self.lambda, self.k) {
            (Some(l), _) => l.clone(),
            (None, Some(k)) => HighestWeight::sym(k),
            (None, None) => unreachable!("clap requires one of --k and --lambda"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Exact,
    Modular,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GroupArg {
    G108,
    G216,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum Scenario {
    KlNaiveVsConv,
    MomentGrid,
    Molien,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The moment m^λ_{n+1}(p), with the normalized trace when an identity applies.
    Moment {
        /// Rank n + 1.
        #[arg(long = "n")]
        nplus1: u32,
        /// Highest weight as comma-separated integers, trailing zeros implied.
        #[arg(long, value_parser = parse_weight)]
        lambda: HighestWeight,
        /// The prime p.
        #[arg(long)]
        p: u32,
        /// Also report the moments over F_{p^r} for r up to this depth.
        #[arg(long)]
        depth: Option<u32>,
        /// Lift the extension-degree guard.
        #[arg(long)]
        force: bool,
        /// Evaluation method.
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Check identities (`all`, `cross`, `eta` or an identity id) over a prime range.
    Verify {
        #[arg(long)]
        id: String,
        /// Inclusive range `lo..hi`.
        #[arg(long, default_value = "2..50", value_parser = parse_range)]
        primes: PrimeRange,
    },
    /// Dimension of the middle cohomology and its terms.
    Dims {
        #[arg(long = "n")]
        nplus1: u32,
        #[command(flatten)]
        weight: WeightArg,
        /// Characteristic; generic when omitted.
        #[arg(long)]
        p: Option<u32>,
    },
    /// Hodge numbers of the motive.
    Hodge {
        #[arg(long = "n")]
        nplus1: u32,
        #[command(flatten)]
        weight: WeightArg,
    },
    /// Molien series of a p = 3 monodromy group.
    Molien {
        #[arg(long, value_enum)]
        group: GroupArg,
        /// Number of series coefficients to print.
        #[arg(long, default_value_t = 12)]
        terms: usize,
    },
    /// Swan conductor and invariants at infinity.
    Swan {
        #[arg(long = "n")]
        nplus1: u32,
        #[command(flatten)]
        weight: WeightArg,
        /// Characteristic; generic when omitted.
        #[arg(long)]
        p: Option<u32>,
    },
    /// Timing of compared backends, with an equality check.
    Bench {
        #[arg(long, value_enum)]
        scenario: Scenario,
        #[arg(long, default_value_t = 3)]
        reps: u32,
        /// Rank for `kl_naive_vs_conv`.
        #[arg(long = "n", default_value_t = 3)]
        nplus1: u32,
        /// Field size for `kl_naive_vs_conv`.
        #[arg(long, default_value_t = 101)]
        q: u32,
        /// Largest prime for `moment_grid`.
        #[arg(long, default_value_t = 50)]
        pmax: u32,
    },
}
