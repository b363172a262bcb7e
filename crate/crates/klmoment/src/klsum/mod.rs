//! Kloosterman sums `Kl_{n+1}(a; q)` as exact elements of `Z[ζ_p]`.
//!
//! Two backends build the full table `a ↦ Kl_{n+1}(a; q)` over `F_q^×`: the
//! literal `(q−1)^n`-term sum, and a level-by-level convolution over the
//! cyclic group `F_q^×` using `Kl_{m+1}(a) = Σ_x ψ(x) Kl_m(a/x)`.

mod cache;
mod embed;
mod modular;
mod store;
mod table;

pub use cache::{decode_table, encode_table, TableCache, CACHE_ENV};
pub use embed::{embed_complex, weil_bound, within_weil_bound};
pub use modular::kl_values_mod;
pub use store::KlStore;
pub use table::{kl_naive, kl_table, kl_table_scaled, psi, Backend, KlTable};

use crate::exactalg::AlgError;

/// Errors from Kloosterman-sum computation and the table cache.
#[derive(Debug, thiserror::Error)]
pub enum KlError {
    #[error("Kloosterman sums are defined only at nonzero points")]
    ZeroPoint,
    #[error("Kloosterman sums need n + 1 ≥ 1, a prime power q ≥ 2 and a character scale prime to p (got n+1 = {nplus1}, q = {q})")]
    BadParameters { nplus1: u32, q: u64 },
    #[error("table for n+1 = {nplus1}, q = {q} exceeds the counting range")]
    TooLarge { nplus1: u32, q: u64 },
    #[error(transparent)]
    Alg(#[from] AlgError),
    #[error("cache i/o error at {path}: {source}")]
    CacheIo {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed cache file: {0}")]
    CacheFormat(String),
}
