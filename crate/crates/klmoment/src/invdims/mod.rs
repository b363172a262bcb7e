//! Combinatorial invariants of `Sym^k Kl_{n+1}` and `Kl_{n+1}^λ`: the
//! Fu–Wan series at `0`, multi-index counts and Swan conductors at `∞`,
//! middle-cohomology dimensions, Hodge numbers and zeta series.

mod dims;
mod hodge;
mod infinity;
mod multi;
mod ratfunc;
mod series;
mod torus;
mod zeta;

pub use dims::{dim_breakdown, dim_breakdown_weight, dim_mid, dim_motive, DimBreakdown};
pub use hodge::{hodge_numbers, hodge_numbers_weight};
pub use infinity::{infinity_data, swan_infinity, InfinityData};
pub use multi::{
    b_count, b_count_index_weighted, compositions, inv_infinity_dim, multi_index_set,
    multi_index_set_with_root, root_of_unity_powers, rotate, Characteristic, MultiIndexSet,
};
pub use ratfunc::RatFunc;
pub use series::{inv0_coeffs, inv0_dim, inv0_trace, inv0_trace_weight, mk_coeffs, mk_series};
pub use zeta::{zeta_from_moments, zeta_series};

use crate::exactalg::{AlgError, Overflow};
use crate::monodromy::MonodromyError;
use crate::weylchar::WeylError;

/// Errors from the invariant computations.
#[derive(Debug, thiserror::Error)]
pub enum InvError {
    #[error("p = {p} divides n + 1 = {nplus1}")]
    CharDividesOrder { p: u32, nplus1: u32 },
    #[error("non-integral Swan conductor for {0}")]
    NonIntegerSwan(String),
    #[error("negative dimension for {0}")]
    NegativeDimension(String),
    #[error("not covered: {0}")]
    OutOfScope(String),
    #[error("invalid parameters: {0}")]
    BadParameters(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("the rational function has a pole at 0")]
    PoleAtZero,
    #[error("non-integral series coefficient {0}")]
    NonIntegralSeries(String),
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error(transparent)]
    Monodromy(#[from] Box<MonodromyError>),
    #[error(transparent)]
    Alg(#[from] AlgError),
    #[error(transparent)]
    Overflow(#[from] Overflow),
}

impl From<MonodromyError> for InvError {
    fn from(e: MonodromyError) -> Self {
        Self::Monodromy(Box::new(e))
    }
}
