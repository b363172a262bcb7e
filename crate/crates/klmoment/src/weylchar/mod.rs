//! Frobenius eigenvalue data and moments of Kloosterman sheaves for
//! arbitrary highest weights of `SL_{n+1}`.
//!
//! At each point `a`, the elementary symmetric values of the Frobenius
//! eigenvalues come from the power sums `P_j = (−1)^n·Kl_{n+1}(a; q^j)` by
//! Newton's identities, completed by the functional equation. The trace of
//! the representation with highest weight `λ` is the Schur polynomial
//! `s_{μ(λ)}` of the eigenvalues, evaluated by a Jacobi–Trudi determinant.

mod moment;
mod schur;
mod symm;
mod weight;

pub use moment::{
    default_store, moment, moment_over, moment_tower, moment_with, schur_trace, MomentMethod,
    MomentOptions, MomentReport, AUTO_EXACT_MAX_Q, MAX_TOWER_DEGREE,
};
pub use schur::{
    complete_from_elementary, elementary_from_complete, jacobi_trudi, schur_from_complete,
    schur_from_elementary, schur_from_elementary_dual,
};
pub use symm::{elementary_from_power_sums, frob_symm, tower_depth, FrobSymm};
pub use weight::{conjugate, HighestWeight, MAX_WEIGHT_SIZE};

use crate::exactalg::{AlgError, Overflow};
use crate::klsum::KlError;

/// Errors from the moment engine.
#[derive(Debug, thiserror::Error)]
pub enum WeylError {
    #[error("the Kloosterman table over the degree-{degree} extension is missing or inconsistent")]
    MissingTower { degree: u32 },
    #[error("partition with {rows} rows exceeds the {max} eigenvalues")]
    TooManyRows { rows: usize, max: usize },
    #[error("weight size {size} exceeds the limit {max}")]
    WeightTooLarge { size: u32, max: u32 },
    #[error("malformed weight {0:?}: expected comma-separated non-negative integers")]
    BadWeight(String),
    #[error("non-integral value in {0}")]
    NonIntegral(String),
    #[error(
        "tower depth {depth} needs fields of degree {degree} > {limit}; pass force to override"
    )]
    DeskScaleExceeded { depth: u32, degree: u32, limit: u32 },
    #[error(transparent)]
    Kl(#[from] KlError),
    #[error(transparent)]
    Alg(#[from] AlgError),
    #[error(transparent)]
    Overflow(#[from] Overflow),
}
