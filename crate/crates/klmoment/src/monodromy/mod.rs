//! Exact finite subgroups of `SL_3(Q(ζ_9))`, their Molien series, and the
//! local monodromy of `Kl_3` at `∞` in characteristic 3.

mod group;
mod matrix;
mod molien;
mod p3;

pub use group::{build_group, generate, GroupName, MatGroup, MAX_GROUP_ORDER};
pub use matrix::{omega_scalar, CycMatrix, Generators, CONDUCTOR};
pub use molien::{molien, molien_normalized};
pub use p3::{
    d1_invariant_dim, frob_signs_p3, p3_data, p3_inv_dim, p3_inv_dim_tilde, p3_swan, P3Data,
    CENTER_INDEX, CENTER_STEPS, WILD_INDEX,
};

use crate::exactalg::Overflow;
use crate::invdims::InvError;

/// Errors from the monodromy computations.
#[derive(Debug, thiserror::Error)]
pub enum MonodromyError {
    #[error("closure exceeded {limit} elements")]
    ClosureOverflow { limit: usize },
    #[error("expected a group of order {expected}, got {got}")]
    UnexpectedOrder { expected: usize, got: usize },
    #[error("matrix is not in SL_3: determinant {0}")]
    NotSpecialLinear(String),
    #[error("Molien series is not rational over Q: {0}")]
    NonRationalResult(String),
    #[error("no eigenspace split at k = {k}: p_k = {p}, p̃_k = {p_tilde}")]
    InconsistentParity { k: u32, p: u64, p_tilde: u64 },
    #[error("empty matrix list")]
    EmptyInput,
    #[error(transparent)]
    Overflow(#[from] Overflow),
    #[error(transparent)]
    Inv(#[from] InvError),
}
