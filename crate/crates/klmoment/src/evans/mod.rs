//! Evans-type identities: normalized middle-cohomology traces of Kloosterman
//! moments compared with Fourier coefficients of modular forms.
//!
//! The [`registry`] holds the normalization data of every identity. The
//! [`eta`] submodule produces independent coefficient streams from
//! η-products, and [`checks`] runs the integrality, Ramanujan, purity and
//! cross-identity checks.

pub mod checks;
pub mod eta;
pub mod fixtures;
pub mod registry;

pub use checks::{
    cm_vanishing, cross_identity, cross_identity_sides, ramanujan_ok, stream_coincidence,
    verify_identity, verify_prime, IdentityCheck, PURITY_TOLERANCE,
};
pub use eta::{
    eta_product, hecke_check, validate_candidate, CandidateReport, EtaCandidate, EtaProduct,
    ETA_CANDIDATES,
};
pub use fixtures::{a_value_fixtures, hecke_elimination_table, HeckeRow};
pub use registry::{
    a_value, a_value_from_moment, identity_for, local_factor, local_factor_from_moment,
    EvansIdentity, IdentityId, LocalFactor, REGISTRY,
};

use crate::invdims::InvError;
use crate::weylchar::WeylError;

/// Errors from the identity checks.
#[derive(Debug, thiserror::Error)]
pub enum EvansError {
    #[error("p = {p} is a bad prime for {id}")]
    BadPrime { id: IdentityId, p: u32 },
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
    #[error("a-value of {id} at p = {p} is not an integer: {value}")]
    NonIntegral {
        id: IdentityId,
        p: u32,
        value: String,
    },
    #[error("η-product has q-exponent Σ m·e = {sum}, not divisible by 24")]
    NonIntegralPower { sum: i64 },
    #[error("coefficient list of length {got} does not reach index {needed}")]
    InsufficientLength { needed: usize, got: usize },
    #[error("{id} has a middle cohomology of dimension {dim}, not 2")]
    NotTwoDimensional { id: IdentityId, dim: u64 },
    #[error("malformed fixture: {0}")]
    Fixture(String),
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error(transparent)]
    Inv(#[from] InvError),
}
