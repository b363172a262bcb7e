//! Exact arithmetic foundations: prime fields, extension fields with their
//! trace maps, and cyclotomic integers and rationals with Galois action.

mod cyclo;
mod ext;
mod fp;
mod modular;
pub mod prime;
mod ring;
mod scalar;

pub use cyclo::{cyclotomic_poly, reduces_to_zero, CycElem};
pub use ext::{
    ext_field, fq_context, is_irreducible, trace, ExtElem, ExtField, FqContext, MAX_TABLE_Q,
};
pub use fp::FpElem;
pub use modular::{
    crt_symmetric, cyclic_convolve, ntt, ntt_primes, ModElem, NttPrime, MAX_LOG_LEN,
};
pub use ring::RingElem;
pub use scalar::{Overflow, Scalar, ScalarInto};

/// Errors from the exact-arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgError {
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("{t} is not coprime to the conductor {m}")]
    NotCoprime { t: i64, m: u32 },
    #[error("element is not rational: a non-constant coefficient is nonzero")]
    NotRational,
    #[error("element has a non-integral coefficient")]
    NotIntegral,
    #[error("expected {expected} coefficients, got {got}")]
    BadLength { expected: usize, got: usize },
    #[error("field of size {0} exceeds the lookup-table limit")]
    FieldTooLarge(u64),
    #[error("no embedding of F_{}^{} into F_{}^{}", small.0, small.1, big.0, big.1)]
    NoEmbedding { small: (u32, u32), big: (u32, u32) },
    #[error(transparent)]
    Overflow(#[from] Overflow),
}
