//! Kloosterman tables reduced modulo an NTT prime `ℓ`, under the ring map
//! `Z[ζ_p] → Z/ℓ` sending `ζ_p` to the prime's `p`-th root of unity.
//!
//! Each level `Kl_{m+1} = ψ ∗ Kl_m` is a cyclic convolution over `F_q^×`,
//! computed with number-theoretic transforms in `O(q log q)`.

use super::KlError;
use crate::exactalg::{cyclic_convolve, ntt, prime::pow_mod, FqContext, NttPrime, MAX_LOG_LEN};

/// `Kl_{n+1}(g^i; q) mod ℓ` for `i = 0..q−1` with the character
/// `x ↦ ζ_p^{c·Tr(x)}`, indexed by discrete logarithm like
/// [`KlTable`](super::KlTable).
pub fn kl_values_mod(
    ctx: &FqContext,
    nplus1: u32,
    psi_scale: u32,
    prime: &NttPrime,
) -> Result<Vec<u64>, KlError> {
    let p = ctx.p();
    let qm1 = ctx.q() as usize - 1;
    if nplus1 < 1 || psi_scale.is_multiple_of(p) {
        return Err(KlError::BadParameters {
            nplus1,
            q: ctx.q() as u64,
        });
    }
    let len = (2 * qm1 - 1).next_power_of_two();
    if len.trailing_zeros() > MAX_LOG_LEN {
        return Err(KlError::TooLarge {
            nplus1,
            q: ctx.q() as u64,
        });
    }
    let powers: Vec<u64> = (0..p as u64)
        .map(|t| pow_mod(prime.zeta, t, prime.ell))
        .collect();
    let f: Vec<u64> = (0..qm1)
        .map(|j| {
            powers[(ctx.trace_of_power(j as u64) as u64 * psi_scale as u64 % p as u64) as usize]
        })
        .collect();
    let mut fhat = vec![0u64; len];
    fhat[..qm1].copy_from_slice(&f);
    ntt(&mut fhat, prime, false);
    let mut cur = f;
    for _ in 1..nplus1 {
        cur = cyclic_convolve(&fhat, &cur, prime);
    }
    Ok(cur)
}
