//! Swan conductors and inertia invariants at `∞`.
//!
//! For `Sym^k` these come from the counts of [`super::multi`]. For a general
//! highest weight, the weight spaces `V_λ[J]` with `C_J = 0` carry the
//! tame part, and the invariants of the signed shift `g` on their sum are
//! `(1/(n+1))·Σ_{j≤n} tr(g^j)` when `g^{n+1} = ε^{|μ|}` is trivial, with each
//! trace read off the Schur polynomial of `g^j·diag(t)`.

use super::multi::{multi_index_set, Characteristic};
use super::torus::shifted_schur;
use super::InvError;
use crate::weylchar::HighestWeight;
use num_bigint::BigInt;
use num_rational::BigRational;

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

fn check_char(nplus1: u32, ch: Characteristic) -> Result<(), InvError> {
    match ch {
        Characteristic::Prime(p) if nplus1.is_multiple_of(p) => {
            Err(InvError::CharDividesOrder { p, nplus1 })
        }
        _ => Ok(()),
    }
}

/// `Sw_∞(Sym^k Kl_{n+1}) = (binom(n+k, n) − d(k, n+1, p))/(n+1)`.
pub fn swan_infinity(nplus1: u32, k: u32, ch: Characteristic) -> Result<BigRational, InvError> {
    check_char(nplus1, ch)?;
    let d = multi_index_set(nplus1, k, ch)?.d() as u64;
    let total = binomial((nplus1 - 1 + k) as u64, (nplus1 - 1) as u64);
    let swan = BigRational::new(BigInt::from(total - d), BigInt::from(nplus1));
    if !swan.is_integer() {
        return Err(InvError::NonIntegerSwan(format!(
            "Sym^{k} Kl_{nplus1} ({ch}): {swan}"
        )));
    }
    Ok(swan)
}

/// Local data of `Kl_{n+1}^λ` at `∞`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfinityData {
    /// `dim V_λ`.
    pub dim: u64,
    /// Dimension of the tame part: weight spaces with `C_J = 0`.
    pub tame: u64,
    /// Swan conductor `(dim − tame)/(n+1)`.
    pub swan: u64,
    /// Dimension of the inertia invariants.
    pub invariants: u64,
}

/// Swan conductor and invariants at `∞` for the highest weight `λ`.
pub fn infinity_data(
    nplus1: u32,
    lambda: &HighestWeight,
    ch: Characteristic,
) -> Result<InfinityData, InvError> {
    lambda.validate(nplus1)?;
    check_char(nplus1, ch)?;
    let mu = lambda.mu();
    let n1 = nplus1 as usize;
    let eps = if n1.is_multiple_of(2) { -1 } else { 1 };
    let zeros = multi_index_set(nplus1, lambda.boxes(), ch)?;
    let dim = lambda.dimension(nplus1) as u64;
    let mut traces = Vec::with_capacity(n1);
    for j in 0..n1 {
        let s = shifted_schur(n1, &mu, j, eps)?;
        traces.push(zeros.indices.iter().map(|w| s.coeff(w)).sum::<i64>());
    }
    let tame = traces[0] as u64;
    // g^{n+1} is the scalar ε^{|μ|}; when it is −1 nothing is invariant.
    let total: i64 = if eps == -1 && lambda.boxes() % 2 == 1 {
        0
    } else {
        traces.iter().sum()
    };
    if !(dim - tame).is_multiple_of(nplus1 as u64) {
        return Err(InvError::NonIntegerSwan(format!(
            "{lambda} for Kl_{nplus1} ({ch}): {}/{nplus1}",
            dim - tame
        )));
    }
    if total < 0 || total % nplus1 as i64 != 0 {
        return Err(InvError::NegativeDimension(format!(
            "invariant count {total}/{nplus1} at ∞ for {lambda}"
        )));
    }
    Ok(InfinityData {
        dim,
        tame,
        swan: (dim - tame) / nplus1 as u64,
        invariants: (total / nplus1 as i64) as u64,
    })
}
