//! Hodge numbers `h^{p, w−p}` of the de Rham realizations, `w = n|μ| + 1`.

use super::series::mk_series;
use super::InvError;
use crate::weylchar::HighestWeight;
use num_integer::Integer;
use num_traits::ToPrimitive;
use std::collections::BTreeMap;

/// Non-zero Hodge numbers of `M_{n+1}^k`, keyed by `p`.
///
/// When `gcd(k, n+1) = 1`, `h^p` for `2p ≤ nk + 1` is the coefficient of `t^p`
/// in `(1 − t)·[n+k choose k]_t · t^{n+1}/(1 − t^{n+1})`. When `n = 2` and
/// `3 | k`, `h^p` for `p ≤ k` is `⌊p/6⌋ + [p ≡ 3, 5 mod 6] − δ_{p,k}`. The
/// remaining values follow from Hodge symmetry. For odd `nk` the middle
/// number `h^{(nk+1)/2}` is not reached by symmetry and is read off the same
/// series (it is `1` for `Sym³Kl₂`). The Kronecker correction
/// applies in every residue class: without it at `p ≡ 3 mod 6` the total
/// for `k = 3` and `k = 9` exceeds the motive's dimension.
pub fn hodge_numbers(nplus1: u32, k: u32) -> Result<BTreeMap<u32, u32>, InvError> {
    if nplus1 < 2 || k == 0 {
        return Err(InvError::BadParameters(format!(
            "n + 1 = {nplus1}, k = {k}"
        )));
    }
    let n = nplus1 - 1;
    let weight = n * k + 1;
    let mut lower: BTreeMap<u32, u32> = BTreeMap::new();
    if k.gcd(&nplus1) == 1 {
        let half = (n * k).div_ceil(2);
        let c = mk_series(nplus1, k).integer_series(half as usize + 1)?;
        for p in 0..=half {
            let mut h = 0i64;
            let mut j = nplus1;
            while j <= p {
                h += c[(p - j) as usize].to_i64().expect("small coefficient");
                j += nplus1;
            }
            if h < 0 {
                return Err(InvError::NegativeDimension(format!(
                    "h^{p} = {h} for Sym^{k} Kl_{nplus1}"
                )));
            }
            if h > 0 {
                lower.insert(p, h as u32);
            }
        }
    } else if n == 2 && k.is_multiple_of(3) {
        for p in 0..=k {
            let base = p / 6 + u32::from(matches!(p % 6, 3 | 5));
            let h = base
                .checked_sub(u32::from(p == k))
                .expect("the Kronecker term removes an existing class");
            if h > 0 {
                lower.insert(p, h);
            }
        }
    } else if nplus1 == 4 && k == 4 {
        lower.insert(4, 1);
    } else {
        return Err(InvError::OutOfScope(format!(
            "Hodge numbers of Sym^{k} Kl_{nplus1}"
        )));
    }
    Ok(reflect(lower, weight))
}

/// Non-zero Hodge numbers of `M_{n+1}^λ`; symmetric powers defer to
/// [`hodge_numbers`], and `λ = (2,1)`, `(2,2)` for `n + 1 = 3` use the known
/// tables.
pub fn hodge_numbers_weight(
    nplus1: u32,
    lambda: &HighestWeight,
) -> Result<BTreeMap<u32, u32>, InvError> {
    lambda.validate(nplus1)?;
    if let [k] = lambda.coords() {
        return hodge_numbers(nplus1, *k);
    }
    let weight = lambda.motive_weight(nplus1);
    let lower = match (nplus1, lambda.coords()) {
        (3, [2, 1]) => BTreeMap::from([(4, 1)]),
        (3, [2, 2]) => BTreeMap::from([(5, 1)]),
        _ => {
            return Err(InvError::OutOfScope(format!(
                "Hodge numbers of {lambda} for Kl_{nplus1}"
            )))
        }
    };
    Ok(reflect(lower, weight))
}

fn reflect(lower: BTreeMap<u32, u32>, weight: u32) -> BTreeMap<u32, u32> {
    let mut out = lower.clone();
    for (p, h) in lower {
        if 2 * p < weight {
            out.insert(weight - p, h);
        }
    }
    out
}
