//! Inertia invariants at `0`: the Fu–Wan generating series and the traces
//! of Frobenius on the invariants.
//!
//! The monodromy at `0` is unipotent with a single Jordan block, so the
//! invariants of `V_λ` are counted by the principal grading:
//! `Σ_u m(u) x^u = (1 − x)·s_μ(1, x, …, x^n)` truncated at `⌊n|μ|/2⌋`, with
//! `E(−u)` occurring `m(u)` times. For `Sym^k` this is the product
//! `∏_{i=n+1}^{n+k}(1 − x^i) / ∏_{i=2}^{k}(1 − x^i)`.

use super::torus::shifted_schur;
use super::{InvError, RatFunc};
use crate::weylchar::HighestWeight;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

fn one_minus_power(i: usize) -> Vec<BigRational> {
    let mut v = vec![BigRational::zero(); i + 1];
    v[0] = BigRational::from_integer(1.into());
    v[i] = BigRational::from_integer((-1).into());
    v
}

/// `∏_{i=n+1}^{n+k}(1 − x^i) / ∏_{i=2}^{k}(1 − x^i)`.
pub fn mk_series(nplus1: u32, k: u32) -> RatFunc {
    let n = nplus1 as usize - 1;
    let mut r = RatFunc::one();
    for i in n + 1..=n + k as usize {
        r = &r * &RatFunc::polynomial(one_minus_power(i));
    }
    for i in 2..=k as usize {
        let inv = RatFunc::new(
            vec![BigRational::from_integer(1.into())],
            one_minus_power(i),
        )
        .expect("non-zero");
        r = &r * &inv;
    }
    r
}

/// `m_k(u)` for `u = 0..=⌊nk/2⌋`.
pub fn mk_coeffs(nplus1: u32, k: u32) -> Vec<i64> {
    let len = ((nplus1 as usize - 1) * k as usize) / 2 + 1;
    mk_series(nplus1, k)
        .integer_series(len)
        .expect("the series is a polynomial with integer coefficients")
        .into_iter()
        .map(|c| c.to_i64().expect("small coefficient"))
        .collect()
}

/// `Σ_u m_k(u)·p^u`, the trace of Frobenius on the invariants at `0`.
pub fn inv0_trace(nplus1: u32, k: u32, p: u32) -> BigInt {
    weighted_sum(&mk_coeffs(nplus1, k), p)
}

/// Dimension of the invariants at `0` of `Sym^k`.
pub fn inv0_dim(nplus1: u32, k: u32) -> u64 {
    mk_coeffs(nplus1, k).iter().sum::<i64>() as u64
}

/// `m_λ(u)` for `u = 0..=⌊n|μ|/2⌋`, the multiplicity of `E(−u)` in the
/// invariants at `0` of `Kl_{n+1}^λ`.
pub fn inv0_coeffs(nplus1: u32, lambda: &HighestWeight) -> Result<Vec<i64>, InvError> {
    lambda.validate(nplus1)?;
    let n = nplus1 as usize - 1;
    let mu = lambda.mu();
    let boxes = lambda.boxes() as usize;
    let len = n * boxes / 2 + 1;
    let s = shifted_schur(nplus1 as usize, &mu, 0, 1)?;
    let mut principal = vec![0i64; n * boxes + 2];
    for (exps, c) in s.terms() {
        let deg: usize = exps.iter().enumerate().map(|(i, &e)| i * e as usize).sum();
        principal[deg] += c;
    }
    let coeffs: Vec<i64> = (0..len)
        .map(|u| principal[u] - if u > 0 { principal[u - 1] } else { 0 })
        .collect();
    if let Some(bad) = coeffs.iter().find(|&&c| c < 0) {
        return Err(InvError::NegativeDimension(format!(
            "multiplicity {bad} at 0 for {lambda}"
        )));
    }
    Ok(coeffs)
}

/// `Σ_u m_λ(u)·p^u`.
pub fn inv0_trace_weight(nplus1: u32, lambda: &HighestWeight, p: u32) -> Result<BigInt, InvError> {
    Ok(weighted_sum(&inv0_coeffs(nplus1, lambda)?, p))
}

fn weighted_sum(coeffs: &[i64], p: u32) -> BigInt {
    coeffs
        .iter()
        .enumerate()
        .map(|(u, &m)| BigInt::from(m) * BigInt::from(p).pow(u as u32))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_product_is_a_polynomial() {
        assert!(mk_series(3, 4).is_polynomial());
        assert_eq!(mk_coeffs(3, 4), vec![1, 0, 1, 0, 1]);
    }
}
