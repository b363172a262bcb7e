//! q-expansions of η-products and Hecke-relation checks.
//!
//! `∏(1 − q^n)` is expanded by Euler's pentagonal-number theorem and raised
//! to each exponent by exact series multiplication (or inversion, for
//! negative exponents).

use super::registry::{a_value, IdentityId};
use super::EvansError;
use crate::exactalg::prime::is_prime;
use num_bigint::BigInt;
use num_rational::{BigRational, Rational32};
use num_traits::{One, Zero};

/// The η-product `∏ η(m_i τ)^{e_i}`, expanded to `q^N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaProduct {
    /// Pairs `(m, e)`.
    pub factors: Vec<(u32, i32)>,
    /// Number of coefficients `a(1), …, a(N)` to produce.
    pub truncation: usize,
}

impl EtaProduct {
    /// A new product.
    pub fn new(factors: &[(u32, i32)], truncation: usize) -> Self {
        Self {
            factors: factors.to_vec(),
            truncation,
        }
    }

    /// `Σ m·e`; the leading power of `q` is this divided by 24.
    pub fn q_exponent_sum(&self) -> i64 {
        self.factors.iter().map(|&(m, e)| m as i64 * e as i64).sum()
    }

    /// Weight `Σe/2`.
    pub fn weight(&self) -> Rational32 {
        Rational32::new(self.factors.iter().map(|&(_, e)| e).sum(), 2)
    }
}

/// Coefficients of `∏_{n≥1}(1 − q^n)` below `q^len`.
fn euler_series(len: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); len];
    for k in 0i64.. {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let mut any = false;
        for g in [k * (3 * k - 1) / 2, k * (3 * k + 1) / 2] {
            if (g as usize) < len {
                out[g as usize] = BigInt::from(sign);
                any = true;
            }
        }
        if !any {
            break;
        }
    }
    out
}

fn mul_trunc(a: &[BigInt], b: &[BigInt], len: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); len];
    for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (j, y) in b.iter().take(len - i).enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Inverse of a series with constant term `1`.
fn inv_trunc(a: &[BigInt], len: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); len];
    if len > 0 {
        out[0] = BigInt::one();
    }
    for n in 1..len {
        let s: BigInt = (1..=n.min(a.len() - 1)).map(|i| &a[i] * &out[n - i]).sum();
        out[n] = -s;
    }
    out
}

fn pow_trunc(base: &[BigInt], e: u32, len: usize) -> Vec<BigInt> {
    let mut result = vec![BigInt::zero(); len];
    if len > 0 {
        result[0] = BigInt::one();
    }
    let mut sq = base.to_vec();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            result = mul_trunc(&result, &sq, len);
        }
        e >>= 1;
        if e > 0 {
            sq = mul_trunc(&sq, &sq, len);
        }
    }
    result
}

/// `a(1), …, a(N)` of the η-product, where `a(n)` is the coefficient of
/// `q^n`.
pub fn eta_product(ep: &EtaProduct) -> Result<Vec<BigInt>, EvansError> {
    let sum = ep.q_exponent_sum();
    if sum.rem_euclid(24) != 0 {
        return Err(EvansError::NonIntegralPower { sum });
    }
    let shift = sum / 24;
    let n = ep.truncation;
    // Coefficients of the product without the leading q-power, up to q^{n - shift}.
    let len = (n as i64 + 1 - shift).max(0) as usize;
    let euler = euler_series(len);
    let mut series = vec![BigInt::zero(); len];
    if len > 0 {
        series[0] = BigInt::one();
    }
    for &(m, e) in &ep.factors {
        let mut dilated = vec![BigInt::zero(); len];
        for (i, c) in euler.iter().enumerate() {
            let j = i * m as usize;
            if j >= len {
                break;
            }
            dilated[j] = c.clone();
        }
        let base = if e < 0 {
            inv_trunc(&dilated, len)
        } else {
            dilated
        };
        series = mul_trunc(&series, &pow_trunc(&base, e.unsigned_abs(), len), len);
    }
    Ok((1..=n as i64)
        .map(|k| {
            let idx = k - shift;
            if idx >= 0 && (idx as usize) < len {
                series[idx as usize].clone()
            } else {
                BigInt::zero()
            }
        })
        .collect())
}

/// Checks `a(p·m) = a(p)·a(m)` for `p ∤ m` and `a(p²) = a(p)² − p^{k−1}`
/// on a stream `coeffs[i] = a(i + 1)`.
pub fn hecke_check(coeffs: &[BigInt], k_f: u32, primes: &[u32]) -> Result<bool, EvansError> {
    let len = coeffs.len();
    let a = |n: usize| &coeffs[n - 1];
    for &p in primes {
        let p = p as usize;
        if p * p > len {
            return Err(EvansError::InsufficientLength {
                needed: p * p,
                got: len,
            });
        }
        let ap = a(p);
        if *a(p * p) != ap * ap - BigInt::from(p).pow(k_f - 1) {
            return Ok(false);
        }
        for m in (1..=len / p).filter(|m| m % p != 0) {
            if *a(p * m) != ap * a(m) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A candidate η-product for the form attached to an identity.
#[derive(Debug, Clone, Copy)]
pub struct EtaCandidate {
    /// Name of the target form.
    pub name: &'static str,
    /// Factors `(m, e)`.
    pub factors: &'static [(u32, i32)],
    /// Identity whose a-values the stream must match.
    pub identity: IdentityId,
    /// Largest prime compared.
    pub max_prime: u32,
    /// Primes used for the Hecke check.
    pub hecke_primes: &'static [u32],
}

/// Candidates for the level-6 weight-4 and level-14 weight-2 forms.
/// The second level-14 product is the weight-2 eta quotient of the elliptic
/// curve of conductor 14; the first has weight 4 and is expected to fail.
pub static ETA_CANDIDATES: [EtaCandidate; 3] = [
    EtaCandidate {
        name: "6.4.a.a",
        factors: &[(1, 2), (2, 2), (3, 2), (6, 2)],
        identity: IdentityId::Kl2K6,
        max_prime: 97,
        hecke_primes: &[5, 7, 11],
    },
    EtaCandidate {
        name: "14.2.a.a (squared factors)",
        factors: &[(1, 2), (2, 2), (7, 2), (14, 2)],
        identity: IdentityId::Kl3V21,
        max_prime: 23,
        hecke_primes: &[3, 5],
    },
    EtaCandidate {
        name: "14.2.a.a",
        factors: &[(1, 1), (2, 1), (7, 1), (14, 1)],
        identity: IdentityId::Kl3V21,
        max_prime: 23,
        hecke_primes: &[3, 5],
    },
];

/// Outcome of validating one candidate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateReport {
    /// Candidate name.
    pub name: &'static str,
    /// Weight of the product.
    pub weight: Rational32,
    /// Good primes compared.
    pub compared: Vec<u32>,
    /// `(p, stream value, a-value)` where they differ.
    pub mismatches: Vec<(u32, BigInt, BigRational)>,
    /// Result of [`hecke_check`] with the identity's form weight.
    pub hecke: bool,
}

impl CandidateReport {
    /// Accepted when every prime matches and the Hecke relations hold.
    pub fn accepted(&self) -> bool {
        self.mismatches.is_empty() && self.hecke
    }
}

/// Compares a candidate stream with the identity's a-values at every good
/// prime up to `max_prime`, and runs the Hecke check.
pub fn validate_candidate(c: &EtaCandidate) -> Result<CandidateReport, EvansError> {
    let e = c.identity.identity();
    let hecke_max = c
        .hecke_primes
        .iter()
        .map(|&p| (p * p) as usize)
        .max()
        .unwrap_or(0);
    let n = (c.max_prime as usize).max(hecke_max);
    let ep = EtaProduct::new(c.factors, n);
    let stream = eta_product(&ep)?;
    let compared: Vec<u32> = (2..=c.max_prime)
        .filter(|&p| is_prime(p as u64) && e.is_good(p))
        .collect();
    let mut mismatches = Vec::new();
    for &p in &compared {
        let a = a_value(c.identity, p)?;
        let s = &stream[p as usize - 1];
        if BigRational::from_integer(s.clone()) != a {
            mismatches.push((p, s.clone(), a));
        }
    }
    let hecke = hecke_check(&stream, e.form_weight, c.hecke_primes)?;
    Ok(CandidateReport {
        name: c.name,
        weight: ep.weight(),
        compared,
        mismatches,
        hecke,
    })
}
