//! Moments `m = Σ_{a ∈ F_q^×} s_{μ(λ)}(α_1(a), …, α_{n+1}(a))`.
//!
//! Two evaluation methods share the same algebra. The exact method works in
//! `Z[ζ_p]` with machine-integer coefficients and falls back to big integers
//! on overflow. The modular method maps `ζ_p` to a root of unity modulo
//! several NTT primes, builds the Kloosterman tables by fast convolution,
//! and reconstructs the integer by the Chinese remainder theorem; the
//! Weil bound on the eigenvalues bounds the result, and one extra prime
//! checks the reconstruction.

use super::schur::schur_from_elementary;
use super::symm::{
    check_tower, elementary_from_power_sums, power_sums_at, tower_depth, tower_embeddings, FrobSymm,
};
use super::weight::HighestWeight;
use super::WeylError;
use crate::exactalg::{
    crt_symmetric, fq_context, ntt_primes, prime::is_prime, AlgError, CycElem, FqContext, ModElem,
    NttPrime, RingElem, Scalar, ScalarInto,
};
use crate::klsum::{kl_values_mod, KlStore, KlTable};
use crate::CycInt;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use rayon::prelude::*;
use std::sync::{Arc, OnceLock};

/// Largest extension degree `r·⌊(n+1)/2⌋` a tower computation may reach
/// without `force`.
pub const MAX_TOWER_DEGREE: u32 = 4;

/// [`MomentMethod::Auto`] uses exact arithmetic when the largest field in
/// the tower has at most this many elements.
pub const AUTO_EXACT_MAX_Q: u64 = 128;

/// How a moment is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MomentMethod {
    /// Exact cyclotomic arithmetic on cached Kloosterman tables.
    Exact,
    /// Residues modulo NTT primes, reconstructed by CRT.
    Modular,
    /// Exact for small fields, modular otherwise.
    #[default]
    Auto,
}

/// Tuning knobs for moment evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MomentOptions {
    /// Use the character `x ↦ ψ(c·x)` with this `c`.
    pub psi_scale: u32,
    /// Evaluation method.
    pub method: MomentMethod,
    /// Lift the tower-degree guard.
    pub force: bool,
}

impl Default for MomentOptions {
    fn default() -> Self {
        Self {
            psi_scale: 1,
            method: MomentMethod::Auto,
            force: false,
        }
    }
}

/// A computed moment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentReport {
    /// Rank `n+1`.
    pub nplus1: u32,
    /// Highest weight.
    pub lambda: HighestWeight,
    /// Characteristic.
    pub p: u32,
    /// The moment over `F_p`.
    pub moment: BigInt,
    /// Normalized trace of an attached modularity identity, when known.
    pub a_value: Option<BigRational>,
}

/// A process-wide in-memory table store with the default backend.
pub fn default_store() -> &'static KlStore {
    static STORE: OnceLock<KlStore> = OnceLock::new();
    STORE.get_or_init(KlStore::default)
}

/// `m_{n+1}^λ(p)` with default options and the process-wide store.
pub fn moment(nplus1: u32, lambda: &HighestWeight, p: u32) -> Result<MomentReport, WeylError> {
    moment_with(default_store(), nplus1, lambda, p, MomentOptions::default())
}

/// `m_{n+1}^λ(p)` using `store` for exact tables.
pub fn moment_with(
    store: &KlStore,
    nplus1: u32,
    lambda: &HighestWeight,
    p: u32,
    opts: MomentOptions,
) -> Result<MomentReport, WeylError> {
    let moment = moment_over(store, nplus1, lambda, p, 1, opts)?;
    Ok(MomentReport {
        nplus1,
        lambda: lambda.clone(),
        p,
        moment,
        a_value: None,
    })
}

/// The moment over `F_{p^r}`: the sum over `a ∈ F_{p^r}^×` of the Schur
/// trace of the `F_{p^r}`-Frobenius eigenvalues.
pub fn moment_over(
    store: &KlStore,
    nplus1: u32,
    lambda: &HighestWeight,
    p: u32,
    r: u32,
    opts: MomentOptions,
) -> Result<BigInt, WeylError> {
    lambda.validate(nplus1)?;
    if !is_prime(p as u64) {
        return Err(AlgError::NonPrime(p as u64).into());
    }
    let half = tower_depth(nplus1) as u32;
    let top_degree = r * half.max(1);
    if top_degree > MAX_TOWER_DEGREE && !opts.force {
        return Err(WeylError::DeskScaleExceeded {
            depth: r,
            degree: top_degree,
            limit: MAX_TOWER_DEGREE,
        });
    }
    let mu = lambda.mu();
    if mu.is_empty() {
        return Ok(BigInt::from(p).pow(r) - 1);
    }
    let top_q = (p as u64).checked_pow(top_degree).unwrap_or(u64::MAX);
    let method = match opts.method {
        MomentMethod::Auto if top_q <= AUTO_EXACT_MAX_Q => MomentMethod::Exact,
        MomentMethod::Auto => MomentMethod::Modular,
        m => m,
    };
    match method {
        MomentMethod::Exact => {
            let tower = (1..=half.max(1))
                .map(|j| store.table_scaled(nplus1, p, r * j, opts.psi_scale))
                .collect::<Result<Vec<_>, _>>()?;
            moment_exact(&tower, &mu)
        }
        _ => moment_modular(nplus1, p, r, lambda, &mu, opts.psi_scale),
    }
}

/// `[m(p), m(p²), …, m(p^depth)]`.
pub fn moment_tower(
    store: &KlStore,
    nplus1: u32,
    lambda: &HighestWeight,
    p: u32,
    depth: u32,
    opts: MomentOptions,
) -> Result<Vec<BigInt>, WeylError> {
    let degree = depth * (tower_depth(nplus1) as u32).max(1);
    if degree > MAX_TOWER_DEGREE && !opts.force {
        return Err(WeylError::DeskScaleExceeded {
            depth,
            degree,
            limit: MAX_TOWER_DEGREE,
        });
    }
    (1..=depth)
        .map(|r| moment_over(store, nplus1, lambda, p, r, opts))
        .collect()
}

/// `s_μ` of the eigenvalues described by `fs`.
pub fn schur_trace(fs: &FrobSymm, mu: &[usize]) -> Result<CycInt, WeylError> {
    let rows = mu.iter().filter(|&&x| x > 0).count();
    if rows > fs.nplus1 as usize {
        return Err(WeylError::TooManyRows {
            rows,
            max: fs.nplus1 as usize,
        });
    }
    Ok(schur_from_elementary(&fs.elem, &mu[..rows])?)
}

fn schur_at<T: Scalar>(
    nplus1: u32,
    q: u64,
    sums: &[&CycInt],
    mu: &[usize],
) -> Result<CycElem<T>, WeylError>
where
    BigInt: ScalarInto<T>,
{
    let negate = (nplus1 - 1) % 2 == 1;
    let sums = sums
        .iter()
        .map(|k| {
            let v = k.convert::<T>()?;
            if negate {
                v.try_neg()
            } else {
                Ok(v)
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    let e = elementary_from_power_sums(nplus1, q, &sums)?;
    Ok(schur_from_elementary(&e, mu)?)
}

fn schur_at_exact(
    nplus1: u32,
    q: u64,
    sums: &[&CycInt],
    mu: &[usize],
) -> Result<CycInt, WeylError> {
    match schur_at::<i128>(nplus1, q, sums, mu) {
        Ok(v) => Ok(v.convert()?),
        Err(WeylError::Overflow(_)) => schur_at::<BigInt>(nplus1, q, sums, mu),
        Err(e) => Err(e),
    }
}

fn moment_exact(tower: &[Arc<KlTable>], mu: &[usize]) -> Result<BigInt, WeylError> {
    check_tower(tower)?;
    let emb = tower_embeddings(tower)?;
    let base = &tower[0];
    let (nplus1, q, p) = (base.nplus1(), base.q(), base.p());
    let total = (1..q)
        .into_par_iter()
        .map(|a| {
            let sums = power_sums_at(tower, &emb, a)?;
            schur_at_exact(nplus1, q as u64, &sums, mu)
        })
        .try_reduce(|| CycInt::zero(p), |x, y| Ok(&x + &y))?;
    let value = total.to_rational()?;
    if !value.is_integer() {
        return Err(WeylError::NonIntegral(format!("moment {value}")));
    }
    Ok(value.to_integer())
}

/// An upper bound for `|m|`: `(q−1)·dim V_λ·q^{⌈n|μ|/2⌉}`.
fn moment_bound(nplus1: u32, q: u64, lambda: &HighestWeight) -> BigInt {
    let n = nplus1 - 1;
    let exp = (n * lambda.boxes()).div_ceil(2);
    BigInt::from(q - 1) * BigInt::from(lambda.dimension(nplus1)) * BigInt::from(q).pow(exp)
}

fn moment_modular(
    nplus1: u32,
    p: u32,
    r: u32,
    lambda: &HighestWeight,
    mu: &[usize],
    psi_scale: u32,
) -> Result<BigInt, WeylError> {
    let half = tower_depth(nplus1).max(1) as u32;
    let ctxs = (1..=half)
        .map(|j| fq_context(p, r * j))
        .collect::<Result<Vec<_>, _>>()?;
    let emb = ctxs
        .iter()
        .map(|c| c.embedding_from(&ctxs[0]))
        .collect::<Result<Vec<_>, _>>()?;
    let q = ctxs[0].q() as u64;
    let bound = moment_bound(nplus1, q, lambda) * 2;
    let mut count = 1;
    loop {
        let primes = ntt_primes(p, count);
        let product = primes.iter().fold(BigInt::one(), |acc, pr| acc * pr.ell);
        if product > bound {
            break;
        }
        count += 1;
    }
    // One more prime than the bound needs, to check the reconstruction.
    let primes = ntt_primes(p, count + 1);
    let residues = primes
        .par_iter()
        .map(|pr| moment_residue(nplus1, &ctxs, &emb, mu, psi_scale, pr))
        .collect::<Result<Vec<u64>, WeylError>>()?;
    let moduli: Vec<u64> = primes.iter().map(|pr| pr.ell).collect();
    let value = crt_symmetric(&residues[..count], &moduli[..count]);
    let extra = BigInt::from(moduli[count]);
    let expect = ((&value % &extra) + &extra) % &extra;
    if expect.to_u64() != Some(residues[count]) || value.abs() * 2 > bound {
        return Err(WeylError::NonIntegral(format!(
            "modular reconstruction of the moment is inconsistent modulo {}",
            moduli[count]
        )));
    }
    Ok(value)
}

fn moment_residue(
    nplus1: u32,
    ctxs: &[Arc<FqContext>],
    emb: &[Vec<u32>],
    mu: &[usize],
    psi_scale: u32,
    prime: &NttPrime,
) -> Result<u64, WeylError> {
    let ell = prime.ell;
    let tables = ctxs
        .iter()
        .map(|c| kl_values_mod(c, nplus1, psi_scale, prime))
        .collect::<Result<Vec<_>, _>>()?;
    let base = &ctxs[0];
    let q = base.q() as u64;
    let n = nplus1 - 1;
    let half = tower_depth(nplus1);
    let sign = if n % 2 == 1 { ell - 1 } else { 1 };
    let minus_one = base.p() - 1;
    let lookup = |j: usize, a: u32| -> ModElem {
        let enc = emb[j][a as usize];
        let log = ctxs[j].log(enc).expect("embedded units are units");
        ModElem::from_residue(tables[j][log as usize], ell)
            .r_mul(&ModElem::from_residue(sign, ell))
            .expect("modular")
    };
    let inverses: Vec<ModElem> = (1..=half.max(1))
        .map(|j| ModElem::new(j as i64, ell).inv().expect("j < ℓ"))
        .collect();
    let newton = |sums: &[ModElem]| -> Vec<ModElem> {
        let mut e = vec![ModElem::new(1, ell)];
        for j in 1..=half {
            let mut acc = ModElem::new(0, ell);
            for i in 1..=j {
                let term = e[j - i].r_mul(&sums[i - 1]).expect("modular");
                acc = if i % 2 == 1 {
                    acc.r_add(&term)
                } else {
                    acc.r_sub(&term)
                }
                .expect("modular");
            }
            e.push(acc.r_mul(&inverses[j - 1]).expect("modular"));
        }
        e
    };
    let qm = ModElem::new(0, ell)
        .r_add(&ModElem::from_residue(q % ell, ell))
        .expect("modular");
    let top = n * (n + 1) / 2;
    let total = (1..q as u32)
        .into_par_iter()
        .map(|a| {
            let dual = if nplus1.is_multiple_of(2) {
                a
            } else {
                base.mul_enc(a, minus_one)
            };
            let sums: Vec<ModElem> = (0..half).map(|j| lookup(j, a)).collect();
            let conj_sums: Vec<ModElem> = (0..half).map(|j| lookup(j, dual)).collect();
            let mut e = newton(&sums);
            let ebar = newton(&conj_sums);
            for k in half + 1..=nplus1 as usize {
                let j = nplus1 as usize - k;
                let scale = qm.pow((top - n * j as u32) as u64);
                e.push(ebar[j].r_mul(&scale).expect("modular"));
            }
            schur_from_elementary(&e, mu)
                .expect("modular arithmetic cannot overflow")
                .value()
        })
        .reduce(|| 0, |x, y| ((x as u128 + y as u128) % ell as u128) as u64);
    Ok(total)
}
