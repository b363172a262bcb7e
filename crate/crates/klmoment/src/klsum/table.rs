//! Table construction: the naive oracle and the cyclic-convolution backend.

use super::KlError;
use crate::exactalg::{fq_context, CycElem, ExtElem, FqContext};
use crate::CycInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::sync::Arc;

/// How a [`KlTable`] was computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    /// The literal `(q−1)^n`-term sum at every point.
    Naive,
    /// Level-by-level convolution over the cyclic group `F_q^×`.
    Convolution,
}

/// The map `a ↦ Kl_{n+1}(a; q)` over `F_q^×`, indexed by the discrete
/// logarithm of `a` with respect to the smallest generator of `F_q^×`.
#[derive(Debug, Clone)]
pub struct KlTable {
    nplus1: u32,
    ctx: Arc<FqContext>,
    psi_scale: u32,
    backend: Backend,
    values: Vec<CycInt>,
}

impl KlTable {
    pub(crate) fn from_parts(
        nplus1: u32,
        ctx: Arc<FqContext>,
        psi_scale: u32,
        backend: Backend,
        values: Vec<CycInt>,
    ) -> Self {
        debug_assert_eq!(values.len(), ctx.q() as usize - 1);
        Self {
            nplus1,
            ctx,
            psi_scale,
            backend,
            values,
        }
    }

    /// Number of variables plus one.
    pub fn nplus1(&self) -> u32 {
        self.nplus1
    }

    /// Characteristic.
    pub fn p(&self) -> u32 {
        self.ctx.p()
    }

    /// Extension degree.
    pub fn r(&self) -> u32 {
        self.ctx.r()
    }

    /// Field size.
    pub fn q(&self) -> u32 {
        self.ctx.q()
    }

    /// The additive character used is `x ↦ ζ_p^{c·Tr(x)}` with this `c`.
    pub fn psi_scale(&self) -> u32 {
        self.psi_scale
    }

    /// Backend that produced the table.
    pub fn backend(&self) -> Backend {
        self.backend
    }

    /// Field lookup tables.
    pub fn context(&self) -> &Arc<FqContext> {
        &self.ctx
    }

    /// Encoding of the generator used for indexing.
    pub fn generator(&self) -> u32 {
        self.ctx.generator()
    }

    /// All values in discrete-log order.
    pub fn values(&self) -> &[CycInt] {
        &self.values
    }

    /// `Kl(g^i; q)`.
    pub fn at_log(&self, i: u64) -> &CycInt {
        &self.values[(i % (self.q() as u64 - 1)) as usize]
    }

    /// Value at the element with the given encoding.
    pub fn at_encoded(&self, enc: u32) -> Result<&CycInt, KlError> {
        let l = self.ctx.log(enc).ok_or(KlError::ZeroPoint)?;
        Ok(&self.values[l as usize])
    }

    /// Value at a field element.
    pub fn at(&self, a: &ExtElem) -> Result<&CycInt, KlError> {
        self.at_encoded(a.encode())
    }
}

/// The additive character `ψ(x) = ζ_p^x` on `F_p`.
pub fn psi(p: u32, x: i64) -> CycInt {
    CycInt::zeta_pow(p, x)
}

fn check_params(nplus1: u32, q: u32) -> Result<(), KlError> {
    if nplus1 < 1 || q < 2 {
        return Err(KlError::BadParameters {
            nplus1,
            q: q as u64,
        });
    }
    // All intermediate counts are at most (q−1)^n and must fit in a u128.
    let bits = (nplus1 - 1) as f64 * ((q - 1).max(1) as f64).log2();
    if bits >= 126.0 {
        return Err(KlError::TooLarge {
            nplus1,
            q: q as u64,
        });
    }
    Ok(())
}

fn counts_to_cyc(p: u32, counts: &[u128]) -> CycInt {
    let full: Vec<i128> = counts.iter().map(|&c| c as i128).collect();
    CycElem::<i128>::from_cyclic(p, full)
        .and_then(|c| c.convert())
        .expect("counts below 2^126 reduce without overflow")
}

/// The literal sum `Σ ψ(Tr(x₁ + … + x_n + a/(x₁⋯x_n)))` over `(F_q^×)^n`.
pub fn kl_naive(nplus1: u32, p: u32, r: u32, a: &ExtElem) -> Result<CycInt, KlError> {
    let ctx = fq_context(p, r)?;
    if a.field().as_ref() != ctx.field().as_ref() {
        return Err(KlError::BadParameters {
            nplus1,
            q: ctx.q() as u64,
        });
    }
    if a.is_zero() {
        return Err(KlError::ZeroPoint);
    }
    check_params(nplus1, ctx.q())?;
    Ok(counts_to_cyc(p, &naive_counts(&ctx, nplus1, a.encode(), 1)))
}

fn naive_counts(ctx: &FqContext, nplus1: u32, a: u32, scale: u32) -> Vec<u128> {
    let p = ctx.p();
    let q = ctx.q();
    let n = nplus1 as usize - 1;
    let mut counts = vec![0u128; p as usize];
    // Odometer over (x_1, …, x_n) ∈ (F_q^×)^n, each x_i stored by encoding.
    let mut xs = vec![1u32; n];
    loop {
        let mut sum = 0u32;
        let mut prod = 1u32;
        for &x in &xs {
            sum = ctx.add_enc(sum, x);
            prod = ctx.mul_enc(prod, x);
        }
        let inv = ctx.exp(q as u64 - 1 - ctx.log(prod).expect("product of units") as u64);
        sum = ctx.add_enc(sum, ctx.mul_enc(a, inv));
        let t = (ctx.trace_of(sum) as u64 * scale as u64 % p as u64) as usize;
        counts[t] += 1;
        let mut k = 0;
        loop {
            if k == n {
                return counts;
            }
            xs[k] += 1;
            if xs[k] < q {
                break;
            }
            xs[k] = 1;
            k += 1;
        }
    }
}

/// Builds the full table with the standard character `ψ(x) = ζ_p^x`.
pub fn kl_table(nplus1: u32, p: u32, r: u32, backend: Backend) -> Result<KlTable, KlError> {
    kl_table_scaled(nplus1, p, r, backend, 1)
}

/// Builds the full table with the character `x ↦ ψ(c·x)`.
pub fn kl_table_scaled(
    nplus1: u32,
    p: u32,
    r: u32,
    backend: Backend,
    c: u32,
) -> Result<KlTable, KlError> {
    let ctx = fq_context(p, r)?;
    let q = ctx.q();
    check_params(nplus1, q)?;
    if c.is_multiple_of(p) {
        return Err(KlError::BadParameters {
            nplus1,
            q: q as u64,
        });
    }
    let values = match backend {
        Backend::Naive => (0..q - 1)
            .into_par_iter()
            .map(|i| counts_to_cyc(p, &naive_counts(&ctx, nplus1, ctx.exp(i as u64), c)))
            .collect(),
        Backend::Convolution => convolution_values(&ctx, nplus1, c),
    };
    Ok(KlTable::from_parts(nplus1, ctx, c, backend, values))
}

fn convolution_values(ctx: &FqContext, nplus1: u32, c: u32) -> Vec<CycInt> {
    let p = ctx.p() as usize;
    let qm1 = ctx.q() as usize - 1;
    // t[j] = c·Tr(g^j): ψ(g^j) = ζ_p^{t[j]}.
    let t: Vec<usize> = (0..qm1)
        .map(|j| ctx.trace_of_power(j as u64) as usize * c as usize % p)
        .collect();
    // Row i holds Kl_m(g^i) in Z[X]/(X^p − 1) as counts per exponent.
    let mut cur = vec![0u128; qm1 * p];
    for i in 0..qm1 {
        cur[i * p + t[i]] = 1;
    }
    for _level in 1..nplus1 {
        let mut next = vec![0u128; qm1 * p];
        next.par_chunks_mut(p).enumerate().for_each(|(i, row)| {
            for (j, &tj) in t.iter().enumerate() {
                let src_row = if i >= j { i - j } else { i + qm1 - j };
                let src = &cur[src_row * p..(src_row + 1) * p];
                // Multiplying by ζ^{tj} shifts exponent s to s + tj.
                let (head, tail) = src.split_at(p - tj);
                for (d, s) in row[tj..].iter_mut().zip(head) {
                    *d += *s;
                }
                for (d, s) in row[..tj].iter_mut().zip(tail) {
                    *d += *s;
                }
            }
        });
        cur = next;
    }
    cur.par_chunks(p)
        .map(|row| counts_to_cyc(p as u32, row))
        .collect()
}
