//! Multivariate integer polynomials in torus coordinates `t_0, …, t_n`, used
//! to read weight-space traces off Schur polynomials.

use crate::exactalg::{Overflow, RingElem};
use crate::weylchar::schur_from_elementary;
use num_integer::Integer;
use std::collections::BTreeMap;

/// A polynomial in `t_0, …, t_n` with checked `i64` coefficients, stored by
/// exponent vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u16>, i64>,
}

impl MPoly {
    fn constant(nvars: usize, c: i64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(vec![0; nvars], c);
        }
        Self { nvars, terms }
    }

    fn monomial(exps: Vec<u16>, c: i64) -> Self {
        let nvars = exps.len();
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(exps, c);
        }
        Self { nvars, terms }
    }

    /// Coefficient of the monomial `t^J`.
    pub(crate) fn coeff(&self, exps: &[u32]) -> i64 {
        let key: Vec<u16> = exps.iter().map(|&e| e as u16).collect();
        self.terms.get(&key).copied().unwrap_or(0)
    }

    /// `(exponents, coefficient)` pairs.
    pub(crate) fn terms(&self) -> impl Iterator<Item = (&[u16], i64)> {
        self.terms.iter().map(|(k, &v)| (k.as_slice(), v))
    }

    fn combine(&self, o: &Self, sign: i64) -> Result<Self, Overflow> {
        let mut terms = self.terms.clone();
        for (k, &v) in &o.terms {
            let slot = terms.entry(k.clone()).or_insert(0);
            *slot = slot
                .checked_add(v.checked_mul(sign).ok_or(Overflow)?)
                .ok_or(Overflow)?;
            if *slot == 0 {
                terms.remove(k);
            }
        }
        Ok(Self {
            nvars: self.nvars,
            terms,
        })
    }
}

impl RingElem for MPoly {
    fn zero_like(&self) -> Self {
        Self::constant(self.nvars, 0)
    }
    fn one_like(&self) -> Self {
        Self::constant(self.nvars, 1)
    }
    fn is_zero_elem(&self) -> bool {
        self.terms.is_empty()
    }
    fn r_add(&self, o: &Self) -> Result<Self, Overflow> {
        self.combine(o, 1)
    }
    fn r_sub(&self, o: &Self) -> Result<Self, Overflow> {
        self.combine(o, -1)
    }
    fn r_mul(&self, o: &Self) -> Result<Self, Overflow> {
        let mut terms: BTreeMap<Vec<u16>, i64> = BTreeMap::new();
        for (a, &x) in &self.terms {
            for (b, &y) in &o.terms {
                let key: Vec<u16> = a.iter().zip(b).map(|(i, j)| i + j).collect();
                let prod = x.checked_mul(y).ok_or(Overflow)?;
                let slot = terms.entry(key).or_insert(0);
                *slot = slot.checked_add(prod).ok_or(Overflow)?;
            }
        }
        terms.retain(|_, v| *v != 0);
        Ok(Self {
            nvars: self.nvars,
            terms,
        })
    }
    fn r_scale(&self, k: i64) -> Result<Self, Overflow> {
        let mut terms = BTreeMap::new();
        for (e, &v) in &self.terms {
            let c = v.checked_mul(k).ok_or(Overflow)?;
            if c != 0 {
                terms.insert(e.clone(), c);
            }
        }
        Ok(Self {
            nvars: self.nvars,
            terms,
        })
    }
}

/// The Schur polynomial `s_μ` of the matrix `g^j·diag(t)`, where `g` is the
/// signed cyclic shift `v_i ↦ v_{i+1}`, `v_n ↦ ε v_0`.
///
/// The coefficient of `t^J` is the trace of `g^j` on the `J` weight space
/// of `V_μ` when `σ^j J = J`, and zero otherwise. Each cycle of `g^j`
/// (a residue class modulo `d = gcd(j, n+1)`, of length `L = (n+1)/d`)
/// passes `j/d` times through the signed entry, so it contributes the
/// factor `1 + (−1)^{L−1} ε^{j/d} u^L ∏ t_i` to `det(1 + u·g^j·diag(t))`.
pub(crate) fn shifted_schur(
    nplus1: usize,
    mu: &[usize],
    j: usize,
    eps: i64,
) -> Result<MPoly, Overflow> {
    let d = j.gcd(&nplus1);
    let len = nplus1 / d;
    let sign = if (j / d) % 2 == 1 { eps } else { 1 } * if len.is_multiple_of(2) { -1 } else { 1 };
    // det(1 + uM) as a list of MPoly coefficients of u^0..u^{n+1}.
    let mut det = vec![MPoly::constant(nplus1, 0); nplus1 + 1];
    det[0] = MPoly::constant(nplus1, 1);
    for start in 0..d {
        let mut exps = vec![0u16; nplus1];
        for i in (start..nplus1).step_by(d) {
            exps[i] = 1;
        }
        let cycle = MPoly::monomial(exps, sign);
        let mut next = det.clone();
        for deg in 0..=nplus1 - len {
            if !det[deg].is_zero_elem() {
                next[deg + len] = next[deg + len].r_add(&det[deg].r_mul(&cycle)?)?;
            }
        }
        det = next;
    }
    schur_from_elementary(&det, mu)
}
