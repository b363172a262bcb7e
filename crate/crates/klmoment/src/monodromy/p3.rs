//! The monodromy of `Kl_3` at `∞` in characteristic 3.
//!
//! The inertia image is `D_0 = G108` with lower numbering filtration
//! `D_0 ▷ D_1 = ⟨S, T⟩ ▷ D_2 = D_3 = D_4 = ⟨ωI_3⟩ ▷ 1`, so
//! `[D_0 : D_1] = 4` and `[D_0 : D_i] = 36` for `i = 2, 3, 4`. Frobenius acts
//! on the invariants through an element of the other coset of `G108` in
//! `G216`.

use super::group::{build_group, GroupName, MatGroup};
use super::molien::{molien, molien_normalized};
use super::MonodromyError;
use crate::invdims::{compositions, rotate, RatFunc};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use std::collections::BTreeSet;
use std::sync::OnceLock;

/// `[D_0 : D_1]`.
pub const WILD_INDEX: u64 = 4;
/// `[D_0 : ⟨ωI_3⟩]`.
pub const CENTER_INDEX: u64 = 36;
/// Number of filtration steps equal to `⟨ωI_3⟩`.
pub const CENTER_STEPS: u64 = 3;

/// The two groups and their Molien series.
#[derive(Debug)]
pub struct P3Data {
    /// `G108`.
    pub g108: MatGroup,
    /// `G216`.
    pub g216: MatGroup,
    /// Molien series `P(x)` of `G108`.
    pub p: RatFunc,
    /// Molien series `P̃(x)` of `G216`.
    pub p_tilde: RatFunc,
    /// `(1/108)·Σ_{g ∈ G216 ∖ G108} 1/det(1 − x·g)`.
    pub coset: RatFunc,
}

impl P3Data {
    fn build() -> Result<Self, MonodromyError> {
        let g108 = build_group(GroupName::G108)?;
        let g216 = build_group(GroupName::G216)?;
        let other: Vec<_> = g216
            .elements
            .iter()
            .filter(|m| !g108.contains(m))
            .cloned()
            .collect();
        if other.len() != g108.order() {
            return Err(MonodromyError::UnexpectedOrder {
                expected: g108.order(),
                got: other.len(),
            });
        }
        let p = molien(&g108.elements)?;
        let p_tilde = molien(&g216.elements)?;
        let coset = molien_normalized(&other, g108.order())?;
        Ok(Self {
            g108,
            g216,
            p,
            p_tilde,
            coset,
        })
    }
}

/// The groups and series, built once per process.
pub fn p3_data() -> Result<&'static P3Data, MonodromyError> {
    static CELL: OnceLock<P3Data> = OnceLock::new();
    if let Some(d) = CELL.get() {
        return Ok(d);
    }
    let d = P3Data::build()?;
    Ok(CELL.get_or_init(|| d))
}

fn coefficient(r: &RatFunc, k: u32) -> Result<u64, MonodromyError> {
    let c = r
        .integer_series(k as usize + 1)?
        .pop()
        .expect("non-empty series");
    c.to_u64().ok_or_else(|| {
        MonodromyError::NonRationalResult(format!("negative Molien coefficient {c}"))
    })
}

/// `dim(Sym^k V)^{⟨S,T⟩}`: the `σ`-orbits of multi-indices with
/// `I_0 ≡ I_1 ≡ I_2 (mod 3)`.
pub fn d1_invariant_dim(k: u32) -> u64 {
    let reps: BTreeSet<Vec<u32>> = compositions(k, 3)
        .into_iter()
        .filter(|i| i[0] % 3 == i[1] % 3 && i[1] % 3 == i[2] % 3)
        .map(|i| {
            let r1 = rotate(&i);
            let r2 = rotate(&r1);
            [i, r1, r2].into_iter().min().expect("three rotations")
        })
        .collect();
    reps.len() as u64
}

/// Swan conductor of `Sym^k V` from the filtration:
/// `Σ_i (dim − dim^{D_i})/[D_0 : D_i]`.
pub fn p3_swan(k: u32) -> BigRational {
    let dim = ((k as u64 + 1) * (k as u64 + 2) / 2) as i64;
    let d1 = d1_invariant_dim(k) as i64;
    let center = if k.is_multiple_of(3) { dim } else { 0 };
    let r = |a: i64, b: u64| BigRational::new(BigInt::from(a), BigInt::from(b));
    r(dim - d1, WILD_INDEX) + r(CENTER_STEPS as i64 * (dim - center), CENTER_INDEX)
}

/// `p_k = dim(Sym^k V)^{G108}`, the coefficient of `x^k` in `P(x)`.
pub fn p3_inv_dim(k: u32) -> Result<u64, MonodromyError> {
    coefficient(&p3_data()?.p, k)
}

/// `p̃_k`, the coefficient of `x^k` in `P̃(x)`.
pub fn p3_inv_dim_tilde(k: u32) -> Result<u64, MonodromyError> {
    coefficient(&p3_data()?.p_tilde, k)
}

/// Dimensions `(λ₁, λ₋₁)` of the `±1` eigenspaces of Frobenius on the
/// invariants of `Sym^k V`: `λ₁ + λ₋₁ = p_k` and `λ₁ − λ₋₁ = 2p̃_k − p_k`.
pub fn frob_signs_p3(k: u32) -> Result<(u64, u64), MonodromyError> {
    let (p, pt) = (p3_inv_dim(k)?, p3_inv_dim_tilde(k)?);
    if pt > p {
        return Err(MonodromyError::InconsistentParity { k, p, p_tilde: pt });
    }
    Ok((pt, p - pt))
}
