//! Dimensions of middle cohomology: Swan conductor at `∞` minus the
//! invariants at `0` and `∞`, plus the global invariants.

use super::infinity::{infinity_data, swan_infinity};
use super::multi::{inv_infinity_dim, Characteristic};
use super::series::{inv0_coeffs, inv0_dim};
use super::InvError;
use crate::monodromy::{p3_inv_dim, p3_swan};
use crate::weylchar::HighestWeight;
use num_traits::ToPrimitive;

/// The terms of the dimension formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DimBreakdown {
    /// Swan conductor at `∞`.
    pub swan: u64,
    /// Dimension of the invariants at `0`.
    pub inv0: u64,
    /// Dimension of the invariants at `∞`.
    pub inv_infinity: u64,
    /// Dimension of the global invariants.
    pub global: u64,
    /// `swan − inv0 − inv_infinity + global`.
    pub dim: u64,
}

impl DimBreakdown {
    fn assemble(
        swan: u64,
        inv0: u64,
        inv_infinity: u64,
        global: u64,
        what: &str,
    ) -> Result<Self, InvError> {
        let dim = (swan + global) as i64 - (inv0 + inv_infinity) as i64;
        if dim < 0 {
            return Err(InvError::NegativeDimension(format!(
                "{what}: {swan} − {inv0} − {inv_infinity} + {global} = {dim}"
            )));
        }
        Ok(Self {
            swan,
            inv0,
            inv_infinity,
            global,
            dim: dim as u64,
        })
    }
}

/// The dimension formula for `Sym^k Kl_{n+1}` in characteristic `ch`.
/// The global invariants are one-dimensional exactly when `p = 2` and `k`
/// is even (the monodromy is then orthogonal). For `p = 3` and `n + 1 = 3`
/// the local data at `∞` come from the explicit monodromy group.
pub fn dim_breakdown(nplus1: u32, k: u32, ch: Characteristic) -> Result<DimBreakdown, InvError> {
    if k == 0 {
        return Err(InvError::BadParameters("k must be at least 1".into()));
    }
    let what = format!("Sym^{k} Kl_{nplus1} ({ch})");
    let inv0 = inv0_dim(nplus1, k);
    if ch == Characteristic::Prime(3) && nplus1 == 3 {
        let swan = p3_swan(k);
        if !swan.is_integer() {
            return Err(InvError::NonIntegerSwan(format!("{what}: {swan}")));
        }
        let swan = swan.to_integer().to_u64().expect("small Swan conductor");
        return DimBreakdown::assemble(swan, inv0, p3_inv_dim(k)?, 0, &what);
    }
    let swan = swan_infinity(nplus1, k, ch)?
        .to_integer()
        .to_u64()
        .expect("small Swan conductor");
    let inv_inf = inv_infinity_dim(nplus1, k, ch)? as u64;
    let global = u64::from(ch == Characteristic::Prime(2) && k.is_multiple_of(2));
    DimBreakdown::assemble(swan, inv0, inv_inf, global, &what)
}

/// Dimension of the middle cohomology of `Sym^k Kl_{n+1}` over `F̄_p`.
pub fn dim_mid(nplus1: u32, k: u32, p: u32) -> Result<u64, InvError> {
    Ok(dim_breakdown(nplus1, k, Characteristic::Prime(p))?.dim)
}

/// Dimension of the motive `M_{n+1}^k` (the generic value of [`dim_mid`]).
pub fn dim_motive(nplus1: u32, k: u32) -> Result<u64, InvError> {
    Ok(dim_breakdown(nplus1, k, Characteristic::Generic)?.dim)
}

/// The dimension formula for a general highest weight. Symmetric powers use
/// [`dim_breakdown`]; other weights are supported when `n + 1` is odd and
/// `p ≠ 2`, where the monodromy is all of `SL_{n+1}` and has no invariants.
pub fn dim_breakdown_weight(
    nplus1: u32,
    lambda: &HighestWeight,
    ch: Characteristic,
) -> Result<DimBreakdown, InvError> {
    lambda.validate(nplus1)?;
    if let [k] = lambda.coords() {
        return dim_breakdown(nplus1, *k, ch);
    }
    if nplus1.is_multiple_of(2) || ch == Characteristic::Prime(2) {
        return Err(InvError::OutOfScope(format!(
            "global invariants of {lambda} for Kl_{nplus1} ({ch})"
        )));
    }
    let inf = infinity_data(nplus1, lambda, ch)?;
    let inv0: i64 = inv0_coeffs(nplus1, lambda)?.iter().sum();
    DimBreakdown::assemble(
        inf.swan,
        inv0 as u64,
        inf.invariants,
        0,
        &format!("{lambda} for Kl_{nplus1} ({ch})"),
    )
}
