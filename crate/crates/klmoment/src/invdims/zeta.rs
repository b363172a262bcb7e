//! The zeta function `Z(T) = exp(Σ_r m(p^r) T^r / r)` of a moment family.

use super::InvError;
use crate::weylchar::{default_store, moment_tower, HighestWeight, MomentOptions};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Coefficients `z_0..=z_R` of `exp(Σ_{r=1}^{R} m_r T^r / r)` from
/// `moments = [m_1, …, m_R]`, by `z_j = (1/j)·Σ_{i=1}^{j} m_i z_{j−i}`.
pub fn zeta_from_moments(moments: &[BigInt]) -> Vec<BigRational> {
    let mut z = vec![BigRational::one()];
    for j in 1..=moments.len() {
        let mut acc = BigRational::zero();
        for i in 1..=j {
            acc += BigRational::from_integer(moments[i - 1].clone()) * &z[j - i];
        }
        z.push(acc / BigRational::from_integer(BigInt::from(j)));
    }
    z
}

/// The zeta series of the moments `m_{n+1}^λ(p^r)` to order `depth`.
pub fn zeta_series(
    nplus1: u32,
    lambda: &HighestWeight,
    p: u32,
    depth: u32,
) -> Result<Vec<BigRational>, InvError> {
    let moments = moment_tower(
        default_store(),
        nplus1,
        lambda,
        p,
        depth,
        MomentOptions::default(),
    )?;
    Ok(zeta_from_moments(&moments))
}
