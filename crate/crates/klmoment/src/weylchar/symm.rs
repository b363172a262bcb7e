//! Elementary symmetric values of Frobenius eigenvalues on a stalk of
//! `Kl_{n+1}`, recovered from Kloosterman sums over a tower of fields.

use super::WeylError;
use crate::exactalg::{CycElem, Overflow, Scalar};
use crate::klsum::KlTable;
use crate::CycInt;
use std::sync::Arc;

/// Number of power sums needed to pin down the eigenvalues: `⌊(n+1)/2⌋`.
pub fn tower_depth(nplus1: u32) -> usize {
    nplus1 as usize / 2
}

/// Elementary symmetric values `e_0 = 1, e_1, …, e_{n+1}` of the Frobenius
/// eigenvalues at one point `a ∈ F_q^×`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobSymm {
    /// Rank `n+1` of the sheaf.
    pub nplus1: u32,
    /// Characteristic.
    pub p: u32,
    /// Degree of the base field `F_q`, `q = p^r`.
    pub r: u32,
    /// Encoding of the base point in `F_q`.
    pub a: u32,
    /// `e_0, …, e_{n+1}` over `Z[ζ_p]`.
    pub elem: Vec<CycInt>,
}

impl FrobSymm {
    /// Elementary values `e_1..e_{n+1}` (without `e_0`).
    pub fn elementary(&self) -> &[CycInt] {
        &self.elem[1..]
    }
}

/// `q^e` as a scalar, with overflow detection.
pub(crate) fn scalar_pow<T: Scalar>(q: u64, e: u32) -> Result<T, Overflow> {
    let base = T::from_u64(q).ok_or(Overflow)?;
    (0..e).try_fold(T::one(), |acc, _| acc.mul_s(&base))
}

/// Completes `e_0..e_{n+1}` from the sign-corrected power sums
/// `P_j = Σ α_i^j`, `j = 1..=⌊(n+1)/2⌋`, over a base field of size `q`.
/// Newton's identities give the low half and the functional equation
/// `e_{n+1−j} = q^{n(n+1)/2 − nj}·conj(e_j)` the rest.
pub fn elementary_from_power_sums<T: Scalar>(
    nplus1: u32,
    q: u64,
    power_sums: &[CycElem<T>],
) -> Result<Vec<CycElem<T>>, WeylError> {
    let half = tower_depth(nplus1);
    if power_sums.len() < half {
        return Err(WeylError::MissingTower {
            degree: power_sums.len() as u32 + 1,
        });
    }
    let m = power_sums[0].conductor();
    let n = nplus1 - 1;
    let mut e: Vec<CycElem<T>> = vec![CycElem::one(m)];
    for j in 1..=half {
        let mut acc = CycElem::zero(m);
        for i in 1..=j {
            let term = e[j - i].try_mul(&power_sums[i - 1])?;
            acc = if i % 2 == 1 {
                acc.try_add(&term)?
            } else {
                acc.try_sub(&term)?
            };
        }
        let ej = acc
            .div_exact(j as i64)
            .ok_or(WeylError::NonIntegral(format!(
                "e_{j} from Newton's identities"
            )))?;
        e.push(ej);
    }
    let top = n * (n + 1) / 2;
    for k in half + 1..=nplus1 as usize {
        let j = nplus1 as usize - k;
        let scale = scalar_pow::<T>(q, top - n * j as u32)?;
        e.push(e[j].complex_conj().try_scale(&scale)?);
    }
    Ok(e)
}

/// Checks that `tower[j−1]` is the table over `F_{q^j}` for the same sheaf
/// and character as `tower[0]`, for every `j ≤ ⌊(n+1)/2⌋`.
pub(crate) fn check_tower(tower: &[Arc<KlTable>]) -> Result<(), WeylError> {
    let base = tower.first().ok_or(WeylError::MissingTower { degree: 1 })?;
    let need = tower_depth(base.nplus1());
    if tower.len() < need {
        return Err(WeylError::MissingTower {
            degree: tower.len() as u32 + 1,
        });
    }
    for (j, t) in tower.iter().enumerate().take(need) {
        let ok = t.nplus1() == base.nplus1()
            && t.p() == base.p()
            && t.r() == base.r() * (j as u32 + 1)
            && t.psi_scale() == base.psi_scale();
        if !ok {
            return Err(WeylError::MissingTower {
                degree: base.r() * (j as u32 + 1),
            });
        }
    }
    Ok(())
}

/// Embedding maps from `F_q` (the field of `tower[0]`) into each field of
/// the tower, by encoding.
pub(crate) fn tower_embeddings(tower: &[Arc<KlTable>]) -> Result<Vec<Vec<u32>>, WeylError> {
    let base = tower[0].context();
    tower
        .iter()
        .map(|t| Ok(t.context().embedding_from(base)?))
        .collect()
}

/// Power sums `P_j = (−1)^n·Kl_{n+1}(a; q^j)` at the encoded point `a`.
pub(crate) fn power_sums_at<'t>(
    tower: &'t [Arc<KlTable>],
    embeddings: &[Vec<u32>],
    a: u32,
) -> Result<Vec<&'t CycInt>, WeylError> {
    let half = tower_depth(tower[0].nplus1());
    (0..half)
        .map(|j| Ok(tower[j].at_encoded(embeddings[j][a as usize])?))
        .collect()
}

/// Frobenius data at the encoded point `a ∈ F_q^×` from a tower of tables
/// over `F_q, F_{q²}, …` (`⌊(n+1)/2⌋` of them are needed).
pub fn frob_symm(tower: &[Arc<KlTable>], a: u32) -> Result<FrobSymm, WeylError> {
    check_tower(tower)?;
    let emb = tower_embeddings(tower)?;
    let base = &tower[0];
    let nplus1 = base.nplus1();
    let sign_odd = (nplus1 - 1) % 2 == 1;
    let sums: Vec<CycInt> = power_sums_at(tower, &emb, a)?
        .into_iter()
        .map(|k| if sign_odd { -k } else { k.clone() })
        .collect();
    let elem = elementary_from_power_sums(nplus1, base.q() as u64, &sums)?;
    Ok(FrobSymm {
        nplus1,
        p: base.p(),
        r: base.r(),
        a,
        elem,
    })
}
