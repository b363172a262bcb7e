//! Symmetric-function engine: complete and elementary symmetric values and
//! Jacobi–Trudi determinants over any [`RingElem`].

use super::weight::conjugate;
use crate::exactalg::{Overflow, RingElem};

/// Complete homogeneous values `h_0..=h_upto` from elementary values
/// `e = [e_0 = 1, e_1, …, e_N]`, using `h_m = Σ_{i≥1} (−1)^{i−1} e_i h_{m−i}`.
pub fn complete_from_elementary<R: RingElem>(e: &[R], upto: usize) -> Result<Vec<R>, Overflow> {
    dual_sequence(e, upto)
}

/// Elementary values `e_0..=e_upto` from complete values; the recursion is
/// the same as in [`complete_from_elementary`] with the roles exchanged.
pub fn elementary_from_complete<R: RingElem>(h: &[R], upto: usize) -> Result<Vec<R>, Overflow> {
    dual_sequence(h, upto)
}

fn dual_sequence<R: RingElem>(a: &[R], upto: usize) -> Result<Vec<R>, Overflow> {
    let one = a[0].one_like();
    let mut out = Vec::with_capacity(upto + 1);
    out.push(one);
    for m in 1..=upto {
        let mut acc = a[0].zero_like();
        for i in 1..=m.min(a.len() - 1) {
            if a[i].is_zero_elem() {
                continue;
            }
            let term = a[i].r_mul(&out[m - i])?;
            acc = if i % 2 == 1 {
                acc.r_add(&term)?
            } else {
                acc.r_sub(&term)?
            };
        }
        out.push(acc);
    }
    Ok(out)
}

/// `det(seq[parts_i − i + j])` for `i, j < ℓ(parts)`, with `seq[k] = 0` for
/// `k < 0`. `seq` must cover indices up to `parts[0] + ℓ − 1` (missing
/// entries are treated as zero, which is correct for elementary sequences
/// of finite length).
pub fn jacobi_trudi<R: RingElem>(seq: &[R], parts: &[usize]) -> Result<R, Overflow> {
    let len = parts.len();
    let zero = seq[0].zero_like();
    if len == 0 {
        return Ok(seq[0].one_like());
    }
    let entry = |i: usize, j: usize| -> Option<&R> {
        let k = parts[i] as isize - i as isize + j as isize;
        if k < 0 {
            None
        } else {
            seq.get(k as usize).filter(|x| !x.is_zero_elem())
        }
    };
    // memo[mask] = determinant of rows popcount(mask).. over the columns not in mask.
    let full = (1usize << len) - 1;
    let mut memo: Vec<Option<R>> = vec![None; 1 << len];
    memo[full] = Some(seq[0].one_like());
    for mask in (0..full).rev() {
        let row = mask.count_ones() as usize;
        let mut acc = zero.clone();
        let mut free_before = 0;
        for col in 0..len {
            if mask & (1 << col) != 0 {
                continue;
            }
            if let (Some(a), Some(minor)) = (entry(row, col), memo[mask | (1 << col)].as_ref()) {
                if !minor.is_zero_elem() {
                    let term = a.r_mul(minor)?;
                    acc = if free_before % 2 == 0 {
                        acc.r_add(&term)?
                    } else {
                        acc.r_sub(&term)?
                    };
                }
            }
            free_before += 1;
        }
        memo[mask] = Some(acc);
    }
    Ok(memo[0].take().expect("filled above"))
}

/// `s_μ` from complete values via the `h`-version Jacobi–Trudi identity.
pub fn schur_from_complete<R: RingElem>(h: &[R], mu: &[usize]) -> Result<R, Overflow> {
    jacobi_trudi(h, mu)
}

/// `s_μ` from elementary values via the dual Jacobi–Trudi identity
/// `s_μ = det(e_{μ'_i − i + j})`.
pub fn schur_from_elementary_dual<R: RingElem>(e: &[R], mu: &[usize]) -> Result<R, Overflow> {
    jacobi_trudi(e, &conjugate(mu))
}

/// `s_μ` of the roots whose elementary values are `e = [1, e_1, …, e_N]`,
/// through complete values and the `h`-version determinant.
pub fn schur_from_elementary<R: RingElem>(e: &[R], mu: &[usize]) -> Result<R, Overflow> {
    let len = mu.len();
    if len == 0 {
        return Ok(e[0].one_like());
    }
    let h = complete_from_elementary(e, mu[0] + len - 1)?;
    jacobi_trudi(&h, mu)
}
