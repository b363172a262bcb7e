//! Multi-indices `I ∈ N^{n+1}` with vanishing `C_I = Σ I_i ζ^i`, their
//! rotation orbits, and the counts `d`, `a`, `b` that control the local
//! monodromy of `Sym^k Kl_{n+1}` at `∞`.
//!
//! After pulling back by `t ↦ t^{n+1}`, `Sym^k` at `∞` splits into the lines
//! `L_ψ(C_I·t)` indexed by the monomials `v^I`. The generator of the
//! quotient acts by the signed shift `v_i ↦ v_{i+1}`, `v_n ↦ (−1)^n v_0`
//! (the sign makes its determinant trivial), so
//! `g·v^I = (−1)^{n·I_n} v^{σI}` with `σI = (I_n, I_0, …, I_{n−1})`.

use super::InvError;
use crate::exactalg::{ext_field, reduces_to_zero, AlgError, ExtElem};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Characteristic in which `C_I` is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Characteristic {
    /// Vanishing in `Z[ζ_{n+1}]`.
    Generic,
    /// Vanishing in `F̄_p`.
    Prime(u32),
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Generic => write!(f, "generic"),
            Self::Prime(p) => write!(f, "p={p}"),
        }
    }
}

/// The multi-indices of size `k` with `C_I = 0`, and their `σ`-orbits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiIndexSet {
    /// `n + 1`.
    pub nplus1: u32,
    /// `|I|`.
    pub k: u32,
    /// Where `C_I` was evaluated.
    pub characteristic: Characteristic,
    /// The indices, in lexicographic order.
    pub indices: Vec<Vec<u32>>,
    /// Each orbit as positions in `indices`.
    pub orbits: Vec<Vec<usize>>,
}

impl MultiIndexSet {
    /// `d`: the number of indices.
    pub fn d(&self) -> usize {
        self.indices.len()
    }

    /// `a`: the number of orbits.
    pub fn a(&self) -> usize {
        self.orbits.len()
    }
}

/// All compositions of `k` into `parts` non-negative parts, in
/// lexicographic order.
pub fn compositions(k: u32, parts: usize) -> Vec<Vec<u32>> {
    fn go(rest: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 1 {
            cur.push(rest);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in 0..=rest {
            cur.push(x);
            go(rest - x, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts > 0 {
        go(k, parts, &mut Vec::with_capacity(parts), &mut out);
    }
    out
}

/// `σI = (I_n, I_0, …, I_{n−1})`.
pub fn rotate(index: &[u32]) -> Vec<u32> {
    let n = index.len() - 1;
    let mut out = Vec::with_capacity(index.len());
    out.push(index[n]);
    out.extend_from_slice(&index[..n]);
    out
}

/// Powers `ζ^0, …, ζ^n` of a primitive `(n+1)`-th root of unity in the
/// smallest extension `F_{p^m}` containing one, as coefficient vectors.
/// `ζ = g^{t(p^m−1)/(n+1)}` for the smallest generator `g` (by encoding);
/// `t` must be prime to `n + 1`.
pub fn root_of_unity_powers(p: u32, nplus1: u32, t: u32) -> Result<Vec<Vec<u32>>, InvError> {
    if nplus1.is_multiple_of(p) {
        return Err(InvError::CharDividesOrder { p, nplus1 });
    }
    if t.gcd(&nplus1) != 1 {
        return Err(InvError::BadParameters(format!(
            "root exponent {t} is not prime to {nplus1}"
        )));
    }
    let m = (1..=nplus1)
        .find(|&m| (p as u64).pow(m) % nplus1 as u64 == 1 % nplus1 as u64)
        .expect("order divides φ(n+1)");
    let field = ext_field(p, m)?;
    let q = field.q();
    let order = q - 1;
    let factors: Vec<u64> = num_prime::nt_funcs::factorize64(order)
        .into_keys()
        .collect();
    let one = ExtElem::from_int(&field, 1);
    let g = (1..u32::try_from(q).map_err(|_| AlgError::FieldTooLarge(q))?)
        .map(|n| ExtElem::decode(&field, n))
        .find(|g| factors.iter().all(|&l| g.pow((order / l) as u128) != one))
        .expect("the multiplicative group of a finite field is cyclic");
    let zeta = g.pow((t as u64 * (order / nplus1 as u64)) as u128);
    let mut powers = Vec::with_capacity(nplus1 as usize);
    let mut cur = one;
    for _ in 0..nplus1 {
        powers.push(cur.coeffs().to_vec());
        cur = &cur * &zeta;
    }
    debug_assert!(cur.coeffs() == powers[0].as_slice());
    Ok(powers)
}

/// The set of `I` with `|I| = k` and `C_I = 0`, using the default root.
pub fn multi_index_set(nplus1: u32, k: u32, ch: Characteristic) -> Result<MultiIndexSet, InvError> {
    multi_index_set_with_root(nplus1, k, ch, 1)
}

/// As [`multi_index_set`], with `ζ` replaced by `ζ^t` in characteristic `p`.
pub fn multi_index_set_with_root(
    nplus1: u32,
    k: u32,
    ch: Characteristic,
    t: u32,
) -> Result<MultiIndexSet, InvError> {
    if nplus1 < 2 {
        return Err(InvError::BadParameters(format!(
            "n + 1 = {nplus1} must be at least 2"
        )));
    }
    let all = compositions(k, nplus1 as usize);
    let indices: Vec<Vec<u32>> = match ch {
        Characteristic::Generic => all
            .into_iter()
            .filter(|i| {
                let poly: Vec<i64> = i.iter().map(|&x| x as i64).collect();
                reduces_to_zero(nplus1, &poly)
            })
            .collect(),
        Characteristic::Prime(p) => {
            let powers = root_of_unity_powers(p, nplus1, t)?;
            let width = powers[0].len();
            all.into_iter()
                .filter(|i| {
                    let mut acc = vec![0u64; width];
                    for (x, z) in i.iter().zip(&powers) {
                        for (a, &c) in acc.iter_mut().zip(z) {
                            *a += (*x % p) as u64 * c as u64;
                        }
                    }
                    acc.iter().all(|a| a % p as u64 == 0)
                })
                .collect()
        }
    };
    let position: BTreeMap<&[u32], usize> = indices
        .iter()
        .enumerate()
        .map(|(i, v)| (v.as_slice(), i))
        .collect();
    let mut seen = vec![false; indices.len()];
    let mut orbits = Vec::new();
    for start in 0..indices.len() {
        if seen[start] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut cur = indices[start].clone();
        loop {
            let pos = *position
                .get(cur.as_slice())
                .expect("the vanishing set is rotation stable");
            if seen[pos] {
                break;
            }
            seen[pos] = true;
            orbit.push(pos);
            cur = rotate(&cur);
        }
        orbits.push(orbit);
    }
    Ok(MultiIndexSet {
        nplus1,
        k,
        characteristic: ch,
        indices,
        orbits,
    })
}

/// Rank over `Q` of the rows `u_I = Σ_{j=0}^{n} c_j(I)·v^{σ^j I}`, computed
/// orbit by orbit (rows from different orbits have disjoint supports).
fn signed_orbit_rank(
    set: &MultiIndexSet,
    coeff: impl Fn(&[u32], usize) -> Vec<(Vec<u32>, i64)>,
) -> usize {
    let n = set.nplus1 as usize - 1;
    set.orbits
        .iter()
        .map(|orbit| {
            let members: Vec<&Vec<u32>> = orbit.iter().map(|&i| &set.indices[i]).collect();
            let rows: Vec<Vec<BigRational>> = members
                .iter()
                .map(|i| {
                    let mut row = vec![BigRational::zero(); members.len()];
                    for (target, c) in coeff(i, n) {
                        let col = members
                            .iter()
                            .position(|m| **m == target)
                            .expect("orbit member");
                        row[col] += BigRational::from_integer(BigInt::from(c));
                    }
                    row
                })
                .collect();
            rank(rows)
        })
        .sum()
}

fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pivot);
        let inv = BigRational::one() / &rows[r][c];
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = &rows[i][c] * &inv;
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        r += 1;
    }
    r
}

/// `b`: the dimension of the span of the `g`-averages of the monomials
/// `v^I`, `I ∈ A_k^0`, where `g` is the signed shift. Equals the dimension
/// of the invariants at `∞` when `nk` is even.
pub fn b_count(k: u32, nplus1: u32, ch: Characteristic) -> Result<usize, InvError> {
    let set = multi_index_set(nplus1, k, ch)?;
    Ok(signed_orbit_rank(&set, |i, n| {
        let eps: i64 = if n % 2 == 1 { -1 } else { 1 };
        let mut out = Vec::with_capacity(n + 1);
        let (mut cur, mut sign) = (i.to_vec(), 1i64);
        for _ in 0..=n {
            out.push((cur.clone(), sign));
            if cur[n] % 2 == 1 {
                sign *= eps;
            }
            cur = rotate(&cur);
        }
        out
    }))
}

/// The count obtained by weighting `v^{σ^j I}` with `(−1)^{m_{σ^j I}}`,
/// `m_I = Σ i·I_i`. Kept for comparison with [`b_count`]: for `n + 1 = 2`
/// and `k = 6` it returns `1`, which makes the middle dimension `1` instead
/// of the dimension `2` of the weight-4 motive.
pub fn b_count_index_weighted(k: u32, nplus1: u32, ch: Characteristic) -> Result<usize, InvError> {
    let set = multi_index_set(nplus1, k, ch)?;
    Ok(signed_orbit_rank(&set, |i, n| {
        let mut out = Vec::with_capacity(n + 1);
        let mut cur = i.to_vec();
        for _ in 0..=n {
            let m: u64 = cur
                .iter()
                .enumerate()
                .map(|(j, &x)| j as u64 * x as u64)
                .sum();
            out.push((cur.clone(), if m.is_multiple_of(2) { 1 } else { -1 }));
            cur = rotate(&cur);
        }
        out
    }))
}

/// Dimension of the invariants of `Sym^k Kl_{n+1}` at `∞`: `a` when `n` is
/// even, `0` when `nk` is odd, and `b` otherwise.
pub fn inv_infinity_dim(nplus1: u32, k: u32, ch: Characteristic) -> Result<usize, InvError> {
    let n = nplus1 - 1;
    if n.is_multiple_of(2) {
        Ok(multi_index_set(nplus1, k, ch)?.a())
    } else if (n * k) % 2 == 1 {
        Ok(0)
    } else {
        b_count(k, nplus1, ch)
    }
}
