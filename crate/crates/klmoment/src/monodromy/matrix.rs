//! `3 × 3` matrices over `Q(ζ_9)`.

use super::MonodromyError;
use crate::exactalg::{CycElem, Overflow};
use crate::CycRat;
use num_bigint::BigInt;
use num_rational::BigRational;

/// Conductor of the coefficient field.
pub const CONDUCTOR: u32 = 9;

fn zeta(k: i64) -> CycRat {
    CycRat::zeta_pow(CONDUCTOR, k)
}

fn int(c: i64) -> CycRat {
    CycRat::from_int(CONDUCTOR, c)
}

fn mul(a: &CycRat, b: &CycRat) -> CycRat {
    a.try_mul(b).expect("rational coefficients do not overflow")
}

fn add(a: &CycRat, b: &CycRat) -> CycRat {
    a.try_add(b).expect("rational coefficients do not overflow")
}

fn sub(a: &CycRat, b: &CycRat) -> CycRat {
    a.try_sub(b).expect("rational coefficients do not overflow")
}

/// A `3 × 3` matrix with entries in `Q(ζ_9)`, stored row by row.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycMatrix {
    entries: Vec<CycRat>,
}

impl CycMatrix {
    /// Builds a matrix from its rows.
    pub fn new(rows: [[CycRat; 3]; 3]) -> Self {
        Self {
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// The identity.
    pub fn identity() -> Self {
        Self::diagonal([int(1), int(1), int(1)])
    }

    /// `diag(a, b, c)`.
    pub fn diagonal([a, b, c]: [CycRat; 3]) -> Self {
        Self::new([
            [a, int(0), int(0)],
            [int(0), b, int(0)],
            [int(0), int(0), c],
        ])
    }

    /// Entry `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> &CycRat {
        &self.entries[3 * i + j]
    }

    /// Matrix product.
    pub fn mul(&self, o: &Self) -> Self {
        let mut entries = Vec::with_capacity(9);
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = int(0);
                for k in 0..3 {
                    let (a, b) = (self.entry(i, k), o.entry(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = add(&acc, &mul(a, b));
                    }
                }
                entries.push(acc);
            }
        }
        Self { entries }
    }

    /// Multiplies every entry by `c`.
    pub fn scale(&self, c: &CycRat) -> Self {
        Self {
            entries: self.entries.iter().map(|e| mul(e, c)).collect(),
        }
    }

    /// Trace.
    pub fn trace(&self) -> CycRat {
        add(&add(self.entry(0, 0), self.entry(1, 1)), self.entry(2, 2))
    }

    /// Sum of the principal `2 × 2` minors (second coefficient of the
    /// characteristic polynomial).
    pub fn minor_sum(&self) -> CycRat {
        let minor = |i: usize, j: usize| {
            sub(
                &mul(self.entry(i, i), self.entry(j, j)),
                &mul(self.entry(i, j), self.entry(j, i)),
            )
        };
        add(&add(&minor(0, 1), &minor(0, 2)), &minor(1, 2))
    }

    /// Determinant.
    pub fn det(&self) -> CycRat {
        let e = |i, j| self.entry(i, j);
        let t0 = mul(
            e(0, 0),
            &sub(&mul(e(1, 1), e(2, 2)), &mul(e(1, 2), e(2, 1))),
        );
        let t1 = mul(
            e(0, 1),
            &sub(&mul(e(1, 0), e(2, 2)), &mul(e(1, 2), e(2, 0))),
        );
        let t2 = mul(
            e(0, 2),
            &sub(&mul(e(1, 0), e(2, 1)), &mul(e(1, 1), e(2, 0))),
        );
        add(&sub(&t0, &t1), &t2)
    }

    /// True for the identity matrix.
    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// Inverse of a matrix of determinant `1`, by the adjugate.
    pub fn inverse_special(&self) -> Result<Self, MonodromyError> {
        self.require_special()?;
        let e = |i: usize, j: usize| self.entry(i % 3, j % 3);
        let mut entries = Vec::with_capacity(9);
        for i in 0..3 {
            for j in 0..3 {
                // Cofactor of (j, i), with cyclic indexing absorbing the sign.
                entries.push(sub(
                    &mul(e(j + 1, i + 1), e(j + 2, i + 2)),
                    &mul(e(j + 1, i + 2), e(j + 2, i + 1)),
                ));
            }
        }
        Ok(Self { entries })
    }

    /// Fails unless the determinant is `1`.
    pub fn require_special(&self) -> Result<(), MonodromyError> {
        if self.det().is_one() {
            Ok(())
        } else {
            Err(MonodromyError::NotSpecialLinear(format!(
                "{:?}",
                self.det()
            )))
        }
    }

    /// Order in the group, up to `limit`.
    pub fn order(&self, limit: usize) -> Result<usize, MonodromyError> {
        let mut cur = self.clone();
        for k in 1..=limit {
            if cur.is_identity() {
                return Ok(k);
            }
            cur = cur.mul(self);
        }
        Err(MonodromyError::ClosureOverflow { limit })
    }

    /// `(tr, e₂, det)` as cyclotomic integers: the characteristic polynomial
    /// of a finite-order matrix has algebraic-integer coefficients.
    pub fn char_coeffs(&self) -> Result<[CycElem<i128>; 3], MonodromyError> {
        let conv = |c: CycRat| -> Result<CycElem<i128>, MonodromyError> {
            if !c.is_integral() {
                return Err(MonodromyError::NonRationalResult(format!(
                    "non-integral invariant {c:?}"
                )));
            }
            let coeffs = c
                .coeffs()
                .iter()
                .map(|x| i128::try_from(x.to_integer()).map_err(|_| Overflow))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(CycElem::from_coeffs(CONDUCTOR, coeffs).expect("canonical length"))
        };
        Ok([
            conv(self.trace())?,
            conv(self.minor_sum())?,
            conv(self.det())?,
        ])
    }
}

/// The matrices `S, T, U, V` over `Q(ζ_9)` with `ω = ζ_9^6`, `ε = ζ_9^4`.
#[derive(Debug, Clone)]
pub struct Generators {
    /// `diag(1, ω, ω²)`.
    pub s: CycMatrix,
    /// The cyclic permutation matrix.
    pub t: CycMatrix,
    /// `diag(ε, ε, εω)`.
    pub u: CycMatrix,
    /// `(ω − ω²)^{-1}` times the `3 × 3` Fourier matrix in `ω`.
    pub v: CycMatrix,
}

impl Generators {
    /// Builds the four matrices exactly.
    pub fn new() -> Self {
        let (one, zero) = (int(1), int(0));
        let (w, w2) = (zeta(6), zeta(12));
        let s = CycMatrix::diagonal([one.clone(), w.clone(), w2.clone()]);
        let t = CycMatrix::new([
            [zero.clone(), one.clone(), zero.clone()],
            [zero.clone(), zero.clone(), one.clone()],
            [one.clone(), zero.clone(), zero.clone()],
        ]);
        let u = CycMatrix::diagonal([zeta(4), zeta(4), zeta(10)]);
        // (ω − ω²)² = −3, so 1/(ω − ω²) = −(ω − ω²)/3.
        let diff = sub(&w, &w2);
        let third = BigRational::new(BigInt::from(-1), BigInt::from(3));
        let c = diff.try_scale(&third).expect("rational scaling");
        let fourier = CycMatrix::new([
            [one.clone(), one.clone(), one.clone()],
            [one.clone(), w.clone(), w2.clone()],
            [one, w2, w],
        ]);
        Self {
            s,
            t,
            u,
            v: fourier.scale(&c),
        }
    }

    /// `U V U^{-1}`.
    pub fn uvu_inv(&self) -> CycMatrix {
        let u_inv = self.u.inverse_special().expect("U has determinant 1");
        self.u.mul(&self.v).mul(&u_inv)
    }
}

impl Default for Generators {
    fn default() -> Self {
        Self::new()
    }
}

/// `ω·I_3`.
pub fn omega_scalar() -> CycMatrix {
    CycMatrix::diagonal([zeta(6), zeta(6), zeta(6)])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_special_linear() {
        let g = Generators::new();
        for m in [&g.s, &g.t, &g.u, &g.v] {
            assert!(m.det().is_one());
        }
    }

    #[test]
    fn inverse_by_adjugate() {
        let g = Generators::new();
        for m in [&g.s, &g.t, &g.u, &g.v] {
            assert!(m.mul(&m.inverse_special().unwrap()).is_identity());
        }
    }
}
