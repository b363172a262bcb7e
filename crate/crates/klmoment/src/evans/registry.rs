//! The identity registry, normalized traces and local Euler factors.

use super::EvansError;
use crate::exactalg::prime::{is_prime, jacobi};
use crate::invdims::{dim_breakdown_weight, Characteristic};
use crate::weylchar::{moment, HighestWeight};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use std::fmt;
use std::str::FromStr;

/// Names of the registered identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityId {
    /// `Sym⁵Kl₂`, weight 3 with CM.
    Kl2K5,
    /// `Sym⁶Kl₂`, weight 4 and level 6.
    Kl2K6,
    /// `Sym⁸Kl₂`, weight 6 and level 6.
    Kl2K8,
    /// `Sym⁴Kl₃`.
    Sym4Kl3,
    /// `Sym³Kl₄`, twisted by `(p/15)`.
    Sym3Kl4,
    /// `Sym⁴Kl₄`.
    Sym4Kl4,
    /// `Sym³Kl₅`.
    Sym3Kl5,
    /// `Kl₃` with highest weight `(2,1)`.
    Kl3V21,
    /// `Kl₃` with highest weight `(2,2)`.
    Kl3V22,
}

impl IdentityId {
    /// Every registered identity, in registry order.
    pub const ALL: [IdentityId; 9] = [
        Self::Kl2K5,
        Self::Kl2K6,
        Self::Kl2K8,
        Self::Sym4Kl3,
        Self::Sym3Kl4,
        Self::Sym4Kl4,
        Self::Sym3Kl5,
        Self::Kl3V21,
        Self::Kl3V22,
    ];

    /// The textual id used by fixtures and the command line.
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Kl2K5 => "kl2_k5",
            Self::Kl2K6 => "kl2_k6",
            Self::Kl2K8 => "kl2_k8",
            Self::Sym4Kl3 => "sym4kl3",
            Self::Sym3Kl4 => "sym3kl4",
            Self::Sym4Kl4 => "sym4kl4",
            Self::Sym3Kl5 => "sym3kl5",
            Self::Kl3V21 => "kl3_21",
            Self::Kl3V22 => "kl3_22",
        }
    }

    /// The registry entry.
    pub fn identity(self) -> &'static EvansIdentity {
        REGISTRY
            .iter()
            .find(|e| e.id == self)
            .expect("every id is registered")
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = EvansError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| EvansError::UnknownIdentity(s.to_string()))
    }
}

/// Normalization data of one identity
/// `a_f(p) = χ(p)·(−1)·(m(p) + c(p))/p^h`.
///
/// The correction `c(p)` is the Frobenius trace on the part of the
/// compactly supported cohomology outside the middle: the invariants at `0`
/// plus `p^{(w−1)/2}` for each invariant at `∞`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvansIdentity {
    /// Identifier.
    pub id: IdentityId,
    /// Rank `n + 1` of the Kloosterman sheaf.
    pub nplus1: u32,
    /// Highest weight `(λ_1, …, λ_n)`, trailing zeros omitted.
    pub lambda: &'static [u32],
    /// Normalization exponent `h`.
    pub h: u32,
    /// Coefficients of the correction polynomial `c(p)`, constant term first.
    pub correction: &'static [i64],
    /// Modulus `N` of the Jacobi-symbol twist `χ(p) = (p/N)`, if any.
    pub twist: Option<u64>,
    /// Weight `k_f` of the modular form.
    pub form_weight: u32,
    /// Level `N_f` of the modular form.
    pub level: u32,
    /// Primes excluded from the identity.
    pub bad_primes: &'static [u32],
}

/// The registry, in the order of [`IdentityId::ALL`].
pub static REGISTRY: [EvansIdentity; 9] = [
    EvansIdentity {
        id: IdentityId::Kl2K5,
        nplus1: 2,
        lambda: &[5],
        h: 2,
        correction: &[1],
        twist: None,
        form_weight: 3,
        level: 15,
        bad_primes: &[3, 5],
    },
    EvansIdentity {
        id: IdentityId::Kl2K6,
        nplus1: 2,
        lambda: &[6],
        h: 2,
        correction: &[1],
        twist: None,
        form_weight: 4,
        level: 6,
        bad_primes: &[2, 3],
    },
    EvansIdentity {
        id: IdentityId::Kl2K8,
        nplus1: 2,
        lambda: &[8],
        h: 2,
        // The invariant line at ∞ contributes p⁴ besides the constant term.
        correction: &[1, 0, 0, 0, 1],
        twist: None,
        form_weight: 6,
        level: 6,
        bad_primes: &[2, 3],
    },
    EvansIdentity {
        id: IdentityId::Sym4Kl3,
        nplus1: 3,
        lambda: &[4],
        h: 3,
        correction: &[1, 0, 1, 0, 1],
        twist: None,
        form_weight: 4,
        level: 14,
        bad_primes: &[2, 7],
    },
    EvansIdentity {
        id: IdentityId::Sym3Kl4,
        nplus1: 4,
        lambda: &[3],
        h: 4,
        correction: &[1, 0, 1, 1],
        twist: Some(15),
        form_weight: 3,
        level: 15,
        bad_primes: &[3, 5],
    },
    EvansIdentity {
        id: IdentityId::Sym4Kl4,
        nplus1: 4,
        lambda: &[4],
        h: 4,
        correction: &[1, 0, 1, 1, 1, 0, 2],
        twist: None,
        form_weight: 6,
        level: 10,
        bad_primes: &[2, 5],
    },
    EvansIdentity {
        id: IdentityId::Sym3Kl5,
        nplus1: 5,
        lambda: &[3],
        h: 5,
        correction: &[1, 0, 1, 1, 1, 0, 1],
        twist: None,
        form_weight: 4,
        level: 33,
        bad_primes: &[3, 11],
    },
    EvansIdentity {
        id: IdentityId::Kl3V21,
        nplus1: 3,
        lambda: &[2, 1],
        h: 4,
        correction: &[0, 1, 1, 1],
        twist: None,
        form_weight: 2,
        level: 14,
        bad_primes: &[2, 3, 7],
    },
    EvansIdentity {
        id: IdentityId::Kl3V22,
        nplus1: 3,
        lambda: &[2, 2],
        h: 5,
        correction: &[0, 0, 1, 1, 2, 0, 2],
        twist: None,
        form_weight: 4,
        level: 6,
        bad_primes: &[2, 3],
    },
];

impl EvansIdentity {
    /// The highest weight as a [`HighestWeight`].
    pub fn highest_weight(&self) -> HighestWeight {
        HighestWeight::new(self.lambda)
    }

    /// Weight `n|λ| + 1` of the motive.
    pub fn motive_weight(&self) -> u32 {
        self.highest_weight().motive_weight(self.nplus1)
    }

    /// `c(p)`.
    pub fn correction_at(&self, p: u32) -> BigInt {
        self.correction
            .iter()
            .rev()
            .fold(BigInt::from(0), |acc, &c| acc * p + c)
    }

    /// Whether `p` is a prime outside the bad set.
    pub fn is_good(&self, p: u32) -> bool {
        is_prime(p as u64) && !self.bad_primes.contains(&p)
    }

    /// Rejects composite and bad `p`.
    pub fn check_prime(&self, p: u32) -> Result<(), EvansError> {
        if !is_prime(p as u64) {
            return Err(EvansError::NotPrime(p));
        }
        if self.bad_primes.contains(&p) {
            return Err(EvansError::BadPrime { id: self.id, p });
        }
        Ok(())
    }

    /// `χ(p)`, or `1` without a twist.
    pub fn character(&self, p: u32) -> i32 {
        self.twist.map_or(1, |m| jacobi(p as i64, m))
    }

    /// Dimension of the middle cohomology of the motive.
    pub fn motive_dimension(&self) -> Result<u64, EvansError> {
        Ok(dim_breakdown_weight(self.nplus1, &self.highest_weight(), Characteristic::Generic)?.dim)
    }
}

/// The registry entry whose sheaf is `Kl_{n+1}^λ`, if any.
pub fn identity_for(nplus1: u32, lambda: &HighestWeight) -> Option<&'static EvansIdentity> {
    REGISTRY
        .iter()
        .find(|e| e.nplus1 == nplus1 && e.lambda == lambda.coords())
}

/// `χ(p)·(−1)·(m + c(p))/p^h` for a known moment `m`.
pub fn a_value_from_moment(id: IdentityId, p: u32, m: &BigInt) -> Result<BigRational, EvansError> {
    let e = id.identity();
    e.check_prime(p)?;
    let num = -(m + e.correction_at(p)) * e.character(p);
    let value = BigRational::new(num, BigInt::from(p).pow(e.h));
    if e.twist.is_none() && !value.is_integer() {
        return Err(EvansError::NonIntegral {
            id,
            p,
            value: value.to_string(),
        });
    }
    Ok(value)
}

/// The normalized trace `a(p)` of the identity `id`.
pub fn a_value(id: IdentityId, p: u32) -> Result<BigRational, EvansError> {
    let e = id.identity();
    e.check_prime(p)?;
    let m = moment(e.nplus1, &e.highest_weight(), p)?.moment;
    a_value_from_moment(id, p, &m)
}

/// The local factor `1 − t·T + d·T²` at a good prime, with
/// `t = −(m + c(p))` the trace of Frobenius on the middle cohomology and
/// `d = p^{n|λ|+1}`. Without a twist `t = p^h·a(p)`; with the twist it is
/// `χ(p)·p^h·a(p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalFactor {
    /// The prime.
    pub p: u32,
    /// Motive weight `w`.
    pub weight: u32,
    /// Linear coefficient `t`.
    pub t: BigInt,
    /// Constant term `d = p^w`.
    pub d: BigInt,
}

impl LocalFactor {
    /// Coefficients `(1, −t, d)` of the polynomial in `T`.
    pub fn coefficients(&self) -> [BigInt; 3] {
        [BigInt::from(1), -self.t.clone(), self.d.clone()]
    }

    /// The two roots of `x² − t·x + d`, that is the Frobenius eigenvalues.
    pub fn eigenvalues(&self) -> [Complex64; 2] {
        let t = self.t.to_f64().expect("finite trace");
        let d = self.d.to_f64().expect("finite determinant");
        let disc = Complex64::new(t * t - 4.0 * d, 0.0).sqrt();
        [(t + disc) / 2.0, (t - disc) / 2.0]
    }

    /// Whether both eigenvalues have absolute value `p^{w/2}` to relative
    /// tolerance `tol`.
    pub fn is_pure(&self, tol: f64) -> bool {
        let target = (self.p as f64).powf(self.weight as f64 / 2.0);
        self.eigenvalues()
            .iter()
            .all(|z| ((z.norm() - target) / target).abs() <= tol)
    }

    /// Exact form of the purity condition: `t² ≤ 4d`.
    pub fn is_pure_exact(&self) -> bool {
        &self.t * &self.t <= &self.d * 4
    }
}

/// [`LocalFactor`] from a known moment.
pub fn local_factor_from_moment(
    id: IdentityId,
    p: u32,
    m: &BigInt,
) -> Result<LocalFactor, EvansError> {
    let e = id.identity();
    e.check_prime(p)?;
    let dim = e.motive_dimension()?;
    if dim != 2 {
        return Err(EvansError::NotTwoDimensional { id, dim });
    }
    let weight = e.motive_weight();
    let t = -(m + e.correction_at(p));
    Ok(LocalFactor {
        p,
        weight,
        t,
        d: BigInt::from(p).pow(weight),
    })
}

/// The local factor of `id` at `p`.
pub fn local_factor(id: IdentityId, p: u32) -> Result<LocalFactor, EvansError> {
    let e = id.identity();
    e.check_prime(p)?;
    let m = moment(e.nplus1, &e.highest_weight(), p)?.moment;
    local_factor_from_moment(id, p, &m)
}

/// `|a| ≤ 2·p^{(k_f−1)/2}`, tested exactly as `a² ≤ 4·p^{k_f−1}`.
pub(crate) fn within_ramanujan(a: &BigRational, p: u32, form_weight: u32) -> bool {
    let bound = BigRational::from_integer(BigInt::from(p).pow(form_weight - 1) * 4);
    a.abs() * a.abs() <= bound
}
