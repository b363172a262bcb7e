//! Prime fields and dense polynomials over them.

use super::{prime::is_prime, AlgError};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// An element of the prime field `F_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FpElem {
    value: u32,
    p: u32,
}

impl FpElem {
    /// Builds `value mod p`, checking that `p` is prime.
    pub fn new(value: i64, p: u32) -> Result<Self, AlgError> {
        if !is_prime(p as u64) {
            return Err(AlgError::NonPrime(p as u64));
        }
        Ok(Self::reduce(value, p))
    }

    /// Builds `value mod p` without the primality check.
    pub(crate) fn reduce(value: i64, p: u32) -> Self {
        Self {
            value: value.rem_euclid(p as i64) as u32,
            p,
        }
    }

    /// Representative in `[0, p)`.
    pub fn value(self) -> u32 {
        self.value
    }

    /// Characteristic.
    pub fn modulus(self) -> u32 {
        self.p
    }

    /// True for the zero element.
    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    /// `self^e`.
    pub fn pow(self, e: u64) -> Self {
        let v = super::prime::pow_mod(self.value as u64, e, self.p as u64);
        Self {
            value: v as u32,
            p: self.p,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(self) -> Option<Self> {
        (!self.is_zero()).then(|| self.pow(self.p as u64 - 2))
    }
}

impl fmt::Display for FpElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.p)
    }
}

impl Add for FpElem {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        debug_assert_eq!(self.p, o.p);
        Self {
            value: ((self.value as u64 + o.value as u64) % self.p as u64) as u32,
            p: self.p,
        }
    }
}

impl Sub for FpElem {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        debug_assert_eq!(self.p, o.p);
        Self {
            value: ((self.value as u64 + (self.p - o.value) as u64) % self.p as u64) as u32,
            p: self.p,
        }
    }
}

impl Mul for FpElem {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        debug_assert_eq!(self.p, o.p);
        Self {
            value: (self.value as u64 * o.value as u64 % self.p as u64) as u32,
            p: self.p,
        }
    }
}

impl Neg for FpElem {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            value: (self.p - self.value) % self.p,
            p: self.p,
        }
    }
}

/// Dense polynomial arithmetic over `F_p` with coefficients in `[0, p)`,
/// lowest degree first, no trailing zeros.
pub(crate) mod poly {
    pub type Poly = Vec<u32>;

    fn mulm(a: u32, b: u32, p: u32) -> u32 {
        (a as u64 * b as u64 % p as u64) as u32
    }

    pub fn trim(mut a: Poly) -> Poly {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn sub(a: &[u32], b: &[u32], p: u32) -> Poly {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect();
        trim(out)
    }

    pub fn mul(a: &[u32], b: &[u32], p: u32) -> Poly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
            }
        }
        trim(out.into_iter().map(|v| v as u32).collect())
    }

    /// Remainder of `a` modulo the nonzero polynomial `m`.
    pub fn rem(a: &[u32], m: &[u32], p: u32) -> Poly {
        let mut r: Poly = trim(a.to_vec());
        let dm = m.len() - 1;
        let lead_inv = super::FpElem::reduce(m[dm] as i64, p)
            .inv()
            .expect("nonzero leading coefficient")
            .value();
        while r.len() > dm {
            let top = r.len() - 1;
            let c = mulm(r[top], lead_inv, p);
            if c != 0 {
                let shift = top - dm;
                for (j, &mj) in m.iter().enumerate() {
                    r[shift + j] = (r[shift + j] + p - mulm(c, mj, p)) % p;
                }
            }
            r.pop();
            r = trim(r);
        }
        r
    }

    pub fn mulmod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Poly {
        rem(&mul(a, b, p), m, p)
    }

    /// `a^e mod m`.
    pub fn powmod(a: &[u32], mut e: u128, m: &[u32], p: u32) -> Poly {
        let mut result: Poly = rem(&[1], m, p);
        let mut base = rem(a, m, p);
        while e > 0 {
            if e & 1 == 1 {
                result = mulmod(&result, &base, m, p);
            }
            base = mulmod(&base, &base, m, p);
            e >>= 1;
        }
        result
    }

    pub fn gcd(a: &[u32], b: &[u32], p: u32) -> Poly {
        let mut a = trim(a.to_vec());
        let mut b = trim(b.to_vec());
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }
}
