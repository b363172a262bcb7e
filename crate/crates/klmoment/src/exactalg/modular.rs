//! Arithmetic modulo word-sized primes: NTT-friendly primes carrying a
//! chosen root of unity, number-theoretic transforms, and a ring element
//! type for running the symmetric-function engine modulo a prime.

use super::prime::{pow_mod, prime_factors};
use super::ring::RingElem;
use super::scalar::Overflow;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Largest transform length supported, `2^MAX_LOG_LEN`.
pub const MAX_LOG_LEN: u32 = 23;

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}

/// A prime `ℓ ≡ 1 (mod 2^23·p)` with a primitive `2^23`-th root of unity
/// and a primitive `p`-th root of unity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NttPrime {
    /// The prime `ℓ < 2^62`.
    pub ell: u64,
    /// A primitive `2^23`-th root of unity modulo `ℓ`.
    pub root2: u64,
    /// A primitive `p`-th root of unity modulo `ℓ`, the image of `ζ_p`.
    pub zeta: u64,
}

/// The first `count` primes of the form `c·2^23·p + 1 < 2^62` in order of
/// increasing `c`, each with its roots of unity.
pub fn ntt_primes(p: u32, count: usize) -> Vec<NttPrime> {
    let step = (1u64 << MAX_LOG_LEN) * p as u64;
    let mut out = Vec::with_capacity(count);
    // Start high so each prime carries about 60 bits.
    let mut c = (1u64 << 60) / step;
    while out.len() < count {
        c += 1;
        let ell = c * step + 1;
        assert!(ell < 1 << 62, "ran out of NTT primes below 2^62");
        if !num_prime::nt_funcs::is_prime64(ell) {
            continue;
        }
        let mut factors = prime_factors(c);
        factors.extend([2, p as u64]);
        factors.sort_unstable();
        factors.dedup();
        let g = (2..)
            .find(|&g| factors.iter().all(|&f| pow_mod(g, (ell - 1) / f, ell) != 1))
            .expect("a primitive root exists");
        out.push(NttPrime {
            ell,
            root2: pow_mod(g, (ell - 1) >> MAX_LOG_LEN, ell),
            zeta: pow_mod(g, (ell - 1) / p as u64, ell),
        });
    }
    out
}

/// In-place cyclic NTT of length `a.len() = 2^k` modulo `prime.ell`;
/// `inverse` also applies the `1/len` normalization.
pub fn ntt(a: &mut [u64], prime: &NttPrime, inverse: bool) {
    let n = a.len();
    assert!(
        n.is_power_of_two() && n.trailing_zeros() <= MAX_LOG_LEN,
        "unsupported NTT length {n}"
    );
    let m = prime.ell;
    let mut j = 0;
    for i in 1..n {
        let mut bit = n >> 1;
        while j & bit != 0 {
            j ^= bit;
            bit >>= 1;
        }
        j |= bit;
        if i < j {
            a.swap(i, j);
        }
    }
    let mut len = 2;
    while len <= n {
        let mut w = pow_mod(prime.root2, (1u64 << MAX_LOG_LEN) / len as u64, m);
        if inverse {
            w = pow_mod(w, m - 2, m);
        }
        let half = len / 2;
        let mut tw = Vec::with_capacity(half);
        let mut cur = 1u64;
        for _ in 0..half {
            tw.push(cur);
            cur = mul_mod(cur, w, m);
        }
        for chunk in a.chunks_mut(len) {
            let (lo, hi) = chunk.split_at_mut(half);
            for k in 0..half {
                let u = lo[k];
                let v = mul_mod(hi[k], tw[k], m);
                lo[k] = if u + v >= m { u + v - m } else { u + v };
                hi[k] = if u >= v { u - v } else { u + m - v };
            }
        }
        len <<= 1;
    }
    if inverse {
        let inv = pow_mod(n as u64 % m, m - 2, m);
        for x in a.iter_mut() {
            *x = mul_mod(*x, inv, m);
        }
    }
}

/// Cyclic convolution of two equal-length sequences modulo `prime.ell`.
/// `fhat` is the forward transform of the first sequence zero-padded to
/// `len`, which must be a power of two at least `2·b.len() − 1`.
pub fn cyclic_convolve(fhat: &[u64], b: &[u64], prime: &NttPrime) -> Vec<u64> {
    let n = b.len();
    let len = fhat.len();
    let mut buf = vec![0u64; len];
    buf[..n].copy_from_slice(b);
    ntt(&mut buf, prime, false);
    for (x, &y) in buf.iter_mut().zip(fhat) {
        *x = mul_mod(*x, y, prime.ell);
    }
    ntt(&mut buf, prime, true);
    let m = prime.ell;
    let mut out = buf[..n].to_vec();
    for (i, &v) in buf[n..].iter().enumerate() {
        let k = i % n;
        out[k] = if out[k] + v >= m {
            out[k] + v - m
        } else {
            out[k] + v
        };
    }
    out
}

/// An element of `Z/ℓ` for a prime `ℓ < 2^63`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModElem {
    v: u64,
    m: u64,
}

impl ModElem {
    /// Reduces a signed integer.
    pub fn new(v: i64, m: u64) -> Self {
        Self {
            v: (v as i128).rem_euclid(m as i128) as u64,
            m,
        }
    }

    /// Wraps an already reduced residue.
    pub fn from_residue(v: u64, m: u64) -> Self {
        debug_assert!(v < m);
        Self { v, m }
    }

    /// The residue in `[0, ℓ)`.
    pub fn value(self) -> u64 {
        self.v
    }

    /// The modulus.
    pub fn modulus(self) -> u64 {
        self.m
    }

    /// Power by repeated squaring.
    pub fn pow(self, e: u64) -> Self {
        Self {
            v: pow_mod(self.v, e, self.m),
            m: self.m,
        }
    }

    /// Multiplicative inverse of a nonzero element.
    pub fn inv(self) -> Option<Self> {
        (self.v != 0).then(|| self.pow(self.m - 2))
    }
}

impl RingElem for ModElem {
    fn zero_like(&self) -> Self {
        Self { v: 0, m: self.m }
    }
    fn one_like(&self) -> Self {
        Self {
            v: 1 % self.m,
            m: self.m,
        }
    }
    fn is_zero_elem(&self) -> bool {
        self.v == 0
    }
    fn r_add(&self, o: &Self) -> Result<Self, Overflow> {
        let s = self.v + o.v;
        Ok(Self {
            v: if s >= self.m { s - self.m } else { s },
            m: self.m,
        })
    }
    fn r_sub(&self, o: &Self) -> Result<Self, Overflow> {
        Ok(Self {
            v: if self.v >= o.v {
                self.v - o.v
            } else {
                self.v + self.m - o.v
            },
            m: self.m,
        })
    }
    fn r_mul(&self, o: &Self) -> Result<Self, Overflow> {
        Ok(Self {
            v: mul_mod(self.v, o.v, self.m),
            m: self.m,
        })
    }
    fn r_scale(&self, k: i64) -> Result<Self, Overflow> {
        self.r_mul(&Self::new(k, self.m))
    }
}

/// The integer in `(−M/2, M/2]` congruent to `residues[i]` modulo
/// `moduli[i]`, where `M` is the product of the (pairwise coprime) moduli.
pub fn crt_symmetric(residues: &[u64], moduli: &[u64]) -> BigInt {
    let mut x = BigInt::zero();
    let mut modulus = BigInt::one();
    for (&r, &m) in residues.iter().zip(moduli) {
        let mb = BigInt::from(m);
        // Solve x + modulus·t ≡ r (mod m).
        let diff = (BigInt::from(r) - &x).mod_floor(&mb);
        let inv = modulus.mod_floor(&mb).modpow(&(&mb - 2u32), &mb);
        let t = (diff * inv).mod_floor(&mb);
        x += &modulus * t;
        modulus *= mb;
    }
    if &x * 2 > modulus {
        x -= modulus;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_carry_roots_of_unity() {
        for p in [2u32, 3, 7, 199] {
            for pr in ntt_primes(p, 2) {
                assert_eq!((pr.ell - 1) % ((1 << MAX_LOG_LEN) * p as u64), 0);
                assert_eq!(pow_mod(pr.zeta, p as u64, pr.ell), 1);
                assert_ne!(pr.zeta, 1);
                assert_eq!(
                    pow_mod(pr.root2, 1 << (MAX_LOG_LEN - 1), pr.ell),
                    pr.ell - 1
                );
            }
        }
    }

    #[test]
    fn convolution_matches_schoolbook() {
        let pr = ntt_primes(5, 1)[0];
        let a: Vec<u64> = (0..7).map(|i| (i * i + 3) as u64).collect();
        let b: Vec<u64> = (0..7).map(|i| (5 * i + 1) as u64).collect();
        let mut fa = vec![0u64; 16];
        fa[..7].copy_from_slice(&a);
        ntt(&mut fa, &pr, false);
        let got = cyclic_convolve(&fa, &b, &pr);
        for k in 0..7 {
            let want: u64 = (0..7).map(|i| a[i] * b[(k + 7 - i) % 7]).sum();
            assert_eq!(got[k], want);
        }
    }

    #[test]
    fn crt_recovers_signed_values() {
        let moduli = [1_000_003u64, 998_244_353];
        for v in [-123_456_789_012i64, 0, 77, 499_999_999_999] {
            let res: Vec<u64> = moduli.iter().map(|&m| ModElem::new(v, m).value()).collect();
            assert_eq!(crt_symmetric(&res, &moduli), BigInt::from(v));
        }
    }
}
