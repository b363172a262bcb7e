//! Exact elements of `Z[ζ_m]` and `Q(ζ_m)` in the power basis modulo the
//! cyclotomic polynomial `Φ_m`.

use super::prime::euler_phi;
use super::scalar::{Overflow, Scalar, ScalarInto};
use super::AlgError;
use num_complex::Complex;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Float, FloatConst};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

fn phi_cache() -> &'static Mutex<HashMap<u32, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Coefficients of the cyclotomic polynomial `Φ_m`, lowest degree first.
pub fn cyclotomic_poly(m: u32) -> Arc<Vec<i64>> {
    assert!(m >= 1, "conductor must be positive");
    if let Some(v) = phi_cache().lock().expect("cyclotomic cache").get(&m) {
        return v.clone();
    }
    // Φ_m = (X^m − 1) / Π_{d | m, d < m} Φ_d, by exact long division.
    let mut num = vec![0i64; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        let den = cyclotomic_poly(d);
        num = exact_div_monic(&num, &den);
    }
    let out = Arc::new(num);
    phi_cache()
        .lock()
        .expect("cyclotomic cache")
        .insert(m, out.clone());
    out
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; num.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        for (j, &dj) in den.iter().enumerate() {
            rem[i + j] -= c * dj;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "cyclotomic division is exact");
    quot
}

/// An element of `Q(ζ_m)` with coefficients of type `T` in the basis
/// `1, ζ, …, ζ^{φ(m)−1}`. The representation is canonical: two elements are
/// equal exactly when their coefficient vectors are.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycElem<T> {
    m: u32,
    coeffs: Vec<T>,
}

impl<T: Scalar> CycElem<T> {
    /// The zero element of `Q(ζ_m)`.
    pub fn zero(m: u32) -> Self {
        Self {
            m,
            coeffs: vec![T::zero(); euler_phi(m as u64) as usize],
        }
    }

    /// The rational constant `c`.
    pub fn constant(m: u32, c: T) -> Self {
        let mut out = Self::zero(m);
        out.coeffs[0] = c;
        out
    }

    /// The unit element.
    pub fn one(m: u32) -> Self {
        Self::constant(m, T::one())
    }

    /// The integer constant `c`.
    pub fn from_int(m: u32, c: i64) -> Self {
        Self::constant(m, T::from_int(c))
    }

    /// `ζ_m^k` for any integer `k`.
    pub fn zeta_pow(m: u32, k: i64) -> Self {
        let mut full = vec![T::zero(); m as usize];
        full[k.rem_euclid(m as i64) as usize] = T::one();
        Self::from_cyclic(m, full).expect("reducing a monomial cannot overflow")
    }

    /// Element with the given canonical coefficients.
    pub fn from_coeffs(m: u32, coeffs: Vec<T>) -> Result<Self, AlgError> {
        let phi = euler_phi(m as u64) as usize;
        if coeffs.len() != phi {
            return Err(AlgError::BadLength {
                expected: phi,
                got: coeffs.len(),
            });
        }
        Ok(Self { m, coeffs })
    }

    /// Element with integral coefficients, rejecting any non-integer entry.
    pub fn integral(m: u32, coeffs: Vec<T>) -> Result<Self, AlgError> {
        if coeffs.iter().any(|c| !c.is_integer()) {
            return Err(AlgError::NotIntegral);
        }
        Self::from_coeffs(m, coeffs)
    }

    /// Reduces the polynomial `Σ c_i X^i` (any length) modulo `Φ_m`.
    pub fn from_poly(m: u32, poly: &[T]) -> Result<Self, Overflow> {
        let mut full = vec![T::zero(); m as usize];
        for (i, c) in poly.iter().enumerate() {
            let slot = &mut full[i % m as usize];
            *slot = slot.add_s(c)?;
        }
        Self::from_cyclic(m, full)
    }

    /// Reduces a vector of length `m`, read modulo `X^m − 1`, modulo `Φ_m`.
    pub fn from_cyclic(m: u32, mut full: Vec<T>) -> Result<Self, Overflow> {
        debug_assert_eq!(full.len(), m as usize);
        let phi_poly = cyclotomic_poly(m);
        let phi = phi_poly.len() - 1;
        for i in (phi..m as usize).rev() {
            if full[i].is_zero() {
                continue;
            }
            let c = full[i].clone();
            for (j, &fj) in phi_poly[..phi].iter().enumerate() {
                if fj != 0 {
                    let t = c.mul_s(&T::from_int(fj))?;
                    full[i - phi + j] = full[i - phi + j].sub_s(&t)?;
                }
            }
            full[i] = T::zero();
        }
        full.truncate(phi);
        Ok(Self { m, coeffs: full })
    }

    /// Conductor `m`.
    pub fn conductor(&self) -> u32 {
        self.m
    }

    /// Canonical coefficients.
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// True for the zero element.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// True when every coefficient is a rational integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    fn same_field(&self, o: &Self) {
        assert_eq!(self.m, o.m, "cyclotomic conductors differ");
    }

    /// Checked sum.
    pub fn try_add(&self, o: &Self) -> Result<Self, Overflow> {
        self.same_field(o);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&o.coeffs)
            .map(|(a, b)| a.add_s(b))
            .collect::<Result<_, _>>()?;
        Ok(Self { m: self.m, coeffs })
    }

    /// Checked difference.
    pub fn try_sub(&self, o: &Self) -> Result<Self, Overflow> {
        self.same_field(o);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&o.coeffs)
            .map(|(a, b)| a.sub_s(b))
            .collect::<Result<_, _>>()?;
        Ok(Self { m: self.m, coeffs })
    }

    /// Checked negation.
    pub fn try_neg(&self) -> Result<Self, Overflow> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| a.checked_neg_s())
            .collect::<Result<_, _>>()?;
        Ok(Self { m: self.m, coeffs })
    }

    /// Checked product: cyclic convolution modulo `X^m − 1`, then reduction.
    pub fn try_mul(&self, o: &Self) -> Result<Self, Overflow> {
        self.same_field(o);
        let m = self.m as usize;
        let mut full = vec![T::zero(); m];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let k = if i + j >= m { i + j - m } else { i + j };
                full[k] = full[k].add_s(&a.mul_s(b)?)?;
            }
        }
        Self::from_cyclic(self.m, full)
    }

    /// Checked multiplication by a scalar.
    pub fn try_scale(&self, c: &T) -> Result<Self, Overflow> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| a.mul_s(c))
            .collect::<Result<_, _>>()?;
        Ok(Self { m: self.m, coeffs })
    }

    /// Exact division by an integer, `None` when some coefficient is not
    /// divisible in `T`.
    pub fn div_exact(&self, d: i64) -> Option<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| a.div_exact(d))
            .collect::<Option<_>>()?;
        Some(Self { m: self.m, coeffs })
    }

    /// Checked power by repeated squaring.
    pub fn try_pow(&self, mut e: u32) -> Result<Self, Overflow> {
        let mut result = Self::one(self.m);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.try_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.try_mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Galois automorphism `ζ_m ↦ ζ_m^t`; `t = m − 1` is complex conjugation.
    pub fn conj(&self, t: i64) -> Result<Self, AlgError> {
        if (t.rem_euclid(self.m as i64)).gcd(&(self.m as i64)) != 1 {
            return Err(AlgError::NotCoprime { t, m: self.m });
        }
        let m = self.m as i64;
        let mut full = vec![T::zero(); self.m as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            full[(j as i64 * t).rem_euclid(m) as usize] = c.clone();
        }
        Ok(Self::from_cyclic(self.m, full)?)
    }

    /// Complex conjugation.
    pub fn complex_conj(&self) -> Self {
        self.conj(self.m as i64 - 1).expect("m − 1 is coprime to m")
    }

    /// The rational value of a Galois-invariant element.
    pub fn to_rational(&self) -> Result<BigRational, AlgError> {
        if self.coeffs.iter().skip(1).any(|c| !c.is_zero()) {
            return Err(AlgError::NotRational);
        }
        Ok(self.coeffs[0].to_rational())
    }

    /// Converts every coefficient to another scalar type.
    pub fn convert<U: Scalar>(&self) -> Result<CycElem<U>, Overflow>
    where
        T: ScalarInto<U>,
    {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.scalar_into())
            .collect::<Result<_, _>>()?;
        Ok(CycElem { m: self.m, coeffs })
    }

    /// Evaluates at `ζ_m = e^{2πi/m}` in the float type `F`.
    pub fn embed<F: Float + FloatConst>(&self) -> Complex<F> {
        let m = F::from(self.m).expect("conductor fits a float");
        let tau = F::TAU();
        self.coeffs
            .iter()
            .enumerate()
            .fold(Complex::new(F::zero(), F::zero()), |acc, (j, c)| {
                let c = F::from(c.to_f64_lossy()).expect("finite coefficient");
                let angle = tau * F::from(j).expect("index fits a float") / m;
                acc + Complex::from_polar(c, angle)
            })
    }
}

macro_rules! infallible_op {
    ($tr:ident, $f:ident, $try:ident) => {
        impl<T: Scalar> std::ops::$tr for &CycElem<T> {
            type Output = CycElem<T>;
            fn $f(self, o: &CycElem<T>) -> CycElem<T> {
                self.$try(o)
                    .expect("coefficient overflow; use an arbitrary-precision scalar")
            }
        }
        impl<T: Scalar> std::ops::$tr for CycElem<T> {
            type Output = CycElem<T>;
            fn $f(self, o: CycElem<T>) -> CycElem<T> {
                (&self).$f(&o)
            }
        }
    };
}

infallible_op!(Add, add, try_add);
infallible_op!(Sub, sub, try_sub);
infallible_op!(Mul, mul, try_mul);

impl<T: Scalar> std::ops::Neg for &CycElem<T> {
    type Output = CycElem<T>;
    fn neg(self) -> CycElem<T> {
        self.try_neg()
            .expect("coefficient overflow; use an arbitrary-precision scalar")
    }
}

impl<T: Scalar> std::ops::Neg for CycElem<T> {
    type Output = CycElem<T>;
    fn neg(self) -> CycElem<T> {
        -&self
    }
}

/// Checks that a reduced element is zero exactly when its polynomial is a
/// multiple of `Φ_m`; exposed for property tests.
pub fn reduces_to_zero<T: Scalar>(m: u32, poly: &[T]) -> bool {
    CycElem::from_poly(m, poly)
        .map(|e| e.is_zero())
        .unwrap_or(false)
}

impl<T: Scalar> CycElem<T> {
    /// True for the multiplicative identity.
    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }
}
