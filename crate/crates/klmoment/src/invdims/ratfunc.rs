//! Rational functions in one variable with exact rational coefficients.

use super::InvError;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

type Poly = Vec<BigRational>;

fn trim(mut a: Poly) -> Poly {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn poly_add(a: &[BigRational], b: &[BigRational]) -> Poly {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(out)
}

fn poly_neg(a: &[BigRational]) -> Poly {
    a.iter().map(|c| -c).collect()
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// Quotient and remainder; `b` must be non-zero.
fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Poly, Poly) {
    let mut rem = trim(a.to_vec());
    let lead = b.last().expect("non-zero divisor").clone();
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = rem.last().expect("non-empty") / &lead;
        for (j, y) in b.iter().enumerate() {
            rem[shift + j] -= &c * y;
        }
        quot[shift] = c;
        rem.pop();
        rem = trim(rem);
    }
    (trim(quot), rem)
}

fn monic(a: Poly) -> Poly {
    match a.last() {
        Some(l) if !l.is_one() => {
            let l = l.clone();
            a.into_iter().map(|c| c / &l).collect()
        }
        _ => a,
    }
}

fn poly_gcd(a: &[BigRational], b: &[BigRational]) -> Poly {
    let (mut x, mut y) = (trim(a.to_vec()), trim(b.to_vec()));
    while !y.is_empty() {
        let (_, r) = poly_divrem(&x, &y);
        x = y;
        y = r;
    }
    monic(x)
}

/// A reduced fraction `num/den` of polynomials over `Q`. The denominator is
/// monic and coprime to the numerator; zero is `0/1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Reduces `num/den` to lowest terms.
    pub fn new(num: Vec<BigRational>, den: Vec<BigRational>) -> Result<Self, InvError> {
        let num = trim(num);
        let den = trim(den);
        if den.is_empty() {
            return Err(InvError::ZeroDenominator);
        }
        if num.is_empty() {
            return Ok(Self::zero());
        }
        let g = poly_gcd(&num, &den);
        let (num, _) = poly_divrem(&num, &g);
        let (den, _) = poly_divrem(&den, &g);
        let lead = den.last().expect("non-zero").clone();
        Ok(Self {
            num: num.into_iter().map(|c| c / &lead).collect(),
            den: monic(den),
        })
    }

    /// Builds `num/den` from integer coefficient lists (lowest degree first).
    pub fn from_ints(num: &[i64], den: &[i64]) -> Result<Self, InvError> {
        let conv = |v: &[i64]| {
            v.iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect()
        };
        Self::new(conv(num), conv(den))
    }

    /// The polynomial with the given coefficients.
    pub fn polynomial(coeffs: Vec<BigRational>) -> Self {
        Self {
            num: trim(coeffs),
            den: vec![BigRational::one()],
        }
    }

    /// The zero function.
    pub fn zero() -> Self {
        Self {
            num: Vec::new(),
            den: vec![BigRational::one()],
        }
    }

    /// The constant `1`.
    pub fn one() -> Self {
        Self::polynomial(vec![BigRational::one()])
    }

    /// Numerator coefficients, lowest degree first (empty for zero).
    pub fn numerator(&self) -> &[BigRational] {
        &self.num
    }

    /// Monic denominator coefficients, lowest degree first.
    pub fn denominator(&self) -> &[BigRational] {
        &self.den
    }

    /// True for the zero function.
    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    /// True when the denominator is constant.
    pub fn is_polynomial(&self) -> bool {
        self.den.len() == 1
    }

    /// Multiplies by a rational constant.
    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            num: self.num.iter().map(|x| x * c).collect(),
            den: self.den.clone(),
        }
    }

    /// The first `len` power-series coefficients at `x = 0`.
    pub fn series(&self, len: usize) -> Result<Vec<BigRational>, InvError> {
        let d0 = self.den[0].clone();
        if d0.is_zero() {
            return Err(InvError::PoleAtZero);
        }
        let mut out: Vec<BigRational> = Vec::with_capacity(len);
        for k in 0..len {
            let mut acc = self.num.get(k).cloned().unwrap_or_else(BigRational::zero);
            for j in 1..self.den.len().min(k + 1) {
                acc -= &self.den[j] * &out[k - j];
            }
            out.push(acc / &d0);
        }
        Ok(out)
    }

    /// The first `len` series coefficients, required to be integers.
    pub fn integer_series(&self, len: usize) -> Result<Vec<BigInt>, InvError> {
        self.series(len)?
            .into_iter()
            .map(|c| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(InvError::NonIntegralSeries(c.to_string()))
                }
            })
            .collect()
    }
}

impl std::ops::Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        let num = poly_add(&poly_mul(&self.num, &o.den), &poly_mul(&o.num, &self.den));
        RatFunc::new(num, poly_mul(&self.den, &o.den)).expect("product of non-zero denominators")
    }
}

impl std::ops::Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: poly_neg(&self.num),
            den: self.den.clone(),
        }
    }
}

impl std::ops::Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        self + &(-o)
    }
}

impl std::ops::Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        RatFunc::new(poly_mul(&self.num, &o.num), poly_mul(&self.den, &o.den))
            .expect("product of non-zero denominators")
    }
}

fn fmt_poly(f: &mut fmt::Formatter<'_>, p: &[BigRational]) -> fmt::Result {
    if p.is_empty() {
        return write!(f, "0");
    }
    let mut first = true;
    for (i, c) in p.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c < &BigRational::zero();
        let abs = if neg { -c } else { c.clone() };
        match (first, neg) {
            (true, true) => write!(f, "-")?,
            (false, true) => write!(f, " - ")?,
            (false, false) => write!(f, " + ")?,
            (true, false) => {}
        }
        first = false;
        let show_coeff = i == 0 || !abs.is_one();
        if show_coeff {
            write!(f, "{abs}")?;
        }
        match i {
            0 => {}
            1 => write!(f, "{}x", if show_coeff { "*" } else { "" })?,
            _ => write!(f, "{}x^{i}", if show_coeff { "*" } else { "" })?,
        }
    }
    Ok(())
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        fmt_poly(f, &self.num)?;
        if self.is_polynomial() {
            return write!(f, ")");
        }
        write!(f, ")/(")?;
        fmt_poly(f, &self.den)?;
        write!(f, ")")
    }
}
