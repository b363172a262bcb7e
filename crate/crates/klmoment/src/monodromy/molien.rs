//! Molien series `(1/#D)·Σ_{g} 1/det(1 − x·g)` over a list of matrices.

use super::matrix::CycMatrix;
use super::MonodromyError;
use crate::exactalg::CycElem;
use crate::invdims::RatFunc;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

/// Extra coefficients checked beyond the degree bound of the numerator.
const TAIL_CHECK: usize = 12;

/// `(1/normalizer)·Σ_{g ∈ mats} 1/det(1 − x·g)` as an exact rational
/// function. Every matrix must have finite order. The ζ-parts of the
/// coefficients must cancel; a surviving irrational part is an error.
pub fn molien_normalized(mats: &[CycMatrix], normalizer: usize) -> Result<RatFunc, MonodromyError> {
    if mats.is_empty() || normalizer == 0 {
        return Err(MonodromyError::EmptyInput);
    }
    let exponent = mats.iter().try_fold(1usize, |acc, m| {
        Ok::<_, MonodromyError>(acc.lcm(&m.order(1000)?))
    })?;
    let deg = 3 * exponent;
    let len = deg + TAIL_CHECK;
    let m = super::matrix::CONDUCTOR;
    let mut total: Vec<CycElem<i128>> = vec![CycElem::zero(m); len];
    for g in mats {
        let [tr, e2, det] = g.char_coeffs()?;
        // 1/(1 − tr·x + e₂·x² − det·x³): c_k = tr·c_{k−1} − e₂·c_{k−2} + det·c_{k−3}.
        let mut c: Vec<CycElem<i128>> = Vec::with_capacity(len);
        for k in 0..len {
            let mut v = if k == 0 {
                CycElem::one(m)
            } else {
                tr.try_mul(&c[k - 1])?
            };
            if k >= 2 {
                v = v.try_sub(&e2.try_mul(&c[k - 2])?)?;
            }
            if k >= 3 {
                v = v.try_add(&det.try_mul(&c[k - 3])?)?;
            }
            c.push(v);
        }
        for (t, v) in total.iter_mut().zip(&c) {
            *t = t.try_add(v)?;
        }
    }
    let norm = BigInt::from(normalizer);
    let series = total
        .into_iter()
        .map(|c| {
            c.to_rational()
                .map(|r| r / BigRational::from_integer(norm.clone()))
                .map_err(|_| MonodromyError::NonRationalResult(format!("{c:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    // (1 − x^N)³ clears every denominator; the product is a polynomial of
    // degree at most 3N − 3.
    let mut den = vec![BigRational::zero(); deg + 1];
    for (i, b) in [1i64, -3, 3, -1].into_iter().enumerate() {
        den[i * exponent] = BigRational::from_integer(BigInt::from(b));
    }
    let mut num = vec![BigRational::zero(); len];
    for (i, d) in den.iter().enumerate().filter(|(_, d)| !d.is_zero()) {
        for j in 0..len - i {
            num[i + j] += d * &series[j];
        }
    }
    if num[deg - 2..].iter().any(|c| !c.is_zero()) {
        return Err(MonodromyError::NonRationalResult(
            "numerator exceeds its degree bound".into(),
        ));
    }
    num.truncate(deg - 2);
    Ok(RatFunc::new(num, den)?)
}

/// The Molien series of a finite group given by all its elements.
pub fn molien(elements: &[CycMatrix]) -> Result<RatFunc, MonodromyError> {
    molien_normalized(elements, elements.len())
}
