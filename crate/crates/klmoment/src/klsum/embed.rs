//! Numeric embedding `ζ_m ↦ e^{2πi/m}` and the Weil bound check.

use crate::exactalg::{CycElem, Scalar};
use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_complex::Complex;

/// Evaluates `x` at `ζ_m = e^{2πi/m}` carrying `precision_bits` bits of
/// working precision. Up to 24 bits the arithmetic is `f32`, up to 53 bits
/// `f64`, and beyond that arbitrary-precision binary floats; the result is
/// rounded to `f64` at the end.
pub fn embed_complex<T: Scalar>(x: &CycElem<T>, precision_bits: u32) -> Complex<f64> {
    match precision_bits {
        0..=24 => {
            let z = x.embed::<f32>();
            Complex::new(z.re as f64, z.im as f64)
        }
        25..=53 => x.embed::<f64>(),
        _ => embed_big(x, precision_bits as usize),
    }
}

fn embed_big<T: Scalar>(x: &CycElem<T>, bits: usize) -> Complex<f64> {
    let rm = RoundingMode::ToEven;
    let mut cc = Consts::new().expect("astro-float constants cache");
    let p = bits.max(64);
    let two_pi = cc.pi(p, rm).mul(&BigFloat::from_u32(2, p), p, rm);
    let step = two_pi.div(&BigFloat::from_u32(x.conductor(), p), p, rm);
    let mut re = BigFloat::from_u32(0, p);
    let mut im = BigFloat::from_u32(0, p);
    for (j, c) in x.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let r = c.to_rational();
        let num = BigFloat::parse(&r.numer().to_string(), Radix::Dec, p, rm, &mut cc);
        let den = BigFloat::parse(&r.denom().to_string(), Radix::Dec, p, rm, &mut cc);
        let c = num.div(&den, p, rm);
        let angle = step.mul(&BigFloat::from_u64(j as u64, p), p, rm);
        re = re.add(&c.mul(&angle.cos(p, rm, &mut cc), p, rm), p, rm);
        im = im.add(&c.mul(&angle.sin(p, rm, &mut cc), p, rm), p, rm);
    }
    Complex::new(to_f64(&re, &mut cc), to_f64(&im, &mut cc))
}

fn to_f64(x: &BigFloat, cc: &mut Consts) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    let s = x
        .format(Radix::Dec, RoundingMode::ToEven, cc)
        .expect("finite value formats");
    s.parse().expect("decimal float syntax")
}

/// The Weil bound `(n+1)·q^{n/2}` for `|Kl_{n+1}(a; q)|`.
pub fn weil_bound(nplus1: u32, q: u64) -> f64 {
    nplus1 as f64 * (q as f64).powf((nplus1 as f64 - 1.0) / 2.0)
}

/// True when `|x| ≤ (n+1)·q^{n/2} + 10⁻⁶` under the numeric embedding.
pub fn within_weil_bound<T: Scalar>(
    x: &CycElem<T>,
    nplus1: u32,
    q: u64,
    precision_bits: u32,
) -> bool {
    embed_complex(x, precision_bits).norm() <= weil_bound(nplus1, q) + 1e-6
}
