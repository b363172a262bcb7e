//! The `p = 3` monodromy groups, their Molien series and the Swan data
//! derived from the ramification filtration.

use klmoment::invdims::{dim_mid, RatFunc};
use klmoment::monodromy::{
    build_group, d1_invariant_dim, frob_signs_p3, generate, molien, omega_scalar, p3_data,
    p3_inv_dim, p3_swan, CycMatrix, Generators, GroupName,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

/// `∏ (sign·Σ c_i x^{e_i})` for sparse integer factors.
fn product(factors: &[&[(usize, i64)]]) -> RatFunc {
    factors.iter().fold(RatFunc::one(), |acc, f| {
        let deg = f.iter().map(|t| t.0).max().unwrap_or(0);
        let mut c = vec![0i64; deg + 1];
        for &(e, v) in f.iter() {
            c[e] += v;
        }
        &acc * &RatFunc::from_ints(&c, &[1]).unwrap()
    })
}

fn printed_denominator() -> RatFunc {
    let m1: &[(usize, i64)] = &[(0, -1), (3, 1)];
    let p1: &[(usize, i64)] = &[(0, 1), (3, 1)];
    let p6: &[(usize, i64)] = &[(0, 1), (6, 1)];
    product(&[m1, m1, m1, p1, p1, p6])
}

fn quotient(num: &RatFunc, den: &RatFunc) -> RatFunc {
    let inv = RatFunc::new(den.denominator().to_vec(), den.numerator().to_vec()).unwrap();
    num * &inv
}

fn coeff(r: &RatFunc, k: usize) -> i64 {
    r.integer_series(k + 1).unwrap()[k].to_i64().unwrap()
}

#[test]
fn group_orders() {
    let g108 = build_group(GroupName::G108).unwrap();
    let g216 = build_group(GroupName::G216).unwrap();
    assert_eq!(g108.order(), 108);
    assert_eq!(g216.order(), 216);
    assert!(g108.elements.iter().all(|m| g216.contains(m)));
    let g = Generators::new();
    assert_eq!(generate(&[g.s.clone(), g.t.clone()]).unwrap().len(), 27);
    assert!(g108.contains(&omega_scalar()));
}

#[test]
fn group_axioms() {
    let g216 = build_group(GroupName::G216).unwrap();
    for x in &g216.elements {
        assert!(x.det().is_one());
        assert!(g216.contains(&x.inverse_special().unwrap()));
    }
    let sample: Vec<&CycMatrix> = g216.elements.iter().step_by(7).collect();
    for x in &sample {
        for y in &sample {
            assert!(g216.contains(&x.mul(y)));
        }
    }
}

#[test]
fn molien_series_match_the_printed_forms() {
    let data = p3_data().unwrap();
    let den = printed_denominator();
    let p = quotient(
        &product(&[&[(0, -1), (3, 1), (6, -1), (12, -1), (15, 1), (18, -1)]]),
        &den,
    );
    let p_tilde = quotient(
        &product(&[&[(0, -1), (3, 1), (9, -1), (15, 1), (18, -1)]]),
        &den,
    );
    assert_eq!(data.p, p);
    assert_eq!(data.p_tilde, p_tilde);
    assert_eq!(coeff(&data.p, 6), 2);
    assert_eq!(coeff(&data.p_tilde, 6), 1);
    let two = BigRational::from_integer(BigInt::from(2));
    let coset = quotient(
        &product(&[&[(0, -1), (3, 1), (6, -1)]]),
        &product(&[&[(0, -1), (3, 1)], &[(0, 1), (6, 1)]]),
    );
    assert_eq!(&data.p_tilde.scale(&two) - &data.p, coset);
    assert_eq!(data.coset, coset);
}

#[test]
fn molien_of_small_groups() {
    let trivial = molien(&[CycMatrix::identity()]).unwrap();
    assert_eq!(trivial, RatFunc::from_ints(&[1], &[1, -3, 3, -1]).unwrap());
    // ⟨ωI⟩ fixes Sym^k exactly when 3 | k.
    let center = generate(&[omega_scalar()]).unwrap();
    let series = molien(&center).unwrap().integer_series(13).unwrap();
    for (k, c) in series.iter().enumerate() {
        let full = (k + 1) * (k + 2) / 2;
        assert_eq!(c.to_usize().unwrap(), if k % 3 == 0 { full } else { 0 });
    }
}

#[test]
fn orbit_count_matches_the_molien_series_of_the_sylow_subgroup() {
    let g = Generators::new();
    let d1 = molien(&generate(&[g.s, g.t]).unwrap()).unwrap();
    let series = d1.integer_series(21).unwrap();
    for k in 0..=20u32 {
        assert_eq!(
            series[k as usize].to_u64().unwrap(),
            d1_invariant_dim(k),
            "k={k}"
        );
    }
}

#[test]
fn molien_coefficients_are_non_negative() {
    let data = p3_data().unwrap();
    for r in [&data.p, &data.p_tilde] {
        assert!(r
            .integer_series(21)
            .unwrap()
            .iter()
            .all(|c| c >= &BigInt::from(0)));
    }
}

#[test]
fn swan_and_invariants() {
    let int = |n: i64| BigRational::from_integer(BigInt::from(n));
    assert_eq!(p3_swan(1), int(1));
    assert_eq!(p3_swan(3), int(2));
    assert_eq!(p3_swan(4), int(5));
    assert_eq!(p3_swan(6), int(6));
    assert_eq!(d1_invariant_dim(6), 4);
    assert_eq!(p3_inv_dim(6).unwrap(), 2);
    assert_eq!(p3_inv_dim(4).unwrap(), 0);
}

#[test]
fn frobenius_signs() {
    assert_eq!(frob_signs_p3(6).unwrap(), (1, 1));
    assert_eq!(frob_signs_p3(0).unwrap(), (1, 0));
    for k in 0..=12 {
        let (plus, minus) = frob_signs_p3(k).unwrap();
        assert_eq!(plus + minus, p3_inv_dim(k).unwrap());
    }
}

#[test]
fn middle_dimension_chain_at_three() {
    for k in 1..=12u32 {
        assert!(p3_swan(k).is_integer(), "k={k}");
        dim_mid(3, k, 3).unwrap();
    }
    assert_eq!(dim_mid(3, 4, 3).unwrap(), 2);
    assert_eq!(dim_mid(3, 6, 3).unwrap(), 0);
}
