//! Normalized traces, local factors, η-product streams and the cross
//! identity between `Kl₃^{(2,2)}` and `Sym⁶Kl₂`.

use klmoment::evans::{
    a_value, a_value_fixtures, cross_identity, cross_identity_sides, eta_product, hecke_check,
    hecke_elimination_table, identity_for, local_factor, stream_coincidence, validate_candidate,
    verify_identity, verify_prime, EtaProduct, EvansError, IdentityId, ETA_CANDIDATES,
    PURITY_TOLERANCE,
};
use klmoment::exactalg::prime::{is_prime, primes_in};
use klmoment::invdims::{infinity_data, inv0_trace_weight, Characteristic};
use klmoment::weylchar::HighestWeight;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn primes(lo: u32, hi: u32) -> Vec<u32> {
    primes_in(lo as u64, hi as u64)
        .into_iter()
        .map(|p| p as u32)
        .collect()
}

#[test]
fn printed_a_values() {
    let cases: &[(IdentityId, u32, i64)] = &[
        (IdentityId::Sym4Kl3, 3, -2),
        (IdentityId::Sym4Kl3, 5, -12),
        (IdentityId::Sym3Kl4, 2, -1),
        (IdentityId::Sym4Kl4, 3, -26),
        (IdentityId::Sym4Kl4, 7, -22),
        (IdentityId::Sym3Kl5, 2, -1),
        (IdentityId::Sym3Kl5, 5, -4),
        (IdentityId::Kl3V21, 13, -4),
        (IdentityId::Kl3V21, 17, 6),
        (IdentityId::Kl3V22, 7, -16),
        (IdentityId::Kl3V22, 23, 168),
    ];
    for &(id, p, want) in cases {
        assert_eq!(a_value(id, p).unwrap(), int(want), "{id} at {p}");
    }
}

#[test]
fn fixture_tables_match_the_pipeline() {
    let tables = a_value_fixtures();
    assert_eq!(tables.len(), 6);
    assert_eq!(tables.values().map(|t| t.len()).sum::<usize>(), 20);
    for (&id, table) in tables {
        for (&p, &v) in table {
            assert_eq!(a_value(id, p).unwrap(), int(v), "{id} at {p}");
        }
    }
}

#[test]
fn hecke_elimination_table_is_inert_data() {
    let rows = hecke_elimination_table().unwrap();
    assert_eq!(rows.len(), 14);
    assert!(rows
        .iter()
        .all(|r| r.value != 0 && is_prime(r.field as u64) && is_prime(r.p as u64)));
    assert_eq!(rows.iter().filter(|r| r.identity == "kl3_22").count(), 3);
}

/// The correction polynomial is the Frobenius trace on the invariants at `0`
/// (from the Fu–Wan series) plus `p^{(w−1)/2}` per invariant at `∞`.
#[test]
fn corrections_are_the_trivial_part_of_the_cohomology() {
    for id in IdentityId::ALL {
        let e = id.identity();
        let lambda = e.highest_weight();
        let inf = infinity_data(e.nplus1, &lambda, Characteristic::Generic)
            .unwrap()
            .invariants;
        let half = (e.motive_weight() - 1) / 2;
        for p in [5u32, 7, 13, 101] {
            let want =
                inv0_trace_weight(e.nplus1, &lambda, p).unwrap() + BigInt::from(p).pow(half) * inf;
            assert_eq!(e.correction_at(p), want, "{id} at {p}");
        }
    }
}

#[test]
fn registry_data() {
    for id in IdentityId::ALL {
        let e = id.identity();
        assert_eq!(e.id, id);
        assert_eq!(id.as_str().parse::<IdentityId>().unwrap(), id);
        assert_eq!(e.motive_dimension().unwrap(), 2, "{id}");
        assert_eq!(identity_for(e.nplus1, &e.highest_weight()).unwrap().id, id);
        // w/2 − h = (k_f − 1)/2: the normalization lands in the form's weight.
        assert_eq!(e.motive_weight(), 2 * e.h + e.form_weight - 1, "{id}");
    }
    assert!(identity_for(3, &HighestWeight::sym(5)).is_none());
    assert!(matches!(
        "kl2_k7".parse::<IdentityId>(),
        Err(EvansError::UnknownIdentity(_))
    ));
    assert_eq!(IdentityId::Sym3Kl4.identity().character(2), 1);
    assert_eq!(IdentityId::Sym3Kl4.identity().character(7), -1);
}

#[test]
fn bad_and_composite_primes() {
    assert!(matches!(
        a_value(IdentityId::Sym4Kl3, 7),
        Err(EvansError::BadPrime { p: 7, .. })
    ));
    assert!(matches!(
        a_value(IdentityId::Sym3Kl4, 5),
        Err(EvansError::BadPrime { p: 5, .. })
    ));
    assert!(matches!(
        a_value(IdentityId::Kl3V21, 9),
        Err(EvansError::NotPrime(9))
    ));
    assert!(matches!(
        local_factor(IdentityId::Kl2K6, 3),
        Err(EvansError::BadPrime { .. })
    ));
    assert!(matches!(
        cross_identity(3),
        Err(EvansError::BadPrime { .. })
    ));
    assert!(verify_identity(IdentityId::Kl3V21, &[4]).is_empty());
}

#[test]
fn local_factor_examples() {
    let f = local_factor(IdentityId::Sym4Kl3, 5).unwrap();
    assert_eq!(f.t, BigInt::from(-1500));
    assert_eq!(f.d, BigInt::from(5).pow(9));
    assert_eq!(f.coefficients()[1], BigInt::from(1500));
    let f = local_factor(IdentityId::Kl3V22, 7).unwrap();
    assert_eq!(f.t, BigInt::from(7).pow(5) * -16);
    assert_eq!(f.d, BigInt::from(7).pow(13));
    for p in [2u32, 7, 11, 13, 17] {
        let f = local_factor(IdentityId::Sym3Kl4, p).unwrap();
        assert_eq!(f.weight, 10);
        assert!(f.is_pure(PURITY_TOLERANCE), "p = {p}");
        for z in f.eigenvalues() {
            assert!((z.norm() / (p as f64).powi(5) - 1.0).abs() < 1e-9);
        }
    }
}

/// `∏(1 − q^n)^24` by repeated multiplication by each binomial factor.
fn delta_oracle(len: usize) -> Vec<i64> {
    let mut s = vec![0i64; len];
    s[0] = 1;
    for n in 1..len {
        for _ in 0..24 {
            for i in (n..len).rev() {
                s[i] -= s[i - n];
            }
        }
    }
    let mut out = vec![0i64; len];
    out[1..].copy_from_slice(&s[..len - 1]);
    out
}

#[test]
fn discriminant_stream() {
    let n = 30;
    let delta = eta_product(&EtaProduct::new(&[(1, 24)], n)).unwrap();
    let oracle = delta_oracle(n + 1);
    for k in 1..=n {
        assert_eq!(delta[k - 1], BigInt::from(oracle[k]), "tau({k})");
    }
    let frozen = [
        1i64, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920,
    ];
    for (k, &v) in frozen.iter().enumerate() {
        assert_eq!(delta[k], BigInt::from(v));
    }
    assert!(hecke_check(&delta, 12, &[2, 3, 5]).unwrap());
    assert_eq!(
        EtaProduct::new(&[(1, 24)], 5).weight(),
        num_rational::Rational32::from_integer(12)
    );
}

#[test]
fn hecke_check_rejections() {
    let ones = vec![BigInt::from(1); 50];
    assert!(!hecke_check(&ones, 4, &[2, 3]).unwrap());
    assert!(matches!(
        hecke_check(&ones, 4, &[11]),
        Err(EvansError::InsufficientLength {
            needed: 121,
            got: 50
        })
    ));
    assert!(matches!(
        eta_product(&EtaProduct::new(&[(1, 1)], 5)),
        Err(EvansError::NonIntegralPower { sum: 1 })
    ));
}

#[test]
fn negative_exponents_invert() {
    // η(τ)^{24}·η(τ)^{-24}·η(2τ)^{12} = η(2τ)^{12}.
    let a = eta_product(&EtaProduct::new(&[(1, 24), (1, -24), (2, 12)], 20)).unwrap();
    let b = eta_product(&EtaProduct::new(&[(2, 12)], 20)).unwrap();
    assert_eq!(a, b);
    assert_eq!(b[0], BigInt::from(1));
    assert_eq!(b[1], BigInt::from(0));
    assert_eq!(b[2], BigInt::from(-12));
}

/// `a(p) = p + 1 − #E(F_p)` for `E: y² + xy + y = x³ + 4x − 6`, counted by
/// brute force.
fn conductor_14_trace(p: i64) -> i64 {
    let mut affine = 0;
    for x in 0..p {
        for y in 0..p {
            let lhs = (y * y + x * y + y).rem_euclid(p);
            let rhs = (x * x * x + 4 * x - 6).rem_euclid(p);
            if lhs == rhs {
                affine += 1;
            }
        }
    }
    p - affine
}

#[test]
fn eta_candidates() {
    let reports: Vec<_> = ETA_CANDIDATES
        .iter()
        .map(|c| validate_candidate(c).unwrap())
        .collect();
    assert!(reports[0].accepted(), "{:?}", reports[0]);
    assert_eq!(reports[0].compared.len(), 23);
    assert!(!reports[1].accepted());
    assert_eq!(reports[1].weight, num_rational::Rational32::from_integer(4));
    assert!(reports[2].accepted(), "{:?}", reports[2]);
    assert_eq!(reports[2].compared, vec![5, 11, 13, 17, 19, 23]);

    let level14 = eta_product(&EtaProduct::new(ETA_CANDIDATES[2].factors, 100)).unwrap();
    for p in primes(3, 97).into_iter().filter(|&p| p != 7) {
        assert_eq!(
            level14[p as usize - 1],
            BigInt::from(conductor_14_trace(p as i64)),
            "p = {p}"
        );
    }
    let level6 = eta_product(&EtaProduct::new(ETA_CANDIDATES[0].factors, 121)).unwrap();
    assert!(hecke_check(&level6, 4, &[5, 7, 11]).unwrap());
}

#[test]
fn cross_identity_examples() {
    for p in [5u32, 7, 199] {
        let (lhs, rhs) = cross_identity_sides(p).unwrap();
        assert_eq!(lhs, rhs, "p = {p}");
        assert!(cross_identity(p).unwrap());
    }
    let (_, rhs) = cross_identity_sides(5).unwrap();
    assert_eq!(rhs, BigInt::from(-2 * 15625 - 2 * 625 - 25));
}

#[test]
fn sextic_streams_coincide() {
    for p in primes(5, 61) {
        assert!(stream_coincidence(p).unwrap(), "p = {p}");
    }
    assert_eq!(a_value(IdentityId::Kl2K6, 7).unwrap(), int(-16));
}

#[test]
fn quintic_cm_vanishing() {
    let checks = verify_identity(IdentityId::Kl2K5, &primes(2, 199));
    for c in checks {
        let c = c.unwrap();
        assert_eq!(c.cm, Some(true), "p = {}", c.p);
    }
}

#[test]
fn kl2_octic_needs_the_infinity_term() {
    // With the constant correction alone the trace at 107 exceeds the bound.
    let c = verify_prime(IdentityId::Kl2K8, 107).unwrap();
    let naive = BigRational::new(
        -(c.moment.clone() + BigInt::from(1)),
        BigInt::from(107 * 107),
    );
    assert_eq!(naive, int(239437));
    assert!(!klmoment::evans::ramanujan_ok(
        IdentityId::Kl2K8,
        107,
        &naive
    ));
    assert!(c.passed());
    assert_eq!(a_value(IdentityId::Kl2K8, 5).unwrap(), int(-66));
    assert_eq!(a_value(IdentityId::Kl2K8, 7).unwrap(), int(176));
}

#[test]
fn small_prime_sweep() {
    for id in IdentityId::ALL {
        for r in verify_identity(id, &primes(2, 40)) {
            let c = r.unwrap();
            assert!(c.passed(), "{c:?}");
            assert!(c.integral);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn ramanujan_and_integrality(idx in 0usize..9, pi in 0usize..46) {
        let id = IdentityId::ALL[idx];
        let p = primes(2, 199)[pi];
        prop_assume!(id.identity().is_good(p));
        let c = verify_prime(id, p).unwrap();
        prop_assert!(c.integral && c.ramanujan && c.pure, "{:?}", c);
        let f = local_factor(id, p).unwrap();
        prop_assert_eq!(f.is_pure(PURITY_TOLERANCE), f.is_pure_exact());
    }

    #[test]
    fn eta_weight_and_shift(factors in proptest::collection::vec((1u32..8, -3i32..4), 1..4)) {
        let ep = EtaProduct::new(&factors, 10);
        let sum = ep.q_exponent_sum();
        let res = eta_product(&ep);
        if sum % 24 == 0 {
            let coeffs = res.unwrap();
            prop_assert_eq!(coeffs.len(), 10);
            if sum == 24 {
                prop_assert_eq!(&coeffs[0], &BigInt::from(1));
            }
        } else {
            let is_err = matches!(res, Err(EvansError::NonIntegralPower { .. }));
            prop_assert!(is_err);
        }
        let twice: i32 = factors.iter().map(|f| f.1).sum();
        prop_assert_eq!(ep.weight() * 2, num_rational::Rational32::from_integer(twice));
    }
}
