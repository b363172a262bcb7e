//! Generating series at 0, multi-index counts, Swan conductors, dimensions,
//! Hodge numbers and zeta series.

use klmoment::invdims::{
    b_count, b_count_index_weighted, compositions, dim_breakdown_weight, dim_mid, dim_motive,
    hodge_numbers, hodge_numbers_weight, infinity_data, inv0_coeffs, inv0_trace, inv_infinity_dim,
    mk_coeffs, mk_series, multi_index_set, multi_index_set_with_root, swan_infinity,
    zeta_from_moments, zeta_series, Characteristic, InvError, RatFunc,
};
use klmoment::weylchar::HighestWeight;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use proptest::prelude::*;
use std::collections::BTreeMap;

use Characteristic::{Generic, Prime};

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Coefficients of `(1 − x)·[n+k choose k]_x`, counting partitions that fit
/// in a `k × n` box.
fn box_partition_oracle(n: u32, k: u32) -> Vec<i64> {
    fn count(parts: u32, max: u32, total: u32) -> i64 {
        if total == 0 {
            return 1;
        }
        if parts == 0 || max == 0 {
            return 0;
        }
        (0..=max.min(total))
            .map(|first| {
                if first == 0 {
                    0
                } else {
                    count(parts - 1, first, total - first)
                }
            })
            .sum()
    }
    let top = n * k;
    let gauss: Vec<i64> = (0..=top).map(|u| count(k, n, u)).collect();
    (0..=top + 1)
        .map(|u| {
            gauss.get(u as usize).copied().unwrap_or(0)
                - if u > 0 { gauss[u as usize - 1] } else { 0 }
        })
        .collect()
}

/// `C_I = 0` tested through the complex embedding.
fn generic_vanishes(index: &[u32]) -> bool {
    let m = index.len() as f64;
    let (mut re, mut im) = (0.0, 0.0);
    for (j, &x) in index.iter().enumerate() {
        let ang = std::f64::consts::TAU * j as f64 / m;
        re += x as f64 * ang.cos();
        im += x as f64 * ang.sin();
    }
    re.abs() < 1e-9 && im.abs() < 1e-9
}

/// `C_I = 0` in `F_p` for `p ≡ 1 (mod n+1)`, with a root found by search.
fn prime_field_count(nplus1: u32, k: u32, p: u32) -> usize {
    let pow = |b: u64, e: u32| (0..e).fold(1u64, |a, _| a * b % p as u64);
    let zeta = (2..p as u64)
        .find(|&z| pow(z, nplus1) == 1 && (1..nplus1).all(|d| pow(z, d) != 1))
        .expect("p ≡ 1 mod n+1");
    compositions(k, nplus1 as usize)
        .iter()
        .filter(|i| {
            i.iter()
                .enumerate()
                .map(|(j, &x)| x as u64 * pow(zeta, j as u32))
                .sum::<u64>()
                % p as u64
                == 0
        })
        .count()
}

#[test]
fn fu_wan_series_examples() {
    assert_eq!(mk_coeffs(3, 4), vec![1, 0, 1, 0, 1]);
    assert_eq!(mk_coeffs(3, 3).iter().sum::<i64>(), 2);
    for k in 1..8 {
        let expect: Vec<i64> = (0..=k + 1)
            .map(|i| i64::from(i == 0) - i64::from(i == k + 1))
            .collect();
        assert_eq!(mk_series(2, k), RatFunc::from_ints(&expect, &[1]).unwrap());
        assert_eq!(mk_coeffs(2, k).iter().sum::<i64>(), 1);
    }
}

#[test]
fn fu_wan_series_matches_box_partitions() {
    for nplus1 in 2..=5u32 {
        for k in 1..=7u32 {
            let oracle = box_partition_oracle(nplus1 - 1, k);
            let coeffs = mk_coeffs(nplus1, k);
            assert_eq!(coeffs[..], oracle[..coeffs.len()], "n+1={nplus1} k={k}");
            assert!(coeffs.iter().all(|&c| c >= 0));
        }
    }
}

#[test]
fn traces_at_zero() {
    assert_eq!(inv0_trace(3, 6, 3), BigInt::from(820));
    for p in [2u32, 3, 5, 7, 11] {
        assert_eq!(inv0_trace(3, 3, p), BigInt::from(1 + p * p));
        assert_eq!(inv0_trace(2, 5, p), BigInt::from(1));
    }
}

#[test]
fn invariants_at_zero_for_general_weights() {
    for nplus1 in 2..=4u32 {
        for k in 1..=6u32 {
            assert_eq!(
                inv0_coeffs(nplus1, &HighestWeight::sym(k)).unwrap(),
                mk_coeffs(nplus1, k)
            );
        }
    }
    // E(−1) ⊕ E(−2) ⊕ E(−3) and E(−2) ⊕ E(−3) ⊕ E(−4)² ⊕ E(−6).
    assert_eq!(
        inv0_coeffs(3, &HighestWeight::new(&[2, 1])).unwrap(),
        vec![0, 1, 1, 1, 0]
    );
    assert_eq!(
        inv0_coeffs(3, &HighestWeight::new(&[2, 2])).unwrap(),
        vec![0, 0, 1, 1, 2, 0, 1]
    );
}

#[test]
fn multi_index_examples() {
    assert_eq!(multi_index_set(3, 4, Generic).unwrap().d(), 0);
    let s = multi_index_set(3, 4, Prime(7)).unwrap();
    assert_eq!((s.d(), s.a()), (3, 1));
    assert!(s.indices.contains(&vec![3, 0, 1]));
    let s = multi_index_set(3, 4, Prime(2)).unwrap();
    assert_eq!((s.d(), s.a()), (6, 2));
    let s = multi_index_set(3, 3, Prime(13)).unwrap();
    assert_eq!(s.indices, vec![vec![1, 1, 1]]);
    assert!(matches!(
        multi_index_set(3, 4, Prime(3)),
        Err(InvError::CharDividesOrder { p: 3, nplus1: 3 })
    ));
}

#[test]
fn multi_index_counts_match_oracles() {
    for nplus1 in 2..=6u32 {
        for k in 0..=8u32 {
            let generic = compositions(k, nplus1 as usize)
                .iter()
                .filter(|i| generic_vanishes(i))
                .count();
            assert_eq!(
                multi_index_set(nplus1, k, Generic).unwrap().d(),
                generic,
                "n+1={nplus1} k={k}"
            );
        }
    }
    for (nplus1, p) in [
        (3u32, 7u32),
        (3, 13),
        (4, 5),
        (4, 13),
        (5, 11),
        (2, 3),
        (2, 5),
    ] {
        for k in 0..=8u32 {
            assert_eq!(
                multi_index_set(nplus1, k, Prime(p)).unwrap().d(),
                prime_field_count(nplus1, k, p)
            );
        }
    }
}

#[test]
fn b_counts() {
    for k in [1u32, 3, 5, 7] {
        assert_eq!(b_count(k, 2, Generic).unwrap(), 0);
    }
    assert_eq!(b_count(6, 2, Generic).unwrap(), 0);
    assert_eq!(b_count(8, 2, Generic).unwrap(), 1);
    assert_eq!(b_count(4, 4, Generic).unwrap(), 1);
}

#[test]
fn index_weighted_signs_contradict_the_motive_dimensions() {
    // Weighting by (−1)^{m_I} keeps the orbit of (3,3) and of (1,1,1,1);
    // the dimension formula would then give 1 for both weight-4 and
    // Sym⁴Kl₄ motives, which are two-dimensional.
    assert_eq!(b_count_index_weighted(6, 2, Generic).unwrap(), 1);
    assert_eq!(b_count_index_weighted(4, 4, Generic).unwrap(), 2);
    assert_eq!(dim_motive(2, 6).unwrap(), 2);
    assert_eq!(dim_motive(4, 4).unwrap(), 2);
}

#[test]
fn swan_examples() {
    let int = |n: i64| BigRational::from_integer(BigInt::from(n));
    assert_eq!(swan_infinity(3, 3, Prime(5)).unwrap(), int(3));
    assert_eq!(swan_infinity(3, 4, Prime(7)).unwrap(), int(4));
    assert_eq!(swan_infinity(2, 2, Prime(5)).unwrap(), int(1));
    assert!(matches!(
        swan_infinity(4, 2, Prime(2)),
        Err(InvError::CharDividesOrder { .. })
    ));
}

#[test]
fn character_method_agrees_with_counts() {
    let chars = [Generic, Prime(2), Prime(3), Prime(5), Prime(7), Prime(13)];
    for nplus1 in 2..=5u32 {
        for k in 1..=6u32 {
            for ch in chars {
                if let Prime(p) = ch {
                    if nplus1 % p == 0 {
                        continue;
                    }
                }
                let data = infinity_data(nplus1, &HighestWeight::sym(k), ch).unwrap();
                let swan = swan_infinity(nplus1, k, ch)
                    .unwrap()
                    .to_integer()
                    .to_u64()
                    .unwrap();
                assert_eq!(data.swan, swan, "swan n+1={nplus1} k={k} {ch}");
                assert_eq!(
                    data.invariants,
                    inv_infinity_dim(nplus1, k, ch).unwrap() as u64,
                    "inv n+1={nplus1} k={k} {ch}"
                );
            }
        }
    }
}

#[test]
fn non_symmetric_weights_at_infinity() {
    let l21 = HighestWeight::new(&[2, 1]);
    let l22 = HighestWeight::new(&[2, 2]);
    for p in [5u32, 11, 13] {
        let d = infinity_data(3, &l21, Prime(p)).unwrap();
        assert_eq!((d.swan, d.invariants), (5, 0), "p={p}");
    }
    for p in [2u32, 7] {
        let d = infinity_data(3, &l21, Prime(p)).unwrap();
        assert_eq!((d.swan, d.invariants), (4, 1), "p={p}");
    }
    for p in [5u32, 7, 11] {
        let d = infinity_data(3, &l22, Prime(p)).unwrap();
        assert_eq!((d.swan, d.invariants), (8, 1), "p={p}");
    }
    let d = infinity_data(3, &l22, Prime(2)).unwrap();
    assert_eq!((d.swan, d.invariants), (6, 3));
    assert_eq!(dim_breakdown_weight(3, &l21, Generic).unwrap().dim, 2);
    assert_eq!(dim_breakdown_weight(3, &l22, Generic).unwrap().dim, 2);
    assert!(matches!(
        dim_breakdown_weight(3, &l21, Prime(2)),
        Err(InvError::OutOfScope(_))
    ));
}

#[test]
fn motive_dimensions() {
    for ((nplus1, k), dim) in [
        ((3, 4), 2),
        ((4, 3), 2),
        ((5, 3), 2),
        ((3, 6), 4),
        ((3, 3), 0),
        ((2, 6), 2),
        ((2, 8), 2),
    ] {
        assert_eq!(dim_motive(nplus1, k).unwrap(), dim, "n+1={nplus1} k={k}");
    }
    assert_eq!(dim_mid(3, 6, 3).unwrap(), 0);
    assert_eq!(dim_mid(3, 4, 3).unwrap(), 2);
    assert!(matches!(
        dim_mid(4, 3, 2),
        Err(InvError::CharDividesOrder { .. })
    ));
}

#[test]
fn good_primes_give_the_motive_dimension() {
    for nplus1 in 2..=5u32 {
        for k in 1..=7u32 {
            let generic = multi_index_set(nplus1, k, Generic).unwrap().d();
            let motive = dim_motive(nplus1, k).unwrap();
            for p in [2u32, 3, 5, 7, 11, 13, 17, 19] {
                if nplus1 % p == 0 || multi_index_set(nplus1, k, Prime(p)).unwrap().d() != generic {
                    continue;
                }
                if p == 2 && k % 2 == 0 {
                    continue;
                }
                assert_eq!(
                    dim_mid(nplus1, k, p).unwrap(),
                    motive,
                    "n+1={nplus1} k={k} p={p}"
                );
            }
        }
    }
}

#[test]
fn hodge_examples() {
    assert_eq!(
        hodge_numbers(3, 4).unwrap(),
        BTreeMap::from([(3, 1), (6, 1)])
    );
    assert_eq!(
        hodge_numbers(4, 3).unwrap(),
        BTreeMap::from([(4, 1), (6, 1)])
    );
    assert_eq!(
        hodge_numbers(5, 3).unwrap(),
        BTreeMap::from([(5, 1), (8, 1)])
    );
    assert_eq!(
        hodge_numbers(3, 6).unwrap(),
        BTreeMap::from([(3, 1), (5, 1), (8, 1), (10, 1)])
    );
    assert_eq!(
        hodge_numbers(4, 4).unwrap(),
        BTreeMap::from([(4, 1), (9, 1)])
    );
    assert_eq!(
        hodge_numbers_weight(3, &HighestWeight::new(&[2, 1])).unwrap(),
        BTreeMap::from([(4, 1), (5, 1)])
    );
    assert_eq!(
        hodge_numbers_weight(3, &HighestWeight::new(&[2, 2])).unwrap(),
        BTreeMap::from([(5, 1), (8, 1)])
    );
    assert!(matches!(hodge_numbers(4, 6), Err(InvError::OutOfScope(_))));
}

#[test]
fn hodge_mass_is_the_motive_dimension() {
    let mut pairs: Vec<(u32, u32)> = vec![(3, 4), (4, 3), (5, 3), (3, 6), (4, 4)];
    pairs.extend((1..=11).step_by(2).map(|k| (2, k)));
    pairs.extend((1..=12).map(|k| (3, k)));
    pairs.extend([(4, 1), (4, 5), (5, 1), (5, 2), (5, 4), (7, 3)]);
    for (nplus1, k) in pairs {
        let h = hodge_numbers(nplus1, k).unwrap();
        let weight = (nplus1 - 1) * k + 1;
        assert!(
            h.iter().all(|(p, v)| h.get(&(weight - p)) == Some(v)),
            "symmetry n+1={nplus1} k={k}"
        );
        assert_eq!(
            h.values().sum::<u32>() as u64,
            dim_motive(nplus1, k).unwrap(),
            "n+1={nplus1} k={k}"
        );
    }
}

#[test]
fn zeta_series_examples() {
    let r = |n: i64| BigRational::from_integer(BigInt::from(n));
    // λ = 0: (1 − T)/(1 − pT) = 1 + (p − 1)T + (p² − p)T² + …
    let z = zeta_series(3, &HighestWeight::default(), 5, 3).unwrap();
    assert_eq!(z, vec![r(1), r(4), r(20), r(100)]);
    assert_eq!(
        zeta_series(3, &HighestWeight::sym(3), 3, 1).unwrap(),
        vec![r(1), r(-10)]
    );
    // Kl₂ itself: m(p^r) = −1 for every r, so Z = 1 − T.
    let z = zeta_series(2, &HighestWeight::sym(1), 5, 3).unwrap();
    assert_eq!(z, vec![r(1), r(-1), r(0), r(0)]);
    assert_eq!(zeta_from_moments(&[]), vec![r(1)]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn generic_counts_of_prime_order(pi in 0usize..3, k in 0u32..=12) {
        let nplus1 = [2u32, 3, 5][pi];
        let d = multi_index_set(nplus1, k, Generic).unwrap().d();
        prop_assert_eq!(d, usize::from(k % nplus1 == 0));
    }

    #[test]
    fn orbit_bounds(nplus1 in 2u32..=5, k in 0u32..=8, pi in 0usize..6) {
        let p = [2u32, 3, 5, 7, 11, 13][pi];
        prop_assume!(nplus1 % p != 0);
        let s = multi_index_set(nplus1, k, Prime(p)).unwrap();
        let total = binomial((k + nplus1 - 1) as u64, (nplus1 - 1) as u64) as usize;
        prop_assert!(s.a() <= s.d() && s.d() <= total);
        prop_assert!(nplus1 as usize * s.a() >= s.d());
        let covered: usize = s.orbits.iter().map(Vec::len).sum();
        prop_assert_eq!(covered, s.d());
        prop_assert!(swan_infinity(nplus1, k, Prime(p)).unwrap().is_integer());
    }

    #[test]
    fn counts_do_not_depend_on_the_root(nplus1 in 3u32..=5, k in 1u32..=8, pi in 0usize..4) {
        let p = [7u32, 11, 13, 31][pi];
        let t = nplus1 - 1;
        let a = multi_index_set(nplus1, k, Prime(p)).unwrap();
        let b = multi_index_set_with_root(nplus1, k, Prime(p), t).unwrap();
        prop_assert_eq!(a.d(), b.d());
        prop_assert_eq!(a.a(), b.a());
    }

    #[test]
    fn fu_wan_coefficients_vanish_past_the_middle(nplus1 in 2u32..=5, k in 1u32..=8) {
        let n = nplus1 - 1;
        let half = (n * k / 2) as usize;
        let full = mk_series(nplus1, k).integer_series((n * k) as usize + 2).unwrap();
        prop_assert!(full[..=half].iter().all(|c| c >= &BigInt::from(0)));
        prop_assert_eq!(mk_coeffs(nplus1, k).len(), half + 1);
    }
}
