//! Acceptance gate: one line per criterion.
//!
//! A criterion either passes, fails, or fails with a documented analysis
//! (listed in `DOCUMENTED`). The process exits non-zero only when some
//! criterion fails without such an analysis.

use klmoment::evans::{
    cross_identity, hecke_elimination_table, validate_candidate, verify_identity, IdentityId,
    ETA_CANDIDATES,
};
use klmoment::exactalg::prime::primes_in;
use klmoment::exactalg::{ext_field, ExtElem};
use klmoment::invdims::{
    dim_mid, dim_motive, hodge_numbers, inv0_trace, swan_infinity, Characteristic, RatFunc,
};
use klmoment::klsum::{kl_naive, kl_table, within_weil_bound, Backend, KlStore};
use klmoment::monodromy::{build_group, molien, p3_swan, GroupName};
use klmoment::weylchar::{moment_over, HighestWeight, MomentMethod, MomentOptions};
use klmoment::CycInt;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::time::{Duration, Instant};

/// Expected values that are known to disagree with the computation, with
/// the reason. The reference value 3901 for m₅³(5) contradicts the a-value
/// formula together with the reference a₅³(5) = −4.
const DOCUMENTED: &[(&str, &str)] = &[(
    "m5^3(5)",
    "reference 3901 contradicts a5^3(5) = -4 under the a-value formula; computed -3901",
)];

type Outcome = Result<String, Vec<String>>;

struct Gate {
    undocumented: usize,
}

impl Gate {
    fn run(&mut self, id: u32, name: &str, budget: Option<Duration>, f: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed();
        let over_budget = budget.is_some_and(|b| elapsed > b);
        let budget_note = budget
            .map(|b| format!(" / budget {:.0} s", b.as_secs_f64()))
            .unwrap_or_default();
        let time = format!("{:.2} s{budget_note}", elapsed.as_secs_f64());
        match outcome {
            Ok(detail) if !over_budget => println!("PASS [{id}] {name}: {detail} ({time})"),
            Ok(detail) => {
                self.undocumented += 1;
                println!("FAIL [{id}] {name}: {detail}; over time budget ({time})");
            }
            Err(failures) => {
                let documented: Vec<&String> = failures
                    .iter()
                    .filter(|f| DOCUMENTED.iter().any(|(key, _)| f.starts_with(key)))
                    .collect();
                let notes: Vec<String> = failures
                    .iter()
                    .map(
                        |f| match DOCUMENTED.iter().find(|(key, _)| f.starts_with(key)) {
                            Some((_, why)) => format!("{f} [documented: {why}]"),
                            None => f.clone(),
                        },
                    )
                    .collect();
                if documented.len() < failures.len() || over_budget {
                    self.undocumented += 1;
                }
                let budget_flag = if over_budget {
                    "; over time budget"
                } else {
                    ""
                };
                println!(
                    "FAIL [{id}] {name}: {}{budget_flag} ({time})",
                    notes.join("; ")
                );
            }
        }
    }
}

fn collect(failures: Vec<String>, ok: String) -> Outcome {
    if failures.is_empty() {
        Ok(ok)
    } else {
        Err(failures)
    }
}

fn moment(nplus1: u32, lambda: &[u32], p: u32) -> Result<BigInt, String> {
    let store = KlStore::default();
    moment_over(
        &store,
        nplus1,
        &HighestWeight::new(lambda),
        p,
        1,
        MomentOptions::default(),
    )
    .map_err(|e| e.to_string())
}

fn a_value(id: IdentityId, p: u32) -> Result<BigRational, String> {
    klmoment::evans::a_value(id, p).map_err(|e| e.to_string())
}

fn reference_table() -> Outcome {
    let mut failures = Vec::new();
    let mut count = 0;
    let mut check = |label: String, got: Result<BigInt, String>, want: i64| {
        count += 1;
        match got {
            Ok(v) if v == BigInt::from(want) => {}
            Ok(v) => failures.push(format!("{label} = {v}, expected {want}")),
            Err(e) => failures.push(format!("{label}: {e}")),
        }
    };
    let a = |id, p| {
        a_value(id, p).and_then(|r| {
            r.to_integer()
                .to_i64()
                .map(BigInt::from)
                .ok_or("huge".into())
        })
    };
    check("m3^3(3)".into(), moment(3, &[3], 3), -10);
    check("m3^6(3)".into(), moment(3, &[6], 3), -820);
    check("a3^4(3)".into(), a(IdentityId::Sym4Kl3, 3), -2);
    check("a3^4(5)".into(), a(IdentityId::Sym4Kl3, 5), -12);
    check("m4^3(2)".into(), moment(4, &[3], 2), 3);
    check("a4^3(2)".into(), a(IdentityId::Sym3Kl4, 2), -1);
    check("a4^4(3)".into(), a(IdentityId::Sym4Kl4, 3), -26);
    check("a4^4(7)".into(), a(IdentityId::Sym4Kl4, 7), -22);
    check("m5^3(2)".into(), moment(5, &[3], 2), -61);
    check("m5^3(5)".into(), moment(5, &[3], 5), 3901);
    check("a5^3(2)".into(), a(IdentityId::Sym3Kl5, 2), -1);
    check("a5^3(5)".into(), a(IdentityId::Sym3Kl5, 5), -4);
    for (p, want) in [(5, 0), (11, 0), (13, -4), (17, 6), (19, 2), (23, 0)] {
        check(format!("a3^(2,1)({p})"), a(IdentityId::Kl3V21, p), want);
    }
    for (p, want) in [
        (5, 6),
        (7, -16),
        (11, 12),
        (13, 38),
        (17, -126),
        (19, 20),
        (23, 168),
    ] {
        check(format!("a3^(2,2)({p})"), a(IdentityId::Kl3V22, p), want);
    }
    collect(failures, format!("{count} values match"))
}

fn kl_pins() -> Outcome {
    let mut failures = Vec::new();
    for (r, want) in [(1, 1), (2, 11)] {
        let one = ExtElem::from_int(&ext_field(2, r).unwrap(), 1);
        match kl_naive(4, 2, r, &one) {
            Ok(v) if v == CycInt::from_int(2, want) => {}
            Ok(v) => failures.push(format!("Kl4(1;{}) = {v:?}, expected {want}", 1 << r)),
            Err(e) => failures.push(e.to_string()),
        }
    }
    collect(failures, "Kl4(1;2) = 1, Kl4(1;4) = 11".into())
}

fn poly(terms: &[(usize, i64)]) -> RatFunc {
    let deg = terms.iter().map(|t| t.0).max().unwrap_or(0);
    let mut c = vec![0i64; deg + 1];
    for &(e, v) in terms {
        c[e] += v;
    }
    RatFunc::from_ints(&c, &[1]).unwrap()
}

fn over(num: &RatFunc, den: &RatFunc) -> RatFunc {
    num * &RatFunc::new(den.denominator().to_vec(), den.numerator().to_vec()).unwrap()
}

fn molien_reproduction() -> Outcome {
    let mut failures = Vec::new();
    let series = |g| -> Result<RatFunc, String> {
        let group = build_group(g).map_err(|e| e.to_string())?;
        molien(&group.elements).map_err(|e| e.to_string())
    };
    let (p, p_tilde) = match (series(GroupName::G108), series(GroupName::G216)) {
        (Ok(a), Ok(b)) => (a, b),
        (a, b) => return Err(vec![format!("{:?} {:?}", a.err(), b.err())]),
    };
    let m1 = poly(&[(0, -1), (3, 1)]);
    let p1 = poly(&[(0, 1), (3, 1)]);
    let p6 = poly(&[(0, 1), (6, 1)]);
    let den = [&m1, &m1, &m1, &p1, &p1, &p6]
        .into_iter()
        .fold(RatFunc::one(), |acc, f| &acc * f);
    let printed_p = over(
        &poly(&[(0, -1), (3, 1), (6, -1), (12, -1), (15, 1), (18, -1)]),
        &den,
    );
    let printed_p_tilde = over(&poly(&[(0, -1), (3, 1), (9, -1), (15, 1), (18, -1)]), &den);
    let printed_q = over(&poly(&[(0, -1), (3, 1), (6, -1)]), &(&m1 * &p6));
    if p != printed_p {
        failures.push("molien(G108) differs from P".into());
    }
    if p_tilde != printed_p_tilde {
        failures.push("molien(G216) differs from P~".into());
    }
    let coeff = |r: &RatFunc| {
        r.integer_series(7)
            .map(|s| s[6].clone())
            .map_err(|e| e.to_string())
    };
    if coeff(&p) != Ok(BigInt::from(2)) || coeff(&p_tilde) != Ok(BigInt::from(1)) {
        failures.push("[x^6] coefficients are not 2 and 1".into());
    }
    let two = BigRational::from_integer(BigInt::from(2));
    if &p_tilde.scale(&two) - &p != printed_q {
        failures.push("2P~ - P differs from Q".into());
    }
    collect(
        failures,
        "P, P~ and 2P~ - P equal the printed forms; [x^6] = 2, 1".into(),
    )
}

fn chain_at_three() -> Outcome {
    let int = |n: i64| BigRational::from_integer(BigInt::from(n));
    let mut failures = Vec::new();
    if p3_swan(3) != int(2) {
        failures.push(format!("p3_swan(3) = {}", p3_swan(3)));
    }
    if p3_swan(6) != int(6) {
        failures.push(format!("p3_swan(6) = {}", p3_swan(6)));
    }
    if inv0_trace(3, 6, 3) != BigInt::from(820) {
        failures.push(format!("inv0_trace(3,6,3) = {}", inv0_trace(3, 6, 3)));
    }
    for (k, want) in [(6, 0), (4, 2)] {
        match dim_mid(3, k, 3) {
            Ok(d) if d == want => {}
            other => failures.push(format!("dim_mid(3,{k},3) = {other:?}")),
        }
    }
    collect(failures, "swan 2, 6; trace 820; dim_mid 0, 2".into())
}

fn dims_and_hodge() -> Outcome {
    let mut failures = Vec::new();
    for (nplus1, k, expected) in [
        (3, 4, [(3, 1), (6, 1)]),
        (4, 3, [(4, 1), (6, 1)]),
        (5, 3, [(5, 1), (8, 1)]),
    ] {
        let expected: BTreeMap<u32, u32> = expected.into_iter().collect();
        match (dim_motive(nplus1, k), hodge_numbers(nplus1, k)) {
            (Ok(2), Ok(h)) if h == expected && h.values().sum::<u32>() == 2 => {}
            (d, h) => failures.push(format!("(n+1,k) = ({nplus1},{k}): dim {d:?}, hodge {h:?}")),
        }
    }
    collect(
        failures,
        "dims 2 and Hodge maps match for (3,4), (4,3), (5,3)".into(),
    )
}

fn cross() -> Outcome {
    let primes: Vec<u32> = primes_in(5, 199).into_iter().map(|p| p as u32).collect();
    let failures: Vec<String> = primes
        .par_iter()
        .filter_map(|&p| match cross_identity(p) {
            Ok(true) => None,
            Ok(false) => Some(format!("fails at p = {p}")),
            Err(e) => Some(format!("p = {p}: {e}")),
        })
        .collect();
    collect(
        failures,
        format!("holds at all {} primes 5 ≤ p ≤ 199", primes.len()),
    )
}

fn properties() -> Outcome {
    let mut failures = Vec::new();
    let mut kl_values = 0usize;
    // (a) backend equivalence and (b) Weil bound.
    for nplus1 in 2..=5 {
        for (p, r) in [
            (2, 1),
            (3, 1),
            (2, 2),
            (5, 1),
            (7, 1),
            (2, 3),
            (3, 2),
            (11, 1),
            (13, 1),
        ] {
            let (naive, conv) = match (
                kl_table(nplus1, p, r, Backend::Naive),
                kl_table(nplus1, p, r, Backend::Convolution),
            ) {
                (Ok(a), Ok(b)) => (a, b),
                (a, b) => {
                    failures.push(format!(
                        "(a) n+1={nplus1} q={p}^{r}: {:?} {:?}",
                        a.err(),
                        b.err()
                    ));
                    continue;
                }
            };
            if naive.values() != conv.values() {
                failures.push(format!("(a) backends differ at n+1={nplus1} q={p}^{r}"));
            }
            let q = conv.q() as u64;
            kl_values += conv.values().len();
            if !conv
                .values()
                .iter()
                .all(|v| within_weil_bound(v, nplus1, q, 128))
            {
                failures.push(format!("(b) Weil bound fails at n+1={nplus1} q={q}"));
            }
        }
    }
    // (c) integrality and Ramanujan, (d) purity of the local factor.
    let primes: Vec<u32> = primes_in(2, 199).into_iter().map(|p| p as u32).collect();
    let mut identity_checks = 0usize;
    for id in IdentityId::ALL {
        for check in verify_identity(id, &primes) {
            identity_checks += 1;
            match check {
                Ok(c) => {
                    if !c.integral || !c.ramanujan {
                        failures.push(format!("(c) {id} at p = {}: a = {}", c.p, c.a_value));
                    }
                    if !c.pure {
                        failures.push(format!("(d) {id} at p = {}: local factor is not pure", c.p));
                    }
                }
                Err(e) => failures.push(format!("(c) {id}: {e}")),
            }
        }
    }
    // (e) character-choice independence.
    let store = KlStore::default();
    for (nplus1, lambda, p) in [
        (2u32, &[6u32][..], 7u32),
        (3, &[2, 1], 7),
        (3, &[4], 5),
        (4, &[3], 5),
        (5, &[3], 3),
    ] {
        let w = HighestWeight::new(lambda);
        let with = |c, method| {
            let opts = MomentOptions {
                psi_scale: c,
                method,
                force: false,
            };
            moment_over(&store, nplus1, &w, p, 1, opts).map_err(|e| e.to_string())
        };
        let base = with(1, MomentMethod::Exact);
        for c in 2..p.min(4) {
            for method in [MomentMethod::Exact, MomentMethod::Modular] {
                if with(c, method) != base {
                    failures.push(format!(
                        "(e) n+1={nplus1} λ={lambda:?} p={p} c={c} {method:?}"
                    ));
                }
            }
        }
    }
    // (f) Swan conductors at ∞ are integers.
    let mut swans = 0usize;
    for nplus1 in 2..=5u32 {
        for k in 0..=8u32 {
            for p in primes_in(2, 31) {
                let p = p as u32;
                let swan = if nplus1 == 3 && p == 3 {
                    Ok(p3_swan(k))
                } else if nplus1 % p == 0 {
                    continue;
                } else {
                    swan_infinity(nplus1, k, Characteristic::Prime(p)).map_err(|e| e.to_string())
                };
                swans += 1;
                match swan {
                    Ok(s) if s.is_integer() => {}
                    other => {
                        failures.push(format!("(f) Sw(Sym^{k} Kl_{nplus1}) at p={p}: {other:?}"))
                    }
                }
            }
        }
    }
    collect(
        failures,
        format!("(a,b) {kl_values} Kl values; (c,d) {identity_checks} identity checks; (e) 5 weights; (f) {swans} conductors"),
    )
}

fn eta_validation() -> Outcome {
    let mut failures = Vec::new();
    let mut accepted: BTreeMap<IdentityId, bool> = BTreeMap::new();
    let mut notes = Vec::new();
    for c in &ETA_CANDIDATES {
        match validate_candidate(c) {
            Ok(r) => {
                *accepted.entry(c.identity).or_default() |= r.accepted();
                let verdict = if r.accepted() { "accepted" } else { "rejected" };
                notes.push(format!(
                    "{} {verdict} (weight {}, {} primes)",
                    c.name,
                    r.weight,
                    r.compared.len()
                ));
            }
            Err(e) => failures.push(format!("{}: {e}", c.name)),
        }
    }
    for (id, ok) in &accepted {
        if !ok {
            failures.push(format!("no candidate accepted for {id}"));
        }
    }
    collect(failures, notes.join(", "))
}

fn disclosure() -> Outcome {
    match hecke_elimination_table() {
        Ok(rows) => Ok(format!(
            "potential automorphy, conductors and level elimination are not recomputed; \
             covered by criteria 7 and 8 and {} inert Hecke rows",
            rows.len()
        )),
        Err(e) => Err(vec![e.to_string()]),
    }
}

fn main() {
    let mut gate = Gate { undocumented: 0 };
    let single = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    gate.run(1, "reference values", Some(Duration::from_secs(60)), || {
        single.install(reference_table)
    });
    gate.run(2, "Kl value pins", None, kl_pins);
    gate.run(
        3,
        "Molien series",
        Some(Duration::from_secs(10)),
        molien_reproduction,
    );
    gate.run(4, "chain at p = 3", None, chain_at_three);
    gate.run(5, "dimensions and Hodge numbers", None, dims_and_hodge);
    gate.run(6, "cross identity", Some(Duration::from_secs(600)), cross);
    gate.run(7, "property suites", None, properties);
    gate.run(8, "eta products", None, eta_validation);
    gate.run(9, "out-of-scope disclosure", None, disclosure);
    if gate.undocumented > 0 {
        println!(
            "{} criteria failed without a documented analysis",
            gate.undocumented
        );
        std::process::exit(1);
    }
}
