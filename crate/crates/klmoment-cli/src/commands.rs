//! The subcommands other than `bench`.

use crate::args::{GroupArg, MethodArg, PrimeRange};
use crate::error::CliError;
use crate::report::{big, rational, record, Report};
use klmoment::evans::{
    a_value_from_moment, cross_identity_sides, identity_for, validate_candidate, verify_identity,
    EvansError, IdentityId, ETA_CANDIDATES,
};
use klmoment::exactalg::prime::{is_prime, primes_in};
use klmoment::invdims::{
    dim_breakdown_weight, hodge_numbers_weight, infinity_data, Characteristic,
};
use klmoment::klsum::KlStore;
use klmoment::monodromy::{p3_data, p3_inv_dim, p3_swan};
use klmoment::weylchar::{moment_over, moment_tower, HighestWeight, MomentMethod, MomentOptions};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{Map, Value};

fn weight_json(lambda: &HighestWeight) -> Value {
    Value::from(lambda.coords().to_vec())
}

fn characteristic(p: Option<u32>) -> Result<Characteristic, CliError> {
    match p {
        None => Ok(Characteristic::Generic),
        Some(p) if is_prime(p as u64) => Ok(Characteristic::Prime(p)),
        Some(p) => Err(CliError::Usage(format!("{p} is not prime"))),
    }
}

fn a_value_json(
    nplus1: u32,
    lambda: &HighestWeight,
    p: u32,
    m: &BigInt,
) -> Result<Value, CliError> {
    let Some(e) = identity_for(nplus1, lambda) else {
        return Ok(Value::Null);
    };
    if !e.is_good(p) {
        return Ok(Value::Null);
    }
    match a_value_from_moment(e.id, p, m) {
        Ok(a) => Ok(rational(&a)),
        Err(EvansError::NonIntegral { value, .. }) => Ok(Value::String(value)),
        Err(err) => Err(err.into()),
    }
}

pub fn moment(
    store: &KlStore,
    nplus1: u32,
    lambda: &HighestWeight,
    p: u32,
    depth: Option<u32>,
    force: bool,
    method: MethodArg,
) -> Result<Report, CliError> {
    let method = match method {
        MethodArg::Auto => MomentMethod::Auto,
        MethodArg::Exact => MomentMethod::Exact,
        MethodArg::Modular => MomentMethod::Modular,
    };
    let opts = MomentOptions {
        method,
        force,
        ..MomentOptions::default()
    };
    let m = moment_over(store, nplus1, lambda, p, 1, opts)?;
    let a = a_value_json(nplus1, lambda, p, &m)?;
    let mut text = format!("m_{nplus1}^{lambda}({p}) = {m}");
    if !a.is_null() {
        text.push_str(&format!(", a({p}) = {}", crate::report::plain(&a)));
    }
    let mut rec = record([
        ("nplus1", Value::from(nplus1)),
        ("lambda", weight_json(lambda)),
        ("p", Value::from(p)),
        ("moment", big(&m)),
        ("a_value", a),
    ]);
    if let Some(d) = depth {
        let tower = moment_tower(store, nplus1, lambda, p, d, opts)?;
        text.push_str(&format!(
            "; tower [{}]",
            tower
                .iter()
                .map(|t| t.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        ));
        rec.insert(
            "tower".into(),
            Value::Array(tower.iter().map(big).collect()),
        );
    }
    Ok(Report::single(rec, text))
}

fn check_record(id: &str, p: u32, pass: bool, detail: Value, status: &str) -> Map<String, Value> {
    record([
        ("id", Value::from(id)),
        ("p", Value::from(p)),
        ("pass", Value::from(pass)),
        ("status", Value::from(status)),
        ("detail", detail),
    ])
}

fn identity_rows(id: IdentityId, primes: &[u32]) -> Vec<(Map<String, Value>, String)> {
    verify_identity(id, primes)
        .into_iter()
        .map(|r| match r {
            Ok(c) => {
                let pass = c.passed();
                let mut notes = Vec::new();
                if !c.integral {
                    notes.push("non-integral");
                }
                if !c.ramanujan {
                    notes.push("Ramanujan bound exceeded");
                }
                if !c.pure {
                    notes.push("impure local factor");
                }
                if c.fixture == Some(false) {
                    notes.push("fixture mismatch");
                }
                if c.cm == Some(false) {
                    notes.push("CM vanishing fails (soft)");
                }
                let status = if pass { "pass" } else { "fail" };
                let detail = record([
                    ("a_value", rational(&c.a_value)),
                    ("moment", big(&c.moment)),
                    ("fixture", c.fixture.map_or(Value::Null, Value::from)),
                    ("notes", Value::from(notes.join("; "))),
                ]);
                let line = format!(
                    "{id} p={} a={} {}{}",
                    c.p,
                    c.a_value,
                    status.to_uppercase(),
                    if notes.is_empty() {
                        String::new()
                    } else {
                        format!(" ({})", notes.join("; "))
                    }
                );
                (
                    check_record(id.as_str(), c.p, pass, Value::Object(detail), status),
                    line,
                )
            }
            Err(e) => {
                let p = match e {
                    EvansError::BadPrime { p, .. } | EvansError::NotPrime(p) => p,
                    _ => 0,
                };
                let line = format!("{id} p={p} FAIL ({e})");
                (
                    check_record(id.as_str(), p, false, Value::from(e.to_string()), "error"),
                    line,
                )
            }
        })
        .collect()
}

fn cross_rows(primes: &[u32]) -> Vec<(Map<String, Value>, String)> {
    let good: Vec<u32> = primes.iter().copied().filter(|&p| p >= 5).collect();
    good.par_iter()
        .map(|&p| match cross_identity_sides(p) {
            Ok((lhs, rhs)) => {
                let pass = lhs == rhs;
                let status = if pass { "pass" } else { "fail" };
                let line = format!("cross p={p} lhs={lhs} rhs={rhs} {}", status.to_uppercase());
                let detail = record([("lhs", big(&lhs)), ("rhs", big(&rhs))]);
                (
                    check_record("cross", p, pass, Value::Object(detail), status),
                    line,
                )
            }
            Err(e) => (
                check_record("cross", p, false, Value::from(e.to_string()), "error"),
                format!("cross p={p} FAIL ({e})"),
            ),
        })
        .collect()
}

/// Candidate rows. A rejected candidate counts as a failure only when no
/// candidate for the same identity is accepted.
fn eta_rows() -> Vec<(Map<String, Value>, String)> {
    let reports: Vec<_> = ETA_CANDIDATES
        .iter()
        .map(|c| (c, validate_candidate(c)))
        .collect();
    let accepted_for = |id: IdentityId| {
        reports
            .iter()
            .any(|(c, r)| c.identity == id && matches!(r, Ok(r) if r.accepted()))
    };
    reports
        .iter()
        .map(|(c, r)| match r {
            Ok(r) => {
                let accepted = r.accepted();
                let status = if accepted { "accepted" } else { "rejected" };
                let pass = accepted || accepted_for(c.identity);
                let detail = record([
                    ("candidate", Value::from(c.name)),
                    ("weight", Value::from(r.weight.to_string())),
                    ("compared", Value::from(r.compared.len())),
                    ("mismatches", Value::from(r.mismatches.len())),
                    ("hecke", Value::from(r.hecke)),
                ]);
                let line = format!(
                    "eta {} vs {} ({} primes, {} mismatches, hecke {}) {}",
                    c.name,
                    c.identity,
                    r.compared.len(),
                    r.mismatches.len(),
                    r.hecke,
                    status.to_uppercase()
                );
                (
                    check_record("eta", c.max_prime, pass, Value::Object(detail), status),
                    line,
                )
            }
            Err(e) => (
                check_record(
                    "eta",
                    c.max_prime,
                    false,
                    Value::from(e.to_string()),
                    "error",
                ),
                format!("eta {} FAIL ({e})", c.name),
            ),
        })
        .collect()
}

pub fn verify(id: &str, range: PrimeRange) -> Result<(Report, bool), CliError> {
    let primes: Vec<u32> = primes_in(range.lo as u64, range.hi as u64)
        .into_iter()
        .map(|p| p as u32)
        .collect();
    let mut rows = Vec::new();
    match id {
        "all" => {
            for id in IdentityId::ALL {
                rows.extend(identity_rows(id, &primes));
            }
            rows.extend(cross_rows(&primes));
            rows.extend(eta_rows());
        }
        "cross" => rows.extend(cross_rows(&primes)),
        "eta" => rows.extend(eta_rows()),
        other => rows.extend(identity_rows(other.parse::<IdentityId>()?, &primes)),
    }
    let passed = rows
        .iter()
        .filter(|(r, _)| r["pass"] == Value::Bool(true))
        .count();
    let failed = rows.len() - passed;
    let (records, mut text): (Vec<_>, Vec<_>) = rows.into_iter().unzip();
    text.push(format!(
        "total {} checks, {passed} passed, {failed} failed",
        records.len()
    ));
    let summary = record([
        ("checks", Value::from(records.len())),
        ("passed", Value::from(passed)),
        ("failed", Value::from(failed)),
    ]);
    Ok((
        Report {
            records,
            summary: Some(summary),
            text,
        },
        failed == 0,
    ))
}

pub fn dims(nplus1: u32, lambda: &HighestWeight, p: Option<u32>) -> Result<Report, CliError> {
    let ch = characteristic(p)?;
    let d = dim_breakdown_weight(nplus1, lambda, ch)?;
    let rec = record([
        ("nplus1", Value::from(nplus1)),
        ("lambda", weight_json(lambda)),
        ("p", p.map_or(Value::Null, Value::from)),
        ("swan", Value::from(d.swan)),
        ("inv0", Value::from(d.inv0)),
        ("inv_infinity", Value::from(d.inv_infinity)),
        ("global", Value::from(d.global)),
        ("dim", Value::from(d.dim)),
    ]);
    let text = format!(
        "dim = {} = {} − {} − {} + {} ({lambda}, Kl_{nplus1}, {ch})",
        d.dim, d.swan, d.inv0, d.inv_infinity, d.global
    );
    Ok(Report::single(rec, text))
}

pub fn hodge(nplus1: u32, lambda: &HighestWeight) -> Result<Report, CliError> {
    let h = hodge_numbers_weight(nplus1, lambda)?;
    let map: Map<String, Value> = h
        .iter()
        .map(|(p, v)| (p.to_string(), Value::from(*v)))
        .collect();
    let text = format!(
        "{{{}}}",
        h.iter()
            .map(|(p, v)| format!("{p}:{v}"))
            .collect::<Vec<_>>()
            .join(",")
    );
    let rec = record([
        ("nplus1", Value::from(nplus1)),
        ("lambda", weight_json(lambda)),
        ("weight", Value::from(lambda.motive_weight(nplus1))),
        ("hodge", Value::Object(map)),
    ]);
    Ok(Report::single(rec, text))
}

pub fn molien(group: GroupArg, terms: usize) -> Result<Report, CliError> {
    let data = p3_data()?;
    let (name, series, order) = match group {
        GroupArg::G108 => ("g108", &data.p, data.g108.order()),
        GroupArg::G216 => ("g216", &data.p_tilde, data.g216.order()),
    };
    let coeffs = series.integer_series(terms)?;
    let num: Vec<Value> = series.numerator().iter().map(rational).collect();
    let den: Vec<Value> = series.denominator().iter().map(rational).collect();
    let text = format!(
        "{name} (order {order}): {}\nseries: {}",
        series,
        coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{c}x^{i}"))
            .collect::<Vec<_>>()
            .join(" + ")
    );
    let rec = record([
        ("group", Value::from(name)),
        ("order", Value::from(order)),
        ("numerator", Value::Array(num)),
        ("denominator", Value::Array(den)),
        ("series", Value::Array(coeffs.iter().map(big).collect())),
    ]);
    Ok(Report::single(rec, text))
}

pub fn swan(nplus1: u32, lambda: &HighestWeight, p: Option<u32>) -> Result<Report, CliError> {
    let ch = characteristic(p)?;
    let (swan, invariants) = match (ch, lambda.coords()) {
        (Characteristic::Prime(3), [k]) if nplus1 == 3 => {
            let s = p3_swan(*k);
            if !s.is_integer() {
                return Err(CliError::Usage(format!("non-integral Swan conductor {s}")));
            }
            (s.to_integer(), p3_inv_dim(*k)?)
        }
        _ => {
            let d = infinity_data(nplus1, lambda, ch)?;
            (BigInt::from(d.swan), d.invariants)
        }
    };
    let rec = record([
        ("nplus1", Value::from(nplus1)),
        ("lambda", weight_json(lambda)),
        ("p", p.map_or(Value::Null, Value::from)),
        ("swan", big(&swan)),
        ("inv_infinity", Value::from(invariants)),
    ]);
    let text = format!("Sw_∞ = {swan}, dim inv_∞ = {invariants} ({lambda}, Kl_{nplus1}, {ch})");
    Ok(Report::single(rec, text))
}
