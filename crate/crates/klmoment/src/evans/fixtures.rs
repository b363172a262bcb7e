//! Read-only golden data shipped with the crate: the printed tables of
//! normalized traces, and the Hecke eigenvalue tables used to eliminate
//! candidate levels (kept for reference only).

use super::registry::IdentityId;
use super::EvansError;
use serde::Deserialize;
use std::collections::BTreeMap;
use std::sync::OnceLock;

const A_VALUES_JSON: &str = include_str!("../../fixtures/a_values.json");
const HECKE_JSON: &str = include_str!("../../fixtures/hecke_elimination.json");

/// One row of the level-elimination tables: the value of the characteristic
/// polynomial of `T_p` at the predicted trace, over `F_field`.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct HeckeRow {
    /// Identity whose form was being located.
    pub identity: String,
    /// Level of the space of modular symbols.
    pub level: u32,
    /// Weight of the space.
    pub weight: u32,
    /// Hecke operator index.
    pub p: u32,
    /// Characteristic of the finite field.
    pub field: u32,
    /// Value of the characteristic polynomial (non-zero rules the space out).
    pub value: i64,
}

fn parse_a_values() -> Result<BTreeMap<IdentityId, BTreeMap<u32, i64>>, EvansError> {
    let raw: BTreeMap<String, BTreeMap<String, i64>> =
        serde_json::from_str(A_VALUES_JSON).map_err(|e| EvansError::Fixture(e.to_string()))?;
    raw.into_iter()
        .map(|(id, table)| {
            let id: IdentityId = id.parse()?;
            let table = table
                .into_iter()
                .map(|(p, a)| {
                    p.parse::<u32>()
                        .map(|p| (p, a))
                        .map_err(|e| EvansError::Fixture(format!("{id}: {e}")))
                })
                .collect::<Result<_, _>>()?;
            Ok((id, table))
        })
        .collect()
}

/// The printed a-value tables, keyed by identity and prime.
pub fn a_value_fixtures() -> &'static BTreeMap<IdentityId, BTreeMap<u32, i64>> {
    static TABLE: OnceLock<BTreeMap<IdentityId, BTreeMap<u32, i64>>> = OnceLock::new();
    TABLE.get_or_init(|| parse_a_values().expect("the shipped fixture parses"))
}

/// The level-elimination tables.
pub fn hecke_elimination_table() -> Result<Vec<HeckeRow>, EvansError> {
    serde_json::from_str(HECKE_JSON).map_err(|e| EvansError::Fixture(e.to_string()))
}
