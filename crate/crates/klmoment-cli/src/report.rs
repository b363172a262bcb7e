//! Reports and their JSON, CSV and text renderings.

use clap::ValueEnum;
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{Map, Number, Value};
use std::io::Write;

/// Version of the report layout.
pub const SCHEMA_VERSION: u64 = 1;

/// Output format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// The result of one command: records with a common key set, an optional
/// summary, and the human-readable lines.
#[derive(Debug, Clone, Default)]
pub struct Report {
    pub records: Vec<Map<String, Value>>,
    pub summary: Option<Map<String, Value>>,
    pub text: Vec<String>,
}

impl Report {
    /// A report with one record.
    pub fn single(record: Map<String, Value>, text: String) -> Self {
        Self {
            records: vec![record],
            summary: None,
            text: vec![text],
        }
    }

    /// The JSON document: the record itself for single-record reports,
    /// otherwise `{records, summary}`. Keys are sorted.
    pub fn to_json(&self) -> Value {
        let mut out = match (self.records.as_slice(), &self.summary) {
            ([one], None) => one.clone(),
            _ => {
                let mut m = Map::new();
                m.insert(
                    "records".into(),
                    Value::Array(self.records.iter().cloned().map(Value::Object).collect()),
                );
                if let Some(s) = &self.summary {
                    m.insert("summary".into(), Value::Object(s.clone()));
                }
                m
            }
        };
        out.insert("schema_version".into(), Value::from(SCHEMA_VERSION));
        Value::Object(out)
    }

    /// CSV with a header row taken from the first record.
    pub fn to_csv(&self) -> Result<String, csv::Error> {
        let mut w = csv::Writer::from_writer(Vec::new());
        if let Some(first) = self.records.first() {
            w.write_record(first.keys())?;
            for r in &self.records {
                w.write_record(first.keys().map(|k| r.get(k).map(cell).unwrap_or_default()))?;
            }
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
    }

    /// Writes the report in `format`.
    pub fn write(&self, format: Format, out: &mut impl Write) -> std::io::Result<()> {
        match format {
            Format::Json => writeln!(out, "{}", self.to_json()),
            Format::Csv => {
                let s = self.to_csv().map_err(std::io::Error::other)?;
                out.write_all(s.as_bytes())
            }
            Format::Text => self.text.iter().try_for_each(|l| writeln!(out, "{l}")),
        }
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

/// A JSON number for an arbitrary integer.
pub fn big(n: &BigInt) -> Value {
    Value::Number(
        n.to_string()
            .parse::<Number>()
            .expect("integers are valid JSON numbers"),
    )
}

/// An integral rational as a number, otherwise the string `num/den`.
pub fn rational(r: &BigRational) -> Value {
    if r.is_integer() {
        big(r.numer())
    } else {
        Value::String(r.to_string())
    }
}

/// Builds a record from key–value pairs.
pub fn record<const N: usize>(pairs: [(&str, Value); N]) -> Map<String, Value> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

/// A value without JSON string quotes.
pub fn plain(v: &Value) -> String {
    cell(v)
}
