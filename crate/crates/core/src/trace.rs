//! Finite paths and their ingestion from CSV and JSON-lines files.
//!
//! CSV: a header row of proposition names, then one row of `0`/`1` cells per
//! state. JSONL: one JSON array of the names true in each state, optionally
//! preceded by a declaration line `{"alphabet": [...]}`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::formula::{Literal, FALSE_ATOM, TRUE_ATOM};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TraceError {
    #[error("empty trace: a path needs at least one state")]
    EmptyTrace,
    #[error("line {line}: {message}")]
    MalformedRow { line: usize, message: String },
    #[error("duplicate proposition '{0}'")]
    DuplicateProposition(String),
    #[error("proposition name '{0}' is reserved")]
    ReservedProposition(String),
    #[error("unknown proposition '{0}'")]
    UnknownProposition(String),
    #[error("invalid Boolean sequence: {0}")]
    InvalidSequence(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TraceFormat {
    #[default]
    Csv,
    Jsonl,
}

impl FromStr for TraceFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(TraceFormat::Csv),
            "jsonl" => Ok(TraceFormat::Jsonl),
            other => Err(format!("unknown trace format '{other}' (expected csv or jsonl)")),
        }
    }
}

/// A sequence of Boolean values, one per path position.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BoolSeq(pub Vec<bool>);

impl BoolSeq {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn get(&self, i: usize) -> bool {
        self.0[i]
    }

    pub fn constant(value: bool, n: usize) -> Self {
        BoolSeq(vec![value; n])
    }

    pub fn complement(&self) -> Self {
        BoolSeq(self.0.iter().map(|b| !b).collect())
    }

    pub fn reversed(&self) -> Self {
        BoolSeq(self.0.iter().rev().copied().collect())
    }

    /// Compact form without separators, e.g. `0110`.
    pub fn to_bit_string(&self) -> String {
        self.0.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }

    /// Bitwise `self <= other`.
    pub fn le(&self, other: &BoolSeq) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| !a || *b)
    }
}

impl From<Vec<bool>> for BoolSeq {
    fn from(bits: Vec<bool>) -> Self {
        BoolSeq(bits)
    }
}

impl fmt::Display for BoolSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(if *b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Parses `0,1,1` or `011`.
impl FromStr for BoolSeq {
    type Err = TraceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(BoolSeq::default());
        }
        let cells: Vec<&str> = if s.contains(',') {
            s.split(',').map(str::trim).collect()
        } else {
            s.split("").filter(|c| !c.is_empty()).collect()
        };
        cells
            .into_iter()
            .map(|c| match c {
                "0" => Ok(false),
                "1" => Ok(true),
                other => Err(TraceError::InvalidSequence(format!("'{other}' is not 0 or 1"))),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(BoolSeq)
    }
}

/// A finite, nonempty sequence of states over a declared alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Path {
    alphabet: Vec<String>,
    index: HashMap<String, usize>,
    /// `rows[i][k]`: proposition `alphabet[k]` holds in state `i`.
    rows: Vec<Vec<bool>>,
}

impl Path {
    pub fn from_rows(alphabet: Vec<String>, rows: Vec<Vec<bool>>) -> Result<Self, TraceError> {
        if rows.is_empty() {
            return Err(TraceError::EmptyTrace);
        }
        let mut index = HashMap::with_capacity(alphabet.len());
        for (k, name) in alphabet.iter().enumerate() {
            if name == TRUE_ATOM || name == FALSE_ATOM {
                return Err(TraceError::ReservedProposition(name.clone()));
            }
            if index.insert(name.clone(), k).is_some() {
                return Err(TraceError::DuplicateProposition(name.clone()));
            }
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != alphabet.len() {
                return Err(TraceError::MalformedRow {
                    line: i + 2,
                    message: format!("expected {} cells, found {}", alphabet.len(), row.len()),
                });
            }
        }
        Ok(Path {
            alphabet,
            index,
            rows,
        })
    }

    /// Builds a path from the sets of propositions true in each state.
    pub fn from_states<S: AsRef<str>>(alphabet: &[&str], states: &[Vec<S>]) -> Result<Self, TraceError> {
        let alphabet: Vec<String> = alphabet.iter().map(|s| s.to_string()).collect();
        let rows = states
            .iter()
            .map(|state| {
                let mut row = vec![false; alphabet.len()];
                for name in state {
                    let k = alphabet
                        .iter()
                        .position(|a| a == name.as_ref())
                        .ok_or_else(|| TraceError::UnknownProposition(name.as_ref().to_owned()))?;
                    row[k] = true;
                }
                Ok(row)
            })
            .collect::<Result<Vec<_>, TraceError>>()?;
        Path::from_rows(alphabet, rows)
    }

    /// Builds a path from one Boolean column per proposition.
    pub fn from_columns(columns: &[(&str, &BoolSeq)]) -> Result<Self, TraceError> {
        let n = columns.first().map_or(0, |(_, s)| s.len());
        let alphabet = columns.iter().map(|(name, _)| name.to_string()).collect();
        let rows = (0..n)
            .map(|i| columns.iter().map(|(_, s)| s.0.get(i).copied().unwrap_or(false)).collect())
            .collect();
        Path::from_rows(alphabet, rows)
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    /// Always false; paths are nonempty by construction.
    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn holds(&self, name: &str, position: usize) -> Result<bool, TraceError> {
        match name {
            TRUE_ATOM => Ok(true),
            FALSE_ATOM => Ok(false),
            _ => {
                let k = self
                    .index
                    .get(name)
                    .ok_or_else(|| TraceError::UnknownProposition(name.to_owned()))?;
                Ok(self.rows[position][*k])
            }
        }
    }

    /// Names true in state `i`.
    pub fn state(&self, i: usize) -> Vec<&str> {
        self.alphabet
            .iter()
            .zip(&self.rows[i])
            .filter(|(_, &v)| v)
            .map(|(name, _)| name.as_str())
            .collect()
    }

    /// Value of a literal at every position.
    pub fn atom_sequence(&self, literal: &Literal) -> Result<BoolSeq, TraceError> {
        let bits: Vec<bool> = match literal.name.as_str() {
            TRUE_ATOM => vec![true; self.len()],
            FALSE_ATOM => vec![false; self.len()],
            name => {
                let k = *self
                    .index
                    .get(name)
                    .ok_or_else(|| TraceError::UnknownProposition(name.to_owned()))?;
                self.rows.iter().map(|row| row[k]).collect()
            }
        };
        Ok(BoolSeq(bits.into_iter().map(|b| b != literal.negated).collect()))
    }

    /// The sub-path `[start, end)`.
    pub fn slice(&self, start: usize, end: usize) -> Result<Path, TraceError> {
        Path::from_rows(self.alphabet.clone(), self.rows[start..end].to_vec())
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.alphabet.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<&str> = row.iter().map(|&b| if b { "1" } else { "0" }).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_jsonl(&self) -> String {
        let mut out = serde_json::json!({ "alphabet": self.alphabet }).to_string();
        out.push('\n');
        for i in 0..self.len() {
            out.push_str(&serde_json::Value::from(self.state(i)).to_string());
            out.push('\n');
        }
        out
    }
}

pub fn load_trace(bytes: &[u8], format: TraceFormat) -> Result<Path, TraceError> {
    match format {
        TraceFormat::Csv => load_csv(bytes),
        TraceFormat::Jsonl => load_jsonl(bytes),
    }
}

fn load_csv(bytes: &[u8]) -> Result<Path, TraceError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(bytes);
    let mut records = reader.records();
    let header = match records.next() {
        None => return Err(TraceError::EmptyTrace),
        Some(r) => r.map_err(|e| TraceError::MalformedRow {
            line: 1,
            message: e.to_string(),
        })?,
    };
    let alphabet: Vec<String> = header.iter().map(str::to_owned).collect();
    for name in &alphabet {
        if !is_identifier(name) {
            return Err(TraceError::MalformedRow {
                line: 1,
                message: format!("'{name}' is not a proposition identifier"),
            });
        }
    }
    let mut rows = Vec::new();
    for (i, record) in records.enumerate() {
        let line = i + 2;
        let record = record.map_err(|e| TraceError::MalformedRow {
            line,
            message: e.to_string(),
        })?;
        if record.len() != alphabet.len() {
            return Err(TraceError::MalformedRow {
                line,
                message: format!("expected {} cells, found {}", alphabet.len(), record.len()),
            });
        }
        let row = record
            .iter()
            .map(|cell| match cell {
                "0" => Ok(false),
                "1" => Ok(true),
                other => Err(TraceError::MalformedRow {
                    line,
                    message: format!("cell '{other}' is not 0 or 1"),
                }),
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    Path::from_rows(alphabet, rows)
}

fn load_jsonl(bytes: &[u8]) -> Result<Path, TraceError> {
    let text = std::str::from_utf8(bytes).map_err(|e| TraceError::MalformedRow {
        line: 1,
        message: e.to_string(),
    })?;
    let mut declared: Option<Vec<String>> = None;
    let mut states: Vec<(usize, Vec<String>)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let malformed = |message: String| TraceError::MalformedRow { line, message };
        let value: serde_json::Value =
            serde_json::from_str(raw).map_err(|e| malformed(e.to_string()))?;
        match value {
            serde_json::Value::Object(obj) if declared.is_none() && states.is_empty() => {
                let names = obj
                    .get("alphabet")
                    .and_then(|v| v.as_array())
                    .ok_or_else(|| malformed("expected {\"alphabet\": [...]}".into()))?;
                declared = Some(string_array(names).map_err(malformed)?);
            }
            serde_json::Value::Array(items) => {
                states.push((line, string_array(&items).map_err(malformed)?));
            }
            _ => return Err(malformed("expected a JSON array of proposition names".into())),
        }
    }
    if states.is_empty() {
        return Err(TraceError::EmptyTrace);
    }
    let alphabet = match declared {
        Some(names) => names,
        None => {
            let mut names: Vec<String> = Vec::new();
            for (_, state) in &states {
                for name in state {
                    if !names.contains(name) {
                        names.push(name.clone());
                    }
                }
            }
            names
        }
    };
    let index: HashMap<&str, usize> = alphabet.iter().enumerate().map(|(k, s)| (s.as_str(), k)).collect();
    let rows = states
        .iter()
        .map(|(_, state)| {
            let mut row = vec![false; alphabet.len()];
            for name in state {
                let k = index
                    .get(name.as_str())
                    .ok_or_else(|| TraceError::UnknownProposition(name.clone()))?;
                row[*k] = true;
            }
            Ok(row)
        })
        .collect::<Result<Vec<_>, TraceError>>()?;
    Path::from_rows(alphabet, rows)
}

fn string_array(items: &[serde_json::Value]) -> Result<Vec<String>, String> {
    items
        .iter()
        .map(|v| match v.as_str() {
            Some(s) if is_identifier(s) => Ok(s.to_owned()),
            Some(s) => Err(format!("'{s}' is not a proposition identifier")),
            None => Err(format!("expected a string, found {v}")),
        })
        .collect()
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
