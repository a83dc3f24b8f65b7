//! Code interchange formats.
//!
//! JSON carries the full metadata; the plain-text format is one Pauli string
//! per line under a `n=<n> K=<K>` header and carries only the stabilizer.
//! Both round-trip byte-identically through emit -> parse -> emit.

use crate::error::{Error, Result};
use crate::stab::StabilizerCode;
use serde::{Deserialize, Serialize};

/// Serializable view of a stabilizer code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeDocument {
    pub n: usize,
    pub k: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claimed_distance: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verified_distance: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pure: Option<bool>,
    pub stabilizers: Vec<String>,
}

impl CodeDocument {
    pub fn from_code(code: &StabilizerCode) -> CodeDocument {
        CodeDocument {
            n: code.qubits(),
            k: code.logical_dimension(),
            claimed_distance: code.claimed_distance(),
            verified_distance: code.verified_distance(),
            pure: code.is_pure(),
            stabilizers: code.pauli_strings(),
        }
    }

    /// Rebuild the full code; validates lengths, ranks, and commutativity.
    pub fn to_code(&self) -> Result<StabilizerCode> {
        let code = StabilizerCode::from_pauli_strings(&self.stabilizers)?;
        if code.qubits() != self.n {
            return Err(Error::BadCodeData(format!(
                "header says n = {}, stabilizers have {} qubits",
                self.n,
                code.qubits()
            )));
        }
        if code.logical_dimension() != self.k {
            return Err(Error::BadCodeData(format!(
                "header says K = {}, stabilizers leave K = {}",
                self.k,
                code.logical_dimension()
            )));
        }
        Ok(code)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<CodeDocument> {
        serde_json::from_str(text).map_err(|e| Error::BadCodeData(format!("invalid JSON: {e}")))
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("n={} K={}\n", self.n, self.k);
        for row in &self.stabilizers {
            s.push_str(row);
            s.push('\n');
        }
        s
    }

    pub fn from_text(text: &str) -> Result<CodeDocument> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::BadCodeData("empty code file".into()))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        let parse_kv = |field: &str, key: &str| -> Result<usize> {
            field
                .strip_prefix(key)
                .and_then(|v| v.parse().ok())
                .ok_or_else(|| Error::BadCodeData(format!("bad header field {field:?}")))
        };
        if fields.len() != 2 {
            return Err(Error::BadCodeData(format!("bad header line {header:?}")));
        }
        let n = parse_kv(fields[0], "n=")?;
        let k = parse_kv(fields[1], "K=")?;
        let stabilizers: Vec<String> = lines
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(String::from)
            .collect();
        Ok(CodeDocument {
            n,
            k,
            claimed_distance: None,
            verified_distance: None,
            pure: None,
            stabilizers,
        })
    }

    /// Detect the format from the leading character.
    pub fn from_str_any(text: &str) -> Result<CodeDocument> {
        if text.trim_start().starts_with('{') {
            CodeDocument::from_json(text)
        } else {
            CodeDocument::from_text(text)
        }
    }
}
