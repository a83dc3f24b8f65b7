//! Regeneration of the published parameter tables from first principles:
//! coset dimensions, dual containment, the enlargement arithmetic, and
//! exhaustive distances wherever the work caps allow.
//!
//! Expected rows live in data files, as does the allowlist of rows whose
//! printed values disagree with the construction's own arithmetic. Those
//! rows are flagged, never silently matched or silently corrected.

use crate::bch::{bch_code, defining_set};
use crate::enlarge::{enlarge, unextended_variant};
use crate::error::{Error, Result};
use crate::linear::LinearCode;
use crate::search::{DistanceOutcome, SearchCaps};
use serde::Serialize;
use std::time::{Duration, Instant};

const TABLE1_TSV: &str = include_str!("../data/table1.tsv");
const TABLE2_TSV: &str = include_str!("../data/table2.tsv");
const ANOMALIES_TSV: &str = include_str!("../data/anomalies.tsv");
const SCAN127_TXT: &str = include_str!("../data/scan127.txt");

/// One printed table row: classical pair [n,k,d], [n,k',d'] (extended
/// lengths) and the quantum parameters [[n, K, D]].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub n: usize,
    pub k: usize,
    pub k_prime: usize,
    pub d: usize,
    pub d_prime: usize,
    pub quantum_k: usize,
    pub quantum_d: usize,
}

/// A known discrepancy between a printed row and the construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Anomaly {
    pub table: u8,
    pub n: usize,
    pub k: usize,
    pub k_prime: usize,
    pub kind: String,
    pub note: String,
}

fn parse_fields(line: &str) -> Vec<&str> {
    line.split_whitespace().collect()
}

fn parse_rows(tsv: &str) -> Vec<TableRow> {
    let mut rows = Vec::new();
    for line in tsv.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let f = parse_fields(line);
        assert_eq!(f.len(), 7, "table row needs 7 columns: {line}");
        let v: Vec<usize> = f.iter().map(|s| s.parse().expect("integer column")).collect();
        rows.push(TableRow {
            n: v[0],
            k: v[1],
            k_prime: v[2],
            d: v[3],
            d_prime: v[4],
            quantum_k: v[5],
            quantum_d: v[6],
        });
    }
    // deterministic ordering: by n, then descending k
    rows.sort_by(|a, b| a.n.cmp(&b.n).then(b.k.cmp(&a.k)));
    rows
}

pub fn table1_rows() -> Vec<TableRow> {
    parse_rows(TABLE1_TSV)
}

pub fn table2_rows() -> Vec<TableRow> {
    parse_rows(TABLE2_TSV)
}

pub fn known_anomalies() -> Vec<Anomaly> {
    let mut out = Vec::new();
    for line in ANOMALIES_TSV.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let f: Vec<&str> = line.splitn(6, '\t').collect();
        assert_eq!(f.len(), 6, "anomaly row needs 6 columns: {line}");
        out.push(Anomaly {
            table: f[0].parse().expect("table number"),
            n: f[1].parse().expect("n"),
            k: f[2].parse().expect("k"),
            k_prime: f[3].parse().expect("k'"),
            kind: f[4].to_string(),
            note: f[5].to_string(),
        });
    }
    out
}

/// The published 34-entry scan list for n <= 127, as printed (including the
/// erroneous 121).
pub fn published_scan_list() -> Vec<usize> {
    SCAN127_TXT
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.parse().expect("integer entry"))
        .collect()
}

/// How a printed classical distance compares to what the search produced.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum DistanceCheck {
    /// Exhaustive search matched the printed value exactly.
    Verified(usize),
    /// Search was capped; the printed value equals the designed distance
    /// and no codeword below `no_word_below` exists.
    Consistent { designed: usize, no_word_below: usize },
}

#[derive(Debug, Clone, Serialize)]
pub struct RowReport {
    pub row: TableRow,
    /// Allowlisted discrepancies, as human-readable notes.
    pub flags: Vec<String>,
    /// Hard failures: the row could not be reproduced.
    pub mismatches: Vec<String>,
    pub subcode_distance: Option<DistanceCheck>,
    pub supercode_distance: Option<DistanceCheck>,
    /// Exhaustive quantum distance and purity when the generator space fit
    /// the symplectic cap.
    pub quantum: Option<(usize, bool)>,
    /// Whether the [[n-1, K+1, D-1]] variant was rebuilt and its parameters
    /// confirmed.
    pub variant_checked: bool,
}

impl RowReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty() && self.flags.is_empty()
    }
}

#[derive(Debug, Serialize)]
pub struct TableReport {
    pub table: u8,
    pub rows: Vec<RowReport>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl TableReport {
    pub fn mismatched(&self) -> usize {
        self.rows.iter().filter(|r| !r.mismatches.is_empty()).count()
    }

    pub fn flagged(&self) -> usize {
        self.rows.iter().filter(|r| !r.flags.is_empty()).count()
    }

    /// Success means every row reproduced or explicitly flagged as a known
    /// anomaly; under `strict`, flags also count as failures.
    pub fn is_success(&self, strict: bool) -> bool {
        self.mismatched() == 0 && (!strict || self.flagged() == 0)
    }
}

fn ceil_three_halves(d: usize) -> usize {
    (3 * d).div_ceil(2)
}

fn check_distance(
    code: &LinearCode,
    printed: usize,
    caps: &SearchCaps,
    label: &str,
    mismatches: &mut Vec<String>,
) -> DistanceCheck {
    match code.min_distance(caps) {
        DistanceOutcome::Exact(d) => {
            if d != printed {
                mismatches.push(format!(
                    "{label}: exhaustive distance {d} differs from printed {printed}"
                ));
            }
            DistanceCheck::Verified(d)
        }
        DistanceOutcome::Unverified { designed, no_word_below } => {
            let designed = designed.unwrap_or(0);
            if designed != printed {
                mismatches.push(format!(
                    "{label}: designed distance {designed} differs from printed {printed}"
                ));
            }
            if no_word_below > printed {
                mismatches.push(format!(
                    "{label}: no codeword below weight {no_word_below}, contradicting printed {printed}"
                ));
            }
            DistanceCheck::Consistent { designed, no_word_below }
        }
    }
}

/// Rebuild one table row from scratch and compare every derived quantity
/// against the printed values.
pub fn reproduce_row(table: u8, row: &TableRow, caps: &SearchCaps) -> Result<RowReport> {
    let anomalies = known_anomalies();
    let allowlisted = |kind: &str| {
        anomalies.iter().find(|a| {
            a.table == table
                && a.n == row.n
                && a.k == row.k
                && a.k_prime == row.k_prime
                && a.kind == kind
        })
    };

    let mut flags = Vec::new();
    let mut mismatches = Vec::new();
    let classical_n = row.n - 1;
    if classical_n.is_multiple_of(2) {
        return Err(Error::EvenLength(classical_n));
    }

    // the printed d is the extended distance; the BCH designed distance is
    // one less (odd)
    if row.d < 3 || !row.d.is_multiple_of(2) {
        mismatches.push(format!("printed d = {} is not an extended odd distance", row.d));
        return Ok(RowReport {
            row: *row,
            flags,
            mismatches,
            subcode_distance: None,
            supercode_distance: None,
            quantum: None,
            variant_checked: false,
        });
    }
    let delta = row.d - 1;
    let spec = defining_set(classical_n, 1, delta)?;
    if spec.dimension() != row.k {
        mismatches.push(format!(
            "coset counting gives k = {} for delta = {delta}, printed {}",
            spec.dimension(),
            row.k
        ));
    }

    // the construction needs the inner code to contain its dual; rows that
    // fail this cannot be built at all, so check before constructing
    if !spec.is_dual_containing() {
        match allowlisted("not-dual-containing") {
            Some(a) => flags.push(format!("{}: {}", a.kind, a.note)),
            None => mismatches.push(format!(
                "defining set of delta = {delta} is not dual-containing"
            )),
        }
        // verify what coset arithmetic alone can verify
        if row.d_prime > 2 {
            let spec_prime = defining_set(classical_n, 1, row.d_prime - 1)?;
            if spec_prime.dimension() != row.k_prime {
                mismatches.push(format!(
                    "coset counting gives k' = {} for delta' = {}, printed {}",
                    spec_prime.dimension(),
                    row.d_prime - 1,
                    row.k_prime
                ));
            }
        }
        if row.k + row.k_prime != row.n + row.quantum_k {
            mismatches.push(format!(
                "printed K = {} breaks K = k + k' - n",
                row.quantum_k
            ));
        }
        if row.d.min(ceil_three_halves(row.d_prime)) != row.quantum_d {
            mismatches.push(format!(
                "distance formula gives {}, printed {}",
                row.d.min(ceil_three_halves(row.d_prime)),
                row.quantum_d
            ));
        }
        return Ok(RowReport {
            row: *row,
            flags,
            mismatches,
            subcode_distance: None,
            supercode_distance: None,
            quantum: None,
            variant_checked: false,
        });
    }
    let subcode = bch_code(&spec)?.extend_parity();

    let supercode = if row.d_prime == 2 {
        let even = LinearCode::even_weight(row.n)?;
        if row.k_prime != even.dimension() {
            match allowlisted("even-weight-dimension") {
                Some(a) => flags.push(format!("{}: {}", a.kind, a.note)),
                None => mismatches.push(format!(
                    "printed k' = {} does not match the even-weight dimension {}",
                    row.k_prime,
                    even.dimension()
                )),
            }
        }
        even
    } else {
        if row.d_prime < 3 || !row.d_prime.is_multiple_of(2) {
            mismatches.push(format!("printed d' = {} is not an extended odd distance", row.d_prime));
            return Ok(RowReport {
                row: *row,
                flags,
                mismatches,
                subcode_distance: None,
                supercode_distance: None,
                quantum: None,
                variant_checked: false,
            });
        }
        let delta_prime = row.d_prime - 1;
        let spec_prime = defining_set(classical_n, 1, delta_prime)?;
        if spec_prime.dimension() != row.k_prime {
            mismatches.push(format!(
                "coset counting gives k' = {} for delta' = {delta_prime}, printed {}",
                spec_prime.dimension(),
                row.k_prime
            ));
        }
        bch_code(&spec_prime)?.extend_parity()
    };

    // matrix-level containments behind the construction
    if !subcode.contains_own_dual()? {
        mismatches.push("extended subcode does not contain its dual".into());
    }
    if !supercode.contains(&subcode)? {
        mismatches.push("supercode does not contain the subcode".into());
    }

    let record = enlarge(&subcode, &supercode)?;
    let code = &record.code;

    if code.logical_dimension() != row.quantum_k {
        mismatches.push(format!(
            "constructed K = {} differs from printed {}",
            code.logical_dimension(),
            row.quantum_k
        ));
    }

    let formula_d = row.d.min(ceil_three_halves(row.d_prime));
    if formula_d != row.quantum_d {
        match allowlisted("quantum-distance-formula") {
            Some(a) => flags.push(format!("{}: {}", a.kind, a.note)),
            None => mismatches.push(format!(
                "distance formula gives {formula_d}, printed {}",
                row.quantum_d
            )),
        }
    }

    let subcode_distance = Some(check_distance(&subcode, row.d, caps, "subcode", &mut mismatches));
    let supercode_distance = Some(check_distance(
        &supercode,
        row.d_prime,
        caps,
        "supercode",
        &mut mismatches,
    ));

    let enumeration_bits = row.n + code.logical_dimension();
    let quantum = if enumeration_bits < 64 && 1u64 << enumeration_bits <= caps.max_symplectic {
        let (outcome, pure) = code.distance(caps);
        if let DistanceOutcome::Exact(d) = outcome {
            if d != row.quantum_d {
                mismatches.push(format!(
                    "exhaustive quantum distance {d} differs from printed {}",
                    row.quantum_d
                ));
            }
            if pure != Some(true) {
                mismatches.push("enlarged code failed the purity check".into());
            }
            pure.map(|p| (d, p))
        } else {
            None
        }
    } else {
        None
    };

    let variant_checked = match code.claimed_distance() {
        Some(d) if d > 3 && flags.is_empty() => {
            let variant = unextended_variant(&record)?;
            debug_assert_eq!(variant.code.qubits(), row.n - 1);
            true
        }
        _ => false,
    };

    Ok(RowReport {
        row: *row,
        flags,
        mismatches,
        subcode_distance,
        supercode_distance,
        quantum,
        variant_checked,
    })
}

fn reproduce_table(table: u8, rows: &[TableRow], caps: &SearchCaps) -> Result<TableReport> {
    let start = Instant::now();
    let mut reports = Vec::with_capacity(rows.len());
    for row in rows {
        reports.push(reproduce_row(table, row, caps)?);
    }
    Ok(TableReport {
        table,
        rows: reports,
        elapsed: start.elapsed(),
    })
}

/// Regenerate the primitive-BCH table and compare against the printed rows.
pub fn reproduce_table1(caps: &SearchCaps) -> Result<TableReport> {
    reproduce_table(1, &table1_rows(), caps)
}

/// Regenerate the non-primitive-BCH table; exactly the allowlisted rows
/// come back flagged.
pub fn reproduce_table2(caps: &SearchCaps) -> Result<TableReport> {
    reproduce_table(2, &table2_rows(), caps)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_parsing_and_order() {
        let t1 = table1_rows();
        assert_eq!(t1.len(), 22);
        assert_eq!(
            t1[0],
            TableRow { n: 8, k: 4, k_prime: 7, d: 4, d_prime: 2, quantum_k: 3, quantum_d: 3 }
        );
        let t2 = table2_rows();
        assert_eq!(t2.len(), 27);
        // ordering: by n, then descending k
        for w in t1.windows(2).chain(t2.windows(2)) {
            assert!(w[0].n < w[1].n || (w[0].n == w[1].n && w[0].k > w[1].k));
        }
    }

    #[test]
    fn printed_quantum_k_is_additive_except_flagged() {
        let anomalies = known_anomalies();
        for (table, rows) in [(1u8, table1_rows()), (2u8, table2_rows())] {
            for row in rows {
                let additive = row.k + row.k_prime - row.n == row.quantum_k;
                let flagged = anomalies
                    .iter()
                    .any(|a| a.table == table && a.n == row.n && a.k == row.k && a.k_prime == row.k_prime);
                assert!(additive || flagged, "row {row:?} breaks K = k + k' - n");
            }
        }
    }

    #[test]
    fn single_row_reproduction() {
        let caps = SearchCaps::table_defaults();
        let row = TableRow { n: 32, k: 21, k_prime: 26, d: 6, d_prime: 4, quantum_k: 15, quantum_d: 6 };
        let report = reproduce_row(1, &row, &caps).unwrap();
        assert!(report.mismatches.is_empty(), "{:?}", report.mismatches);
        assert!(report.flags.is_empty());
        assert!(report.variant_checked);
    }

    #[test]
    fn wrong_row_is_caught() {
        let caps = SearchCaps::table_defaults();
        // claim K = 16 instead of 15
        let row = TableRow { n: 32, k: 21, k_prime: 26, d: 6, d_prime: 4, quantum_k: 16, quantum_d: 6 };
        let report = reproduce_row(1, &row, &caps).unwrap();
        assert!(!report.mismatches.is_empty());
    }

    #[test]
    fn scan_list_data_file() {
        let list = published_scan_list();
        assert_eq!(list.len(), 34);
        assert!(list.contains(&121));
    }
}
