//! JSON-lines and CSV report rendering.
//!
//! Reals are rounded to 12 digits after the decimal point with trailing zeros
//! dropped, in both formats, so a CSV cell and the matching JSON number parse
//! to the same `f64`. LF line endings, UTF-8.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::audit::{AuditReport, BoundRecord};
use crate::error::GraphError;
use crate::invariants::IndexVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    JsonLines,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, GraphError> {
        match s {
            "json_lines" | "json-lines" | "jsonl" => Ok(Self::JsonLines),
            "csv" => Ok(Self::Csv),
            other => Err(GraphError::InvalidParameter(format!(
                "unknown output format {other:?}"
            ))),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::JsonLines => "json_lines",
            Self::Csv => "csv",
        })
    }
}

/// Fixed 12-decimal rendering with trailing zeros removed.
pub fn fmt_real(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let s = format!("{x:.12}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

pub fn fmt_opt_real(x: Option<f64>) -> String {
    x.map(fmt_real).unwrap_or_default()
}

fn fmt_opt_bool(x: Option<bool>) -> String {
    x.map(|b| b.to_string()).unwrap_or_default()
}

/// The value [`fmt_real`] renders, as a number.
pub fn rounded(x: f64) -> f64 {
    if x.is_finite() {
        fmt_real(x).parse().expect("fmt_real output parses")
    } else {
        x
    }
}

pub fn round12<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    if x.is_finite() {
        s.serialize_f64(rounded(*x))
    } else {
        s.serialize_none()
    }
}

pub fn round12_opt<S: Serializer>(x: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(v) => round12(v, s),
        None => s.serialize_none(),
    }
}

/// A row type that can be written by [`write_reports`].
pub trait ReportRecord: Serialize {
    fn csv_header() -> Vec<&'static str>;

    /// One or more CSV rows; every row has `csv_header().len()` cells.
    fn csv_rows(&self) -> Vec<Vec<String>>;
}

/// Renders `rows` as JSON lines (one object per line) or as CSV with a fixed
/// header row. An empty JSON-lines report is the empty string; an empty CSV
/// report is the header alone.
pub fn write_reports<R: ReportRecord>(rows: &[R], format: OutputFormat) -> String {
    match format {
        OutputFormat::JsonLines => {
            let mut out = String::new();
            for r in rows {
                out.push_str(&serde_json::to_string(r).expect("report rows serialize"));
                out.push('\n');
            }
            out
        }
        OutputFormat::Csv => {
            let mut w = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(Vec::new());
            w.write_record(R::csv_header()).expect("in-memory write");
            for r in rows {
                for cells in r.csv_rows() {
                    w.write_record(&cells).expect("in-memory write");
                }
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 cells")
        }
    }
}

/// `compute` output: one graph and its index vector.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IndexRow {
    pub graph: String,
    pub n: usize,
    pub m: usize,
    #[serde(flatten)]
    pub indices: IndexVector,
}

pub const INDEX_COLUMNS: [&str; 8] = [
    "so",
    "so_coindex",
    "m1",
    "m1_coindex",
    "m2",
    "m2_coindex",
    "f",
    "f_coindex",
];

pub fn index_cells(v: &IndexVector) -> Vec<String> {
    [
        v.so,
        v.so_coindex,
        v.m1,
        v.m1_coindex,
        v.m2,
        v.m2_coindex,
        v.f,
        v.f_coindex,
    ]
    .into_iter()
    .map(fmt_real)
    .collect()
}

impl ReportRecord for IndexRow {
    fn csv_header() -> Vec<&'static str> {
        let mut h = vec!["graph", "n", "m"];
        h.extend(INDEX_COLUMNS);
        h
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        let mut row = vec![self.graph.clone(), self.n.to_string(), self.m.to_string()];
        row.extend(index_cells(&self.indices));
        vec![row]
    }
}

pub const RECORD_COLUMNS: [&str; 12] = [
    "theorem",
    "applicable",
    "not_applicable_reason",
    "lower",
    "value",
    "upper",
    "holds",
    "equality_lower",
    "equality_upper",
    "is_regular_input",
    "gap_lower",
    "gap_upper",
];

/// CSV cells for a bound record, in [`RECORD_COLUMNS`] order.
pub fn record_cells(r: &BoundRecord) -> Vec<String> {
    vec![
        r.theorem.to_string(),
        r.applicable.to_string(),
        r.not_applicable_reason.clone(),
        fmt_opt_real(r.lower),
        fmt_real(r.value),
        fmt_opt_real(r.upper),
        fmt_opt_bool(r.holds),
        fmt_opt_bool(r.equality_lower),
        fmt_opt_bool(r.equality_upper),
        r.is_regular_input.to_string(),
        fmt_opt_real(r.gap_lower),
        fmt_opt_real(r.gap_upper),
    ]
}

/// In CSV an audit report becomes one row per bound record.
impl ReportRecord for AuditReport {
    fn csv_header() -> Vec<&'static str> {
        let mut h = vec!["graph_id"];
        h.extend(RECORD_COLUMNS);
        h
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.records
            .iter()
            .map(|r| {
                let mut row = vec![self.graph_id.clone()];
                row.extend(record_cells(r));
                row
            })
            .collect()
    }
}
