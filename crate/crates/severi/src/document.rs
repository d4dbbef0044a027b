//! The output document every command produces, with its three renderings.
//!
//! A document is a command name, an echo of the parameters, a list of
//! uniform rows, optional warnings, and (for the verification command) a
//! list of named verdicts. All numeric values are carried as canonical
//! decimal or `p/q` strings — never floating point — so the JSON form
//! round-trips exactly and arbitrarily large values survive unharmed.

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

/// One table cell. Numbers travel as strings; `Flag` carries the boolean
/// identity-check columns; `Absent` marks entries outside a formula's range
/// (JSON `null`, rendered as `*` in text and CSV, as in the degree-1 and -2
/// rows of the genus table).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Cell {
    Flag(bool),
    Text(String),
    Absent,
}

impl Cell {
    pub fn text(value: impl Into<String>) -> Self {
        Cell::Text(value.into())
    }

    fn render(&self) -> String {
        match self {
            Cell::Flag(true) => "true".to_owned(),
            Cell::Flag(false) => "false".to_owned(),
            Cell::Text(s) => s.clone(),
            Cell::Absent => "*".to_owned(),
        }
    }
}

/// Named outcome of one verification check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

pub type Row = IndexMap<String, Cell>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputDocument {
    pub command: String,
    pub parameters: IndexMap<String, String>,
    pub rows: Vec<Row>,
    pub warnings: Vec<String>,
    pub verdicts: Vec<Verdict>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

impl OutputDocument {
    pub fn new(command: &str, parameters: IndexMap<String, String>) -> Self {
        OutputDocument {
            command: command.to_owned(),
            parameters,
            rows: Vec::new(),
            warnings: Vec::new(),
            verdicts: Vec::new(),
        }
    }

    pub fn all_passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.passed)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn from_json(input: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(input)
    }

    /// Comma-separated rows under a header; warnings become leading `#`
    /// lines so the value grid stays machine-readable.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for w in &self.warnings {
            let _ = writeln!(out, "# warning: {w}");
        }
        if let Some(first) = self.rows.first() {
            let _ = writeln!(
                out,
                "{}",
                first.keys().cloned().collect::<Vec<_>>().join(",")
            );
            for row in &self.rows {
                let cells: Vec<String> = row.values().map(Cell::render).collect();
                let _ = writeln!(out, "{}", cells.join(","));
            }
        }
        for v in &self.verdicts {
            let _ = writeln!(
                out,
                "# {} {}: {}",
                if v.passed { "pass" } else { "FAIL" },
                v.name,
                v.detail
            );
        }
        out
    }

    /// Aligned table plus warning and verdict lines.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for w in &self.warnings {
            let _ = writeln!(out, "warning: {w}");
        }
        if let Some(first) = self.rows.first() {
            if !self.warnings.is_empty() {
                out.push('\n');
            }
            let headers: Vec<String> = first.keys().cloned().collect();
            let grid: Vec<Vec<String>> = self
                .rows
                .iter()
                .map(|row| row.values().map(Cell::render).collect())
                .collect();
            let mut widths: Vec<usize> = headers.iter().map(String::len).collect();
            for row in &grid {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.len());
                }
            }
            let write_line = |out: &mut String, cells: &[String]| {
                let line: Vec<String> = cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:<w$}"))
                    .collect();
                let _ = writeln!(out, "{}", line.join("  ").trim_end());
            };
            write_line(&mut out, &headers);
            for row in &grid {
                write_line(&mut out, row);
            }
        }
        if !self.verdicts.is_empty() {
            if !self.rows.is_empty() || !self.warnings.is_empty() {
                out.push('\n');
            }
            for v in &self.verdicts {
                let _ = writeln!(
                    out,
                    "{} {}: {}",
                    if v.passed { "pass" } else { "FAIL" },
                    v.name,
                    v.detail
                );
            }
            let failed = self.verdicts.iter().filter(|v| !v.passed).count();
            let _ = if failed == 0 {
                writeln!(out, "all {} checks passed", self.verdicts.len())
            } else {
                writeln!(out, "{failed} of {} checks FAILED", self.verdicts.len())
            };
        }
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
        }
    }
}
