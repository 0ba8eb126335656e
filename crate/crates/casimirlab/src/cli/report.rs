//! Command output: tables of exact values and verification reports, rendered as
//! JSON (canonical), CSV or Markdown.

use crate::exact::{to_f64, to_short_string, Rational};
use serde::Serialize;
use serde_json::{json, Map, Value as Json};
use std::collections::BTreeMap;
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Md,
}

/// One cell of a result table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cell {
    Text(String),
    Rat(Rational),
    Int(i64),
}

impl Cell {
    fn exact(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Rat(r) => to_short_string(r),
            Cell::Int(i) => i.to_string(),
        }
    }

    fn json(&self) -> Json {
        match self {
            Cell::Int(i) => json!(i),
            other => json!(other.exact()),
        }
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}
impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}
impl From<Rational> for Cell {
    fn from(r: Rational) -> Self {
        Cell::Rat(r)
    }
}
impl From<usize> for Cell {
    fn from(i: usize) -> Self {
        Cell::Int(i as i64)
    }
}
impl From<u64> for Cell {
    fn from(i: u64) -> Self {
        Cell::Int(i as i64)
    }
}
impl From<u32> for Cell {
    fn from(i: u32) -> Self {
        Cell::Int(i as i64)
    }
}

/// Rows of named columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Self {
        Table { columns: columns.to_vec(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    /// Column names, with a decimal companion after each rational column when `approx`.
    fn header(&self, approx: bool) -> Vec<String> {
        let mut out = Vec::new();
        for (i, c) in self.columns.iter().enumerate() {
            out.push(c.to_string());
            if approx && self.is_rational_column(i) {
                out.push(format!("{c}_approx"));
            }
        }
        out
    }

    fn is_rational_column(&self, i: usize) -> bool {
        self.rows.iter().any(|r| matches!(r[i], Cell::Rat(_)))
    }

    fn flat_row(&self, row: &[Cell], approx: bool) -> Vec<String> {
        let mut out = Vec::new();
        for (i, c) in row.iter().enumerate() {
            out.push(c.exact());
            if approx && self.is_rational_column(i) {
                out.push(match c {
                    Cell::Rat(r) => format!("{}", to_f64(r)),
                    _ => String::new(),
                });
            }
        }
        out
    }

    pub fn to_json(&self, approx: bool) -> Json {
        let rows: Vec<Json> = self
            .rows
            .iter()
            .map(|row| {
                let mut m = Map::new();
                for (c, cell) in self.columns.iter().zip(row) {
                    m.insert(c.to_string(), cell.json());
                    if approx {
                        if let Cell::Rat(r) = cell {
                            m.insert(format!("{c}_approx"), json!(to_f64(r)));
                        }
                    }
                }
                Json::Object(m)
            })
            .collect();
        Json::Array(rows)
    }

    pub fn render(&self, format: Format, approx: bool) -> String {
        let header = self.header(approx);
        let rows: Vec<Vec<String>> = self.rows.iter().map(|r| self.flat_row(r, approx)).collect();
        match format {
            Format::Json => pretty(&self.to_json(approx)),
            Format::Csv => csv_text(&header, &rows),
            Format::Md => markdown(&header, &rows),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

pub type Params = BTreeMap<String, String>;

/// Builds a parameter map from name/value pairs.
pub fn params<V: ToString>(pairs: &[(&str, V)]) -> Params {
    pairs.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Entry {
    pub check_id: String,
    pub algebra: String,
    pub parameters: Params,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    pub elapsed_ms: u64,
}

/// Outcome of one comparison: both sides rendered, and whether they agree.
pub struct Comparison {
    pub lhs: String,
    pub rhs: String,
    pub ok: bool,
}

impl Comparison {
    pub fn eq(lhs: &Rational, rhs: &Rational) -> Self {
        Comparison { lhs: to_short_string(lhs), rhs: to_short_string(rhs), ok: lhs == rhs }
    }

    pub fn eq_display<T: PartialEq + std::fmt::Debug>(lhs: &T, rhs: &T) -> Self {
        Comparison { lhs: format!("{lhs:?}"), rhs: format!("{rhs:?}"), ok: lhs == rhs }
    }

    pub fn holds(what: impl Into<String>, ok: bool) -> Self {
        Comparison { lhs: what.into(), rhs: if ok { "true".into() } else { "false".into() }, ok }
    }
}

/// Runs checks and records them; timings are recorded only on request so that
/// identical invocations produce identical bytes.
#[derive(Debug, Clone, Copy)]
pub struct Recorder {
    pub timings: bool,
}

impl Recorder {
    pub fn check<F>(&self, check_id: &str, algebra: impl ToString, parameters: Params, f: F) -> Entry
    where
        F: FnOnce() -> crate::error::Result<Comparison>,
    {
        let start = Instant::now();
        let result = f();
        let elapsed_ms = if self.timings { start.elapsed().as_millis() as u64 } else { 0 };
        let (status, lhs, rhs) = match result {
            Ok(c) => (if c.ok { Status::Pass } else { Status::Fail }, c.lhs, c.rhs),
            Err(e) => (Status::Fail, format!("error: {e}"), String::new()),
        };
        Entry { check_id: check_id.into(), algebra: algebra.to_string(), parameters, status, lhs, rhs, elapsed_ms }
    }

    pub fn skip(&self, check_id: &str, algebra: impl ToString, parameters: Params, reason: impl Into<String>) -> Entry {
        Entry {
            check_id: check_id.into(),
            algebra: algebra.to_string(),
            parameters,
            status: Status::Skipped,
            lhs: reason.into(),
            rhs: String::new(),
            elapsed_ms: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub summary: Summary,
    pub entries: Vec<Entry>,
}

impl VerifyReport {
    pub fn new(suite: impl Into<String>, entries: Vec<Entry>) -> Self {
        let count = |s| entries.iter().filter(|e| e.status == s).count();
        let summary = Summary { pass: count(Status::Pass), fail: count(Status::Fail), skipped: count(Status::Skipped) };
        VerifyReport { suite: suite.into(), summary, entries }
    }

    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn render(&self, format: Format) -> String {
        let header: Vec<String> =
            ["check_id", "algebra", "parameters", "status", "lhs", "rhs", "elapsed_ms"].iter().map(|s| s.to_string()).collect();
        let rows: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|e| {
                let p: Vec<String> = e.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
                vec![
                    e.check_id.clone(),
                    e.algebra.clone(),
                    p.join(";"),
                    e.status.as_str().to_string(),
                    e.lhs.clone(),
                    e.rhs.clone(),
                    e.elapsed_ms.to_string(),
                ]
            })
            .collect();
        match format {
            Format::Json => pretty(&serde_json::to_value(self).expect("report serializes")),
            Format::Csv => csv_text(&header, &rows),
            Format::Md => {
                let s = &self.summary;
                format!(
                    "**{}**: {} pass, {} fail, {} skipped\n\n{}",
                    self.suite,
                    s.pass,
                    s.fail,
                    s.skipped,
                    markdown(&header, &rows)
                )
            }
        }
    }
}

fn pretty(v: &Json) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON value serializes");
    s.push('\n');
    s
}

fn csv_text(header: &[String], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("UTF-8 input")
}

fn markdown(header: &[String], rows: &[Vec<String>]) -> String {
    let esc = |s: &str| s.replace('|', "\\|");
    let line = |cells: &[String]| format!("| {} |\n", cells.iter().map(|c| esc(c)).collect::<Vec<_>>().join(" | "));
    let mut out = line(header);
    out.push_str(&format!("|{}\n", "---|".repeat(header.len())));
    for r in rows {
        out.push_str(&line(r));
    }
    out
}
