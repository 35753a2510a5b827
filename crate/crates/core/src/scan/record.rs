use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::error::Result;

/// One comparison in a scan.
///
/// Sweep checks (over `t` or `m`) emit one summary record per case with
/// `expected` = number of values visited and `actual` = number that agreed,
/// plus one record per disagreeing value with `t` or `m` set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub p: u64,
    pub check: String,
    pub case: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
    pub expected: i64,
    pub actual: i64,
    pub pass: bool,
}

impl CheckRecord {
    pub fn new(p: u64, check: &str, case: impl Into<String>, expected: i64, actual: i64) -> Self {
        CheckRecord {
            p,
            check: check.to_string(),
            case: case.into(),
            g: None,
            t: None,
            m: None,
            expected,
            actual,
            pass: expected == actual,
        }
    }

    pub fn with_g(mut self, g: u64) -> Self {
        self.g = Some(g);
        self
    }

    pub fn with_t(mut self, t: i64) -> Self {
        self.t = Some(t);
        self
    }

    pub fn with_m(mut self, m: u64) -> Self {
        self.m = Some(m);
        self
    }

    pub fn discrepancy(&self) -> Option<DiscrepancyRecord> {
        (!self.pass).then(|| DiscrepancyRecord {
            p: self.p,
            check_name: self.check.clone(),
            case_label: self.case.clone(),
            expected: self.expected,
            actual: self.actual,
            g: self.g,
            t: self.t,
            m: self.m,
        })
    }
}

/// A failing [`CheckRecord`], reshaped for reporting.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscrepancyRecord {
    pub p: u64,
    pub check_name: String,
    pub case_label: String,
    pub expected: i64,
    pub actual: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
}

pub fn write_jsonl<W: Write>(mut w: W, records: &[CheckRecord]) -> Result<()> {
    for r in records {
        serde_json::to_writer(&mut w, r)?;
        w.write_all(b"\n")?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_jsonl<R: BufRead>(r: R) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    for line in r.lines() {
        let line = line?;
        if !line.trim().is_empty() {
            out.push(serde_json::from_str(&line)?);
        }
    }
    Ok(out)
}

// CSV needs a fixed column set, so optional fields stay as empty cells.
#[derive(Serialize, Deserialize)]
struct CsvRow {
    p: u64,
    check: String,
    case: String,
    g: Option<u64>,
    t: Option<i64>,
    m: Option<u64>,
    expected: i64,
    actual: i64,
    pass: bool,
}

pub fn write_csv<W: Write>(w: W, records: &[CheckRecord]) -> Result<()> {
    let mut wr = csv::Writer::from_writer(w);
    for r in records {
        wr.serialize(CsvRow {
            p: r.p,
            check: r.check.clone(),
            case: r.case.clone(),
            g: r.g,
            t: r.t,
            m: r.m,
            expected: r.expected,
            actual: r.actual,
            pass: r.pass,
        })?;
    }
    wr.flush()?;
    Ok(())
}

pub fn read_csv<R: std::io::Read>(r: R) -> Result<Vec<CheckRecord>> {
    let mut rd = csv::Reader::from_reader(r);
    let mut out = Vec::new();
    for row in rd.deserialize() {
        let row: CsvRow = row?;
        out.push(CheckRecord {
            p: row.p,
            check: row.check,
            case: row.case,
            g: row.g,
            t: row.t,
            m: row.m,
            expected: row.expected,
            actual: row.actual,
            pass: row.pass,
        });
    }
    Ok(out)
}
