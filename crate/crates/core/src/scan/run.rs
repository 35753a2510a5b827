use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs::File;
use std::io::BufWriter;
use std::path::Path;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{is_prime, primes_in_range, PrimeContext};
use crate::error::{Error, Result};

use super::checks::PrimeJob;
use super::config::{Check, ClassFilter, OutputFormat, RootsMode, ScanConfig};
use super::record::{write_csv, write_jsonl, CheckRecord, DiscrepancyRecord};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ScanReport {
    pub config: ScanConfig,
    pub primes: Vec<u64>,
    pub records: Vec<CheckRecord>,
    pub elapsed: Duration,
}

/// Per-check totals.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckSummary {
    pub check: String,
    pub primes: u64,
    pub records: u64,
    pub passed: u64,
}

impl CheckSummary {
    pub fn failed(&self) -> u64 {
        self.records - self.passed
    }
}

impl ScanReport {
    pub fn discrepancies(&self) -> Vec<DiscrepancyRecord> {
        self.records.iter().filter_map(CheckRecord::discrepancy).collect()
    }

    /// One row per configured check, in registry order.
    pub fn summary(&self) -> Vec<CheckSummary> {
        let mut rows: BTreeMap<Check, CheckSummary> = self
            .config
            .checks
            .iter()
            .map(|&c| {
                (
                    c,
                    CheckSummary {
                        check: c.name().to_string(),
                        ..CheckSummary::default()
                    },
                )
            })
            .collect();
        let mut last: Option<(u64, Check)> = None;
        for r in &self.records {
            let Ok(c) = r.check.parse::<Check>() else {
                continue;
            };
            let row = rows.entry(c).or_insert_with(|| CheckSummary {
                check: c.name().to_string(),
                ..CheckSummary::default()
            });
            if last != Some((r.p, c)) {
                row.primes += 1;
                last = Some((r.p, c));
            }
            // per-item failure records are detail under a summary record
            if r.t.is_none() && r.m.is_none() {
                row.records += 1;
                row.passed += r.pass as u64;
            }
        }
        rows.into_values().collect()
    }

    pub fn write(&self, path: &Path, format: OutputFormat) -> Result<()> {
        write_records(path, format, &self.records)
    }
}

pub fn write_records(path: &Path, format: OutputFormat, records: &[CheckRecord]) -> Result<()> {
    let w = BufWriter::new(File::create(path)?);
    match format {
        OutputFormat::Jsonl => write_jsonl(w, records),
        OutputFormat::Csv => write_csv(w, records),
    }
}

/// All records for one prime, in registry order.
pub fn scan_prime(cfg: &ScanConfig, p: u64) -> Result<Vec<CheckRecord>> {
    let ctx = PrimeContext::new(p)?;
    let job = PrimeJob::new(cfg, &ctx);
    let mut out = Vec::new();
    for &check in &cfg.checks {
        if check.applies(p) {
            out.extend(job.run(check)?);
        }
    }
    Ok(out)
}

/// Runs the configured checks over every prime in range.
///
/// Records come back ordered by `p` (then check, then root or item) whatever
/// the worker count. Mathematical disagreements are records with
/// `pass = false`; only I/O and configuration problems are errors.
pub fn run_scan(cfg: &ScanConfig) -> Result<ScanReport> {
    cfg.validate()?;
    let start = Instant::now();
    let lo = cfg.min_p.max(5);
    let primes = primes_in_range(lo, cfg.max_p, Some(cfg.class_filter.congruence()));
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| Error::InvalidConfig(e.to_string()))?;
    let per_prime: Vec<Vec<CheckRecord>> = pool.install(|| {
        primes
            .par_iter()
            .map(|&p| scan_prime(cfg, p))
            .collect::<Result<_>>()
    })?;
    let records: Vec<CheckRecord> = per_prime.into_iter().flatten().collect();
    if let Some(path) = &cfg.output_path {
        write_records(path, cfg.output_format, &records)?;
    }
    Ok(ScanReport {
        config: cfg.clone(),
        primes,
        records,
        elapsed: start.elapsed(),
    })
}

/// Every applicable check for a single prime `p = 1 mod 4`.
pub fn verify(p: u64, all_roots: bool, exhaustive: bool, seed: u64) -> Result<ScanReport> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p % 4 != 1 {
        return Err(Error::NotOneModFour(p));
    }
    let cfg = ScanConfig {
        min_p: p,
        max_p: p,
        class_filter: ClassFilter::All,
        roots_mode: if all_roots { RootsMode::All } else { RootsMode::First },
        exhaustive,
        seed,
        ..ScanConfig::default()
    };
    run_scan(&cfg)
}

const DISCREPANCY_LINES: usize = 25;

/// Plain-text table of per-check totals, the leading discrepancies and the
/// wall-clock time.
pub fn report_summarize(report: &ScanReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:<18} {:>7} {:>8} {:>8} {:>6}",
        "check", "primes", "records", "passed", "failed"
    );
    for row in report.summary() {
        let _ = writeln!(
            s,
            "{:<18} {:>7} {:>8} {:>8} {:>6}",
            row.check,
            row.primes,
            row.records,
            row.passed,
            row.failed()
        );
    }
    let disc = report.discrepancies();
    let _ = writeln!(s, "discrepancies: {}", disc.len());
    for d in disc.iter().take(DISCREPANCY_LINES) {
        let mut loc = format!("p={}", d.p);
        if let Some(g) = d.g {
            let _ = write!(loc, " g={g}");
        }
        if let Some(t) = d.t {
            let _ = write!(loc, " t={t}");
        }
        if let Some(m) = d.m {
            let _ = write!(loc, " m={m}");
        }
        let _ = writeln!(
            s,
            "  {loc} {} [{}]: expected {}, actual {}",
            d.check_name, d.case_label, d.expected, d.actual
        );
    }
    if disc.len() > DISCREPANCY_LINES {
        let _ = writeln!(s, "  ... {} more", disc.len() - DISCREPANCY_LINES);
    }
    let _ = writeln!(
        s,
        "primes: {}, elapsed: {:.3} s",
        report.primes.len(),
        report.elapsed.as_secs_f64()
    );
    s
}
