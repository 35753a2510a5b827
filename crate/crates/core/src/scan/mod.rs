//! Prime-range scans that run every closed form against its brute-force
//! counterpart and collect the outcomes as flat records.

mod checks;
mod config;
mod record;
mod run;

pub use checks::NON_INTEGRAL;
pub use config::{
    Check, ClassFilter, OutputFormat, RootsMode, ScanConfig, DEFAULT_EXHAUSTIVE_BELOW,
    DEFAULT_MAX_P, DEFAULT_SAMPLE_SIZE, DEFAULT_SEED,
};
pub use record::{read_csv, read_jsonl, write_csv, write_jsonl, CheckRecord, DiscrepancyRecord};
pub use run::{report_summarize, run_scan, scan_prime, verify, write_records, CheckSummary, ScanReport};
