use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{Congruence, TABLE_LIMIT};
use crate::error::{Error, Result};

/// Default upper end of a scan.
pub const DEFAULT_MAX_P: u64 = 10_000;
/// Primes below this are enumerated over every `t` and `m`.
pub const DEFAULT_EXHAUSTIVE_BELOW: u64 = 2_000;
pub const DEFAULT_SAMPLE_SIZE: usize = 128;
pub const DEFAULT_SEED: u64 = 0x5eed_b1c0_ad5e_ed01;

/// Which primes a scan visits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub enum ClassFilter {
    #[default]
    OneMod8,
    NineMod16,
    OneMod16,
    /// Every `p = 1 mod 4`; checks that need `p = 1 mod 8` skip the rest.
    All,
}

impl ClassFilter {
    pub fn congruence(self) -> Congruence {
        match self {
            ClassFilter::OneMod8 => Congruence::new(1, 8),
            ClassFilter::NineMod16 => Congruence::new(9, 16),
            ClassFilter::OneMod16 => Congruence::new(1, 16),
            ClassFilter::All => Congruence::new(1, 4),
        }
    }
}

impl FromStr for ClassFilter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm: String = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '_' && *c != '-')
            .collect::<String>()
            .to_ascii_lowercase();
        match norm.as_str() {
            "1mod8" => Ok(ClassFilter::OneMod8),
            "9mod16" => Ok(ClassFilter::NineMod16),
            "1mod16" => Ok(ClassFilter::OneMod16),
            "all" => Ok(ClassFilter::All),
            _ => Err(Error::InvalidConfig(format!("unknown class filter {s:?}"))),
        }
    }
}

impl fmt::Display for ClassFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassFilter::OneMod8 => "1mod8",
            ClassFilter::NineMod16 => "9mod16",
            ClassFilter::OneMod16 => "1mod16",
            ClassFilter::All => "all",
        })
    }
}

/// Which primitive roots the per-root checks visit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub enum RootsMode {
    /// The smallest primitive root only.
    #[default]
    First,
    All,
}

impl FromStr for RootsMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "first" => Ok(RootsMode::First),
            "all" => Ok(RootsMode::All),
            _ => Err(Error::InvalidConfig(format!("unknown roots mode {s:?}"))),
        }
    }
}

impl fmt::Display for RootsMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RootsMode::First => "first",
            RootsMode::All => "all",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub enum OutputFormat {
    #[default]
    Jsonl,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "jsonl" | "json" => Ok(OutputFormat::Jsonl),
            "csv" => Ok(OutputFormat::Csv),
            _ => Err(Error::InvalidConfig(format!("unknown output format {s:?}"))),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Jsonl => "jsonl",
            OutputFormat::Csv => "csv",
        })
    }
}

/// The check registry, in output order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Check {
    Lemma21,
    Lemma22,
    OmegaProducts,
    Lemma23,
    Lemma31,
    Lemma32,
    Lemma33,
    Eq31,
    SProduct,
    ThmA,
    ThmB,
    GIndependence,
    Pairing,
    Balance,
    CycloDenominator,
    CycloSplit,
}

impl Check {
    pub const ALL: [Check; 16] = [
        Check::Lemma21,
        Check::Lemma22,
        Check::OmegaProducts,
        Check::Lemma23,
        Check::Lemma31,
        Check::Lemma32,
        Check::Lemma33,
        Check::Eq31,
        Check::SProduct,
        Check::ThmA,
        Check::ThmB,
        Check::GIndependence,
        Check::Pairing,
        Check::Balance,
        Check::CycloDenominator,
        Check::CycloSplit,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Lemma21 => "lemma21",
            Check::Lemma22 => "lemma22",
            Check::OmegaProducts => "omega_products",
            Check::Lemma23 => "lemma23",
            Check::Lemma31 => "lemma31",
            Check::Lemma32 => "lemma32",
            Check::Lemma33 => "lemma33",
            Check::Eq31 => "eq31",
            Check::SProduct => "s_product",
            Check::ThmA => "thmA",
            Check::ThmB => "thmB",
            Check::GIndependence => "g_independence",
            Check::Pairing => "pairing",
            Check::Balance => "balance",
            Check::CycloDenominator => "cyclo_denominator",
            Check::CycloSplit => "cyclo_split",
        }
    }

    /// Whether the check runs for `p`, given `p = 1 mod 4`.
    pub fn applies(self, p: u64) -> bool {
        match self {
            Check::Lemma21 | Check::Lemma31 => true,
            Check::GIndependence => p % 16 == 9,
            Check::Pairing | Check::Balance => p % 16 == 1,
            Check::CycloSplit => p <= crate::cyclo::SPLIT_CHECK_BOUND,
            _ => p % 8 == 1,
        }
    }

    /// Parses a comma-separated list; `all` selects the whole registry.
    pub fn parse_list(s: &str) -> Result<Vec<Check>> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part.eq_ignore_ascii_case("all") {
                out.extend(Check::ALL);
            } else {
                out.push(part.parse()?);
            }
        }
        out.sort_unstable();
        out.dedup();
        if out.is_empty() {
            return Err(Error::InvalidConfig("no checks selected".into()));
        }
        Ok(out)
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidConfig(format!("unknown check {s:?}")))
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanConfig {
    pub min_p: u64,
    pub max_p: u64,
    pub class_filter: ClassFilter,
    pub checks: Vec<Check>,
    pub roots_mode: RootsMode,
    pub workers: usize,
    pub output_path: Option<PathBuf>,
    pub output_format: OutputFormat,
    pub seed: u64,
    /// Enumerate every `t` and `m` regardless of `p`.
    pub exhaustive: bool,
    pub exhaustive_below: u64,
    pub sample_size: usize,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            min_p: 17,
            max_p: DEFAULT_MAX_P,
            class_filter: ClassFilter::default(),
            checks: Check::ALL.to_vec(),
            roots_mode: RootsMode::default(),
            workers: 1,
            output_path: None,
            output_format: OutputFormat::default(),
            seed: DEFAULT_SEED,
            exhaustive: false,
            exhaustive_below: DEFAULT_EXHAUSTIVE_BELOW,
            sample_size: DEFAULT_SAMPLE_SIZE,
        }
    }
}

impl ScanConfig {
    pub fn range(min_p: u64, max_p: u64) -> Self {
        ScanConfig {
            min_p,
            max_p,
            ..ScanConfig::default()
        }
    }

    pub fn with_checks(mut self, checks: &[Check]) -> Self {
        let mut c = checks.to_vec();
        c.sort_unstable();
        c.dedup();
        self.checks = c;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.min_p > self.max_p {
            return Err(Error::InvalidConfig(format!(
                "min {} exceeds max {}",
                self.min_p, self.max_p
            )));
        }
        if self.max_p > TABLE_LIMIT {
            return Err(Error::InvalidConfig(format!(
                "max {} exceeds the supported bound {TABLE_LIMIT}",
                self.max_p
            )));
        }
        if self.workers == 0 {
            return Err(Error::InvalidConfig("workers must be positive".into()));
        }
        if self.sample_size == 0 {
            return Err(Error::InvalidConfig("sample size must be positive".into()));
        }
        if self.checks.is_empty() {
            return Err(Error::InvalidConfig("no checks selected".into()));
        }
        Ok(())
    }

    /// Whether every `t` and `m` is visited at `p`.
    pub fn enumerates(&self, p: u64) -> bool {
        self.exhaustive || p < self.exhaustive_below
    }
}
