//! Report schema and emission.
//!
//! One report = config echo + per-trial records + summary. JSON keeps the
//! struct field order; CSV uses the fixed column set
//! `trial,n,dim,m,value,gap,count,converged,iterations,seed_index,wall_ms`
//! with big integers as quoted decimal strings and floats in shortest
//! round-trip form. Identical (config, seed) runs produce identical bytes
//! unless --timings is on.

use std::io::Write as _;
use std::path::{Path, PathBuf};

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

impl OutputFormat {
    pub fn as_str(&self) -> &'static str {
        match self {
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
        }
    }
}

/// Echo of the fully resolved experiment configuration.
#[derive(Debug, Clone, Serialize)]
pub struct ConfigEcho {
    pub subcommand: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gens: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub steps: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tree_degree: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prime: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree_cutoff: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_m: Option<u64>,
    pub seed: u64,
    pub tol: f64,
    pub format: String,
    pub jobs: u64,
    pub timings: bool,
}

impl ConfigEcho {
    pub fn new(
        subcommand: &str,
        seed: u64,
        tol: f64,
        format: OutputFormat,
        jobs: u64,
        timings: bool,
    ) -> Self {
        Self {
            subcommand: subcommand.to_string(),
            n: None,
            dim: None,
            m: None,
            trials: None,
            samples: None,
            gens: None,
            steps: None,
            tree_degree: None,
            prime: None,
            degree_cutoff: None,
            max_m: None,
            seed,
            tol,
            format: format.as_str().to_string(),
            jobs,
            timings,
        }
    }
}

/// One experiment record. Fields not produced by a subcommand stay None and
/// serialize as absent (JSON) or empty cells (CSV).
#[derive(Debug, Clone, Default, Serialize)]
pub struct TrialRecord {
    pub trial: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gap: Option<f64>,
    /// Exact big-integer payloads as decimal strings (no precision loss).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub count: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub converged: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub iterations: Option<u64>,
    /// RNG stream index reproducing this record bit-for-bit.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed_index: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<f64>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Summary {
    pub records: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_value: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_value: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mean_value: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_gap: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_gap: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mean_gap: Option<f64>,
    /// Reference bound the run was checked against, when one applies.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<f64>,
    pub violations: u64,
}

impl Summary {
    /// Fills value/gap statistics from the records.
    pub fn from_records(records: &[TrialRecord], bound: Option<f64>, violations: usize) -> Self {
        let mut s = Summary {
            records: records.len() as u64,
            bound,
            violations: violations as u64,
            ..Summary::default()
        };
        let values: Vec<f64> = records.iter().filter_map(|r| r.value).collect();
        if !values.is_empty() {
            s.min_value = values.iter().copied().reduce(f64::min);
            s.max_value = values.iter().copied().reduce(f64::max);
            s.mean_value = Some(values.iter().sum::<f64>() / values.len() as f64);
        }
        let gaps: Vec<f64> = records.iter().filter_map(|r| r.gap).collect();
        if !gaps.is_empty() {
            s.min_gap = gaps.iter().copied().reduce(f64::min);
            s.max_gap = gaps.iter().copied().reduce(f64::max);
            s.mean_gap = Some(gaps.iter().sum::<f64>() / gaps.len() as f64);
        }
        s
    }
}

#[derive(Debug, Serialize)]
pub struct ExperimentReport {
    pub config: ConfigEcho,
    pub records: Vec<TrialRecord>,
    pub summary: Summary,
}

pub const CSV_HEADER: &str =
    "trial,n,dim,m,value,gap,count,converged,iterations,seed_index,wall_ms";

fn csv_opt<T: std::fmt::Display>(v: &Option<T>) -> String {
    v.as_ref().map(|x| x.to_string()).unwrap_or_default()
}

impl ExperimentReport {
    /// Serializes to the requested format; stable shape for golden tests.
    pub fn emit(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serialization");
                s.push('\n');
                s
            }
            OutputFormat::Csv => {
                let mut s = String::from(CSV_HEADER);
                s.push('\n');
                for r in &self.records {
                    let count_cell = r
                        .count
                        .as_ref()
                        .map(|c| format!("\"{c}\""))
                        .unwrap_or_default();
                    s.push_str(&format!(
                        "{},{},{},{},{},{},{},{},{},{},{}\n",
                        r.trial,
                        csv_opt(&r.n),
                        csv_opt(&r.dim),
                        csv_opt(&r.m),
                        csv_opt(&r.value),
                        csv_opt(&r.gap),
                        count_cell,
                        csv_opt(&r.converged),
                        csv_opt(&r.iterations),
                        csv_opt(&r.seed_index),
                        csv_opt(&r.wall_ms),
                    ));
                }
                s
            }
        }
    }

    /// Writes atomically: temp file in the target directory, then rename.
    pub fn write_to(&self, path: &Path, format: OutputFormat) -> std::io::Result<()> {
        let bytes = self.emit(format);
        let tmp: PathBuf = {
            let mut name = path.file_name().unwrap_or_default().to_os_string();
            name.push(".tmp");
            path.with_file_name(name)
        };
        {
            let mut f = std::fs::File::create(&tmp)?;
            f.write_all(bytes.as_bytes())?;
            f.sync_all()?;
        }
        std::fs::rename(&tmp, path)
    }
}
