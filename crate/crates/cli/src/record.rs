//! Serialized shapes for every line the CLI emits.
//!
//! Integers are decimal strings throughout so consumers without big-integer
//! JSON support lose nothing. Ratios are plain JSON numbers.

use std::collections::BTreeMap;

use expdio::verify::{ScanSummary, Skipped};
use expdio::{BoundReport, PrefilterStats, SolveReport, ValidationError};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: &str = "1";

fn schema() -> String {
    SCHEMA_VERSION.to_string()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolutionRecord {
    pub x: String,
    pub y: String,
    pub z: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParityRecord {
    pub x_parity: String,
    pub y_parity: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PrefilterRecord {
    pub candidates: String,
    pub pruned: String,
    pub exact_checks: String,
    pub prune_rate: f64,
}

impl From<&PrefilterStats> for PrefilterRecord {
    fn from(s: &PrefilterStats) -> Self {
        Self {
            candidates: s.candidates.to_string(),
            pruned: s.pruned.to_string(),
            exact_checks: s.exact_checks.to_string(),
            prune_rate: s.prune_rate(),
        }
    }
}

/// One solved instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    #[serde(rename = "type")]
    pub kind: String,
    pub schema_version: String,
    pub a: String,
    pub b: String,
    pub c: String,
    /// Sorted by `(z, x)`.
    pub solutions: Vec<SolutionRecord>,
    pub omega_c: String,
    pub count_bound: String,
    pub z_bound: String,
    pub le_z_bound: String,
    pub parity_classes: Vec<ParityRecord>,
    /// Only the checks that ran.
    pub verdicts: BTreeMap<String, bool>,
    pub prefilter_stats: PrefilterRecord,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl OutputRecord {
    pub fn from_report(report: &SolveReport, with_timing: bool) -> Self {
        let i = &report.instance;
        Self {
            kind: "instance".to_string(),
            schema_version: schema(),
            a: i.a().to_string(),
            b: i.b().to_string(),
            c: i.c().to_string(),
            solutions: report
                .solutions
                .iter()
                .map(|s| SolutionRecord {
                    x: s.x.to_string(),
                    y: s.y.to_string(),
                    z: s.z.to_string(),
                })
                .collect(),
            omega_c: report.omega_c.to_string(),
            count_bound: report.count_bound.to_string(),
            z_bound: report.z_bound.to_string(),
            le_z_bound: report.le_z_bound.to_string(),
            parity_classes: report
                .parity_classes
                .iter()
                .map(|p| ParityRecord {
                    x_parity: p.x_parity.to_string(),
                    y_parity: p.y_parity.to_string(),
                })
                .collect(),
            verdicts: report
                .verdicts
                .named()
                .into_iter()
                .filter_map(|(name, v)| v.map(|ok| (name.to_string(), ok)))
                .collect(),
            prefilter_stats: (&report.prefilter_stats).into(),
            timing_ms: with_timing.then_some(report.elapsed.as_secs_f64() * 1e3),
        }
    }

    pub fn max_z(&self) -> Option<&str> {
        self.solutions
            .iter()
            .max_by_key(|s| s.z.parse::<u64>().unwrap_or(0))
            .map(|s| s.z.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TripleRecord {
    pub a: String,
    pub b: String,
    pub c: String,
}

impl From<(u64, u64, u64)> for TripleRecord {
    fn from((a, b, c): (u64, u64, u64)) -> Self {
        Self {
            a: a.to_string(),
            b: b.to_string(),
            c: c.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HistogramBin {
    pub solutions: String,
    pub instances: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FailureRecord {
    #[serde(flatten)]
    pub instance: TripleRecord,
    pub failed: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanErrorRecord {
    #[serde(flatten)]
    pub instance: TripleRecord,
    pub message: String,
}

/// Closing line of a scan.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryRecord {
    #[serde(rename = "type")]
    pub kind: String,
    pub schema_version: String,
    pub ok: bool,
    pub instances: String,
    pub skipped: String,
    pub skipped_by_reason: BTreeMap<String, String>,
    pub max_solutions: String,
    pub max_count_ratio: f64,
    pub count_bound_attained: String,
    pub two_parity_classes: String,
    pub count_histogram: Vec<HistogramBin>,
    pub max_z_tightness: f64,
    pub tightness_witness: Option<TripleRecord>,
    pub verdict_failures: Vec<FailureRecord>,
    pub errors: Vec<ScanErrorRecord>,
    pub prefilter_stats: PrefilterRecord,
}

impl From<&ScanSummary> for SummaryRecord {
    fn from(s: &ScanSummary) -> Self {
        Self {
            kind: "summary".to_string(),
            schema_version: schema(),
            ok: s.is_clean(),
            instances: s.instances.to_string(),
            skipped: s.skipped.to_string(),
            skipped_by_reason: s
                .skipped_by_reason
                .iter()
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .collect(),
            max_solutions: s.max_solutions.to_string(),
            max_count_ratio: s.max_count_ratio,
            count_bound_attained: s.count_bound_attained.to_string(),
            two_parity_classes: s.two_parity_classes.to_string(),
            count_histogram: s
                .count_histogram
                .iter()
                .map(|(n, k)| HistogramBin {
                    solutions: n.to_string(),
                    instances: k.to_string(),
                })
                .collect(),
            max_z_tightness: s.max_z_tightness,
            tightness_witness: s.tightness_witness.map(Into::into),
            verdict_failures: s
                .verdict_failures
                .iter()
                .map(|f| FailureRecord {
                    instance: f.triple.into(),
                    failed: f.failed.iter().map(|n| n.to_string()).collect(),
                })
                .collect(),
            errors: s
                .errors
                .iter()
                .map(|e| ScanErrorRecord {
                    instance: e.triple.into(),
                    message: e.error.to_string(),
                })
                .collect(),
            prefilter_stats: (&s.prefilter).into(),
        }
    }
}

/// An instance a scan did not solve, and why.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SkippedRecord {
    #[serde(rename = "type")]
    pub kind: String,
    #[serde(flatten)]
    pub instance: TripleRecord,
    pub reason: String,
    pub message: String,
}

impl From<&Skipped> for SkippedRecord {
    fn from(s: &Skipped) -> Self {
        Self {
            kind: "skipped".to_string(),
            instance: s.triple.into(),
            reason: s.reason.code().to_string(),
            message: s.reason.to_string(),
        }
    }
}

/// Rejected input.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorRecord {
    #[serde(rename = "type")]
    pub kind: String,
    pub schema_version: String,
    pub reason: String,
    pub message: String,
}

impl ErrorRecord {
    pub fn new(reason: &str, message: String) -> Self {
        Self {
            kind: "error".to_string(),
            schema_version: schema(),
            reason: reason.to_string(),
            message,
        }
    }
}

impl From<&ValidationError> for ErrorRecord {
    fn from(e: &ValidationError) -> Self {
        Self::new(e.code(), e.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundsRecord {
    #[serde(rename = "type")]
    pub kind: String,
    pub schema_version: String,
    pub a: String,
    pub b: String,
    pub z_max_new: String,
    pub z_max_le: String,
    pub ratio: f64,
}

impl From<&BoundReport> for BoundsRecord {
    fn from(r: &BoundReport) -> Self {
        Self {
            kind: "bounds".to_string(),
            schema_version: schema(),
            a: r.a.to_string(),
            b: r.b.to_string(),
            z_max_new: r.z_max_new.to_string(),
            z_max_le: r.z_max_le.to_string(),
            ratio: r.ratio,
        }
    }
}
