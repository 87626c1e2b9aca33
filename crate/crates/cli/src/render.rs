//! Text encodings of records: JSON, TSV and a human-oriented text form.
//!
//! JSON and TSV layouts are stable; the text form is not.

use std::fmt::Write;

use serde::Serialize;

use crate::record::{BoundsRecord, OutputRecord, SummaryRecord};

pub const TSV_HEADER: &str =
    "a\tb\tc\tn_solutions\tmax_z\tz_bound\tomega_c\tcount_bound\tparity_class_count\tverdicts";

pub fn json_line<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("records serialize")
}

fn verdict_cell(record: &OutputRecord) -> String {
    if record.verdicts.is_empty() {
        return "-".to_string();
    }
    record
        .verdicts
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(",")
}

pub fn tsv_row(record: &OutputRecord) -> String {
    [
        record.a.clone(),
        record.b.clone(),
        record.c.clone(),
        record.solutions.len().to_string(),
        record.max_z().unwrap_or("-").to_string(),
        record.z_bound.clone(),
        record.omega_c.clone(),
        record.count_bound.clone(),
        record.parity_classes.len().to_string(),
        verdict_cell(record),
    ]
    .join("\t")
}

/// Summary block appended after the TSV rows, as `#`-prefixed lines.
pub fn tsv_summary(summary: &SummaryRecord) -> String {
    let value = serde_json::to_value(summary).expect("summary serializes");
    let mut out = String::from("# summary\n");
    if let serde_json::Value::Object(map) = value {
        for (k, v) in map {
            if k == "type" {
                continue;
            }
            let cell = match v {
                serde_json::Value::String(s) => s,
                other => other.to_string(),
            };
            writeln!(out, "# {k}\t{cell}").unwrap();
        }
    }
    out
}

pub fn text(record: &OutputRecord) -> String {
    let mut out = String::new();
    writeln!(out, "{}^x + {}^y = {}^z", record.a, record.b, record.c).unwrap();
    writeln!(
        out,
        "z searched up to {} (Le's bound: {})",
        record.z_bound, record.le_z_bound
    )
    .unwrap();
    if record.solutions.is_empty() {
        writeln!(out, "no solutions").unwrap();
    }
    for s in &record.solutions {
        writeln!(out, "  (x, y, z) = ({}, {}, {})", s.x, s.y, s.z).unwrap();
    }
    writeln!(
        out,
        "{} solution(s), at most {} allowed (omega(c) = {})",
        record.solutions.len(),
        record.count_bound,
        record.omega_c
    )
    .unwrap();
    let classes: Vec<String> = record
        .parity_classes
        .iter()
        .map(|p| format!("({}, {})", p.x_parity, p.y_parity))
        .collect();
    writeln!(out, "parity classes: {}", classes.join(" ")).unwrap();
    writeln!(out, "checks: {}", verdict_cell(record)).unwrap();
    let p = &record.prefilter_stats;
    writeln!(
        out,
        "prefilter: {} candidates, {} pruned ({:.1}%), {} exact checks",
        p.candidates,
        p.pruned,
        100.0 * p.prune_rate,
        p.exact_checks
    )
    .unwrap();
    if let Some(ms) = record.timing_ms {
        writeln!(out, "time: {ms:.3} ms").unwrap();
    }
    out
}

pub fn bounds_text(record: &BoundsRecord) -> String {
    format!(
        "a = {}, b = {}\nz_max_new = {}\nz_max_le = {}\nratio = {:.4}\n",
        record.a, record.b, record.z_max_new, record.z_max_le, record.ratio
    )
}
