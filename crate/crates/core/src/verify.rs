//! Independent checks on solver output.
//!
//! [`oracle_solve`] is a plain nested loop over `(x, y)` that looks the sum up
//! among the powers of `c`. It shares no code with the solver's sieve or its
//! incremental power tables, so agreement between the two is evidence rather
//! than tautology.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::bounds::exponent_ranges;
use crate::report::{PrefilterStats, SolveReport};
use crate::solver::{
    parity_classes, solve, sort_solutions, EquationInstance, SieveConfig, Solution, SolveError,
    ValidationError,
};

/// Default exponent cap for oracle spot checks.
pub const DEFAULT_ORACLE_CAP: u64 = 40;

/// How much of the search space the oracle re-enumerates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleMode {
    Off,
    /// `x` and `y` capped at the given value (and at their full ranges);
    /// only solver output inside that window is compared.
    Capped(u64),
    /// The entire range implied by the `z` bound.
    Full,
}

impl Default for OracleMode {
    fn default() -> Self {
        OracleMode::Capped(DEFAULT_ORACLE_CAP)
    }
}

/// Every `(x, y, z)` with `x <= x_cap`, `y <= y_cap`, `z <= z_cap` and
/// `a^x + b^y = c^z`, sorted by `(z, x)`.
pub fn oracle_solve(
    instance: &EquationInstance,
    x_cap: u64,
    y_cap: u64,
    z_cap: u64,
) -> Vec<Solution> {
    let (a, b, c) = (instance.a(), instance.b(), instance.c());
    let c_powers: Vec<BigUint> = (1..=z_cap).map(|z| c.pow(z as u32)).collect();
    let Some(top) = c_powers.last() else {
        return Vec::new();
    };
    let mut found = Vec::new();
    for x in 1..=x_cap {
        let ax = a.pow(x as u32);
        if &ax + b > *top {
            break;
        }
        for y in 1..=y_cap {
            let sum = &ax + b.pow(y as u32);
            if sum > *top {
                break;
            }
            if let Ok(idx) = c_powers.binary_search(&sum) {
                found.push(Solution::new(x, y, idx as u64 + 1));
            }
        }
    }
    sort_solutions(&mut found);
    found
}

/// Fill in the verdicts of a solver report.
///
/// The structural checks depend only on the instance and the solutions, so
/// running this twice gives the same verdicts.
pub fn verify_instance(mut report: SolveReport, oracle: OracleMode) -> SolveReport {
    report.parity_classes = parity_classes(&report.solutions);
    let n = BigUint::from(report.solutions.len());
    report.verdicts.count_ok = Some(n <= report.count_bound);
    report.verdicts.z_ok = Some(
        report
            .solutions
            .iter()
            .all(|s| BigUint::from(s.z) <= report.z_bound),
    );
    report.verdicts.parity_ok = Some(report.parity_classes.len() <= 2);
    report.verdicts.oracle_ok = match oracle {
        OracleMode::Off => None,
        OracleMode::Capped(cap) => Some(oracle_agrees(&report, Some(cap))),
        OracleMode::Full => Some(oracle_agrees(&report, None)),
    };
    report
}

fn oracle_agrees(report: &SolveReport, cap: Option<u64>) -> bool {
    let z_cap = report.z_bound.to_u64().expect("searched z bound fits");
    if z_cap == 0 {
        return report.solutions.is_empty();
    }
    let (x_full, y_full) = exponent_ranges(&report.instance, z_cap);
    let (x_cap, y_cap) = match cap {
        Some(k) => (x_full.min(k), y_full.min(k)),
        None => (x_full, y_full),
    };
    let expected = oracle_solve(&report.instance, x_cap, y_cap, z_cap);
    let seen: Vec<Solution> = report
        .solutions
        .iter()
        .filter(|s| s.x <= x_cap && s.y <= y_cap)
        .copied()
        .collect();
    expected == seen
}

/// Inclusive ranges for a scan; instances are visited in lexicographic
/// `(a, b, c)` order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRanges {
    pub a: RangeInclusive<u64>,
    pub b: RangeInclusive<u64>,
    pub c: RangeInclusive<u64>,
}

impl ScanRanges {
    /// `2..=a_max`, `2..=b_max`, `3..=c_max`.
    pub fn up_to(a_max: u64, b_max: u64, c_max: u64) -> Self {
        Self {
            a: 2..=a_max,
            b: 2..=b_max,
            c: 3..=c_max,
        }
    }

    pub fn triples(&self) -> impl Iterator<Item = (u64, u64, u64)> + '_ {
        self.a.clone().flat_map(move |a| {
            self.b
                .clone()
                .flat_map(move |b| self.c.clone().map(move |c| (a, b, c)))
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Skipped {
    pub triple: (u64, u64, u64),
    pub reason: ValidationError,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanError {
    pub triple: (u64, u64, u64),
    pub error: SolveError,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerdictFailure {
    pub triple: (u64, u64, u64),
    pub failed: Vec<&'static str>,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ScanSummary {
    /// Valid instances solved.
    pub instances: usize,
    pub skipped: usize,
    pub skipped_by_reason: BTreeMap<&'static str, usize>,
    pub max_solutions: usize,
    /// Largest `|solutions| / 2^omega(c)`.
    pub max_count_ratio: f64,
    /// Instances whose solution count equals `2^omega(c)`, with solutions.
    pub count_bound_attained: usize,
    /// Instances whose solutions occupy exactly two parity classes.
    pub two_parity_classes: usize,
    /// Solution count -> number of instances.
    pub count_histogram: BTreeMap<usize, usize>,
    /// Largest `max z / z_bound` over instances with solutions.
    pub max_z_tightness: f64,
    pub tightness_witness: Option<(u64, u64, u64)>,
    pub verdict_failures: Vec<VerdictFailure>,
    pub errors: Vec<ScanError>,
    pub prefilter: PrefilterStats,
}

impl ScanSummary {
    pub fn is_clean(&self) -> bool {
        self.verdict_failures.is_empty() && self.errors.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct ScanOutcome {
    /// Verified reports in lexicographic instance order.
    pub reports: Vec<SolveReport>,
    pub skipped: Vec<Skipped>,
    pub summary: ScanSummary,
}

enum Visit {
    Solved(Box<SolveReport>),
    Skipped(Skipped),
    Failed(ScanError),
}

/// Solve and verify every valid instance in the ranges. Invalid triples are
/// recorded as skipped; verdict failures are collected, never fatal.
///
/// Output is identical for every `jobs >= 1`.
pub fn scan(
    ranges: &ScanRanges,
    config: &SieveConfig,
    oracle: OracleMode,
    jobs: usize,
) -> ScanOutcome {
    let triples: Vec<(u64, u64, u64)> = ranges.triples().collect();
    let visit = |&(a, b, c): &(u64, u64, u64)| -> Visit {
        let triple = (a, b, c);
        match EquationInstance::new(a, b, c) {
            Err(reason) => Visit::Skipped(Skipped { triple, reason }),
            Ok(instance) => match solve(&instance, config) {
                Ok(report) => Visit::Solved(Box::new(verify_instance(report, oracle))),
                Err(error) => Visit::Failed(ScanError { triple, error }),
            },
        }
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    let visits: Vec<Visit> = pool.install(|| triples.par_iter().map(visit).collect());

    let mut reports = Vec::new();
    let mut skipped = Vec::new();
    let mut errors = Vec::new();
    for v in visits {
        match v {
            Visit::Solved(r) => reports.push(*r),
            Visit::Skipped(s) => skipped.push(s),
            Visit::Failed(e) => errors.push(e),
        }
    }
    let summary = summarize(&reports, &skipped, errors);
    ScanOutcome {
        reports,
        skipped,
        summary,
    }
}

fn triple_of(report: &SolveReport) -> (u64, u64, u64) {
    let i = &report.instance;
    let f = |v: &BigUint| v.to_u64().expect("scan values are u64");
    (f(i.a()), f(i.b()), f(i.c()))
}

fn summarize(reports: &[SolveReport], skipped: &[Skipped], errors: Vec<ScanError>) -> ScanSummary {
    let mut s = ScanSummary {
        instances: reports.len(),
        skipped: skipped.len(),
        errors,
        ..ScanSummary::default()
    };
    for sk in skipped {
        *s.skipped_by_reason.entry(sk.reason.code()).or_default() += 1;
    }
    for r in reports {
        let n = r.solutions.len();
        *s.count_histogram.entry(n).or_default() += 1;
        s.max_solutions = s.max_solutions.max(n);
        let bound = r.count_bound.to_f64().unwrap_or(f64::INFINITY);
        s.max_count_ratio = s.max_count_ratio.max(n as f64 / bound);
        if n > 0 && BigUint::from(n) == r.count_bound {
            s.count_bound_attained += 1;
        }
        if r.parity_classes.len() == 2 {
            s.two_parity_classes += 1;
        }
        if let Some(z) = r.max_z() {
            if !r.z_bound.is_zero() {
                let t = z as f64 / r.z_bound.to_f64().unwrap_or(f64::INFINITY);
                if t > s.max_z_tightness {
                    s.max_z_tightness = t;
                    s.tightness_witness = Some(triple_of(r));
                }
            }
        }
        let failed = r.verdicts.failures();
        if !failed.is_empty() {
            s.verdict_failures.push(VerdictFailure {
                triple: triple_of(r),
                failed,
            });
        }
        s.prefilter = s.prefilter + r.prefilter_stats;
    }
    s
}
