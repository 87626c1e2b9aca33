use std::collections::BTreeSet;
use std::time::Duration;

use num_bigint::BigUint;

use crate::solver::{EquationInstance, ParityClass, Solution};

/// Candidate counts from the residue prefilter.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PrefilterStats {
    /// `(z, x)` pairs inside the exponent ranges.
    pub candidates: u64,
    /// Pairs rejected by some modulus.
    pub pruned: u64,
    /// Pairs that reached the exact power test.
    pub exact_checks: u64,
}

impl PrefilterStats {
    pub fn prune_rate(&self) -> f64 {
        if self.candidates == 0 {
            0.0
        } else {
            self.pruned as f64 / self.candidates as f64
        }
    }
}

impl std::ops::Add for PrefilterStats {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self {
            candidates: self.candidates + rhs.candidates,
            pruned: self.pruned + rhs.pruned,
            exact_checks: self.exact_checks + rhs.exact_checks,
        }
    }
}

impl std::iter::Sum for PrefilterStats {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::default(), |acc, s| acc + s)
    }
}

/// Named checks filled in by [`crate::verify_instance`]. `None` means the
/// check has not run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Verdicts {
    /// `|solutions| <= 2^omega(c)`.
    pub count_ok: Option<bool>,
    /// Every solution has `z <= z_bound`.
    pub z_ok: Option<bool>,
    /// At most two parity classes occur.
    pub parity_ok: Option<bool>,
    /// The brute-force oracle found the same solutions.
    pub oracle_ok: Option<bool>,
}

impl Verdicts {
    pub fn named(&self) -> [(&'static str, Option<bool>); 4] {
        [
            ("count_ok", self.count_ok),
            ("z_ok", self.z_ok),
            ("parity_ok", self.parity_ok),
            ("oracle_ok", self.oracle_ok),
        ]
    }

    /// Names of the checks that ran and failed.
    pub fn failures(&self) -> Vec<&'static str> {
        self.named()
            .into_iter()
            .filter(|(_, v)| *v == Some(false))
            .map(|(name, _)| name)
            .collect()
    }

    pub fn all_ok(&self) -> bool {
        self.failures().is_empty()
    }
}

/// Everything known about one solved instance.
#[derive(Debug, Clone, PartialEq)]
pub struct SolveReport {
    pub instance: EquationInstance,
    /// Sorted by `(z, x)`.
    pub solutions: Vec<Solution>,
    pub omega_c: usize,
    /// `2^omega(c)`.
    pub count_bound: BigUint,
    /// Largest `z` searched: `floor((ab - 1) / 2)`.
    pub z_bound: BigUint,
    pub le_z_bound: BigUint,
    pub parity_classes: BTreeSet<ParityClass>,
    pub verdicts: Verdicts,
    pub prefilter_stats: PrefilterStats,
    pub elapsed: Duration,
}

impl SolveReport {
    pub fn max_z(&self) -> Option<u64> {
        self.solutions.iter().map(|s| s.z).max()
    }
}
