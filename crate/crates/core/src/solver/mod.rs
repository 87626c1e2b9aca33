//! Exhaustive search for the solutions of `a^x + b^y = c^z`.
//!
//! `z` runs from 1 to `floor((ab - 1) / 2)`; for each `z`, every `x` with
//! `a^x < c^z` that survives the residue prefilter is tested exactly by asking
//! whether `c^z - a^x` is a power of `b`.

mod sieve;

use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;
use thiserror::Error;

pub use sieve::{
    residue_prefilter, SieveConfig, SieveConfigError, DEFAULT_MODULI, MAX_MODULI, MAX_MODULUS,
};

use crate::bounds::{exponent_ranges_for_power, z_bound_le, z_bound_new};
use crate::ntheory::{factorize, ilog_bound, power_of, NtError};
use crate::report::{PrefilterStats, SolveReport, Verdicts};
use sieve::Prefilter;

/// Number of consecutive `z` values handled by one parallel task.
const Z_CHUNK: u64 = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("{name} must be at least {min}, got {value}")]
    TooSmall {
        name: &'static str,
        value: BigInt,
        min: u32,
    },
    #[error("c must be odd, got {0}")]
    NotOdd(BigInt),
    #[error("{first}, {second} not coprime (gcd {gcd})")]
    NotCoprime {
        first: &'static str,
        second: &'static str,
        gcd: BigUint,
    },
}

impl ValidationError {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            ValidationError::TooSmall { .. } => "too_small",
            ValidationError::NotOdd(_) => "not_odd",
            ValidationError::NotCoprime { .. } => "not_coprime",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error(transparent)]
    Validation(#[from] ValidationError),
    #[error("factoring c: {0}")]
    Factorization(#[from] NtError),
    #[error("z bound {0} is beyond the supported search size")]
    BoundTooLarge(BigUint),
}

/// A validated `(a, b, c)`: `a, b >= 2`, `c >= 3` odd, pairwise coprime.
///
/// `a` and `b` keep the order they were given in; solutions are reported in
/// that orientation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EquationInstance {
    a: BigUint,
    b: BigUint,
    c: BigUint,
}

impl EquationInstance {
    pub fn new(
        a: impl Into<BigUint>,
        b: impl Into<BigUint>,
        c: impl Into<BigUint>,
    ) -> Result<Self, ValidationError> {
        validate(
            &BigInt::from(a.into()),
            &BigInt::from(b.into()),
            &BigInt::from(c.into()),
        )
    }

    pub fn a(&self) -> &BigUint {
        &self.a
    }

    pub fn b(&self) -> &BigUint {
        &self.b
    }

    pub fn c(&self) -> &BigUint {
        &self.c
    }

    /// Exact check of `a^x + b^y = c^z`.
    pub fn satisfied_by(&self, s: &Solution) -> bool {
        self.a.pow(s.x as u32) + self.b.pow(s.y as u32) == self.c.pow(s.z as u32)
    }
}

impl std::fmt::Display for EquationInstance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

pub fn validate(a: &BigInt, b: &BigInt, c: &BigInt) -> Result<EquationInstance, ValidationError> {
    for (name, value, min) in [("a", a, 2u32), ("b", b, 2), ("c", c, 3)] {
        if *value < BigInt::from(min) {
            return Err(ValidationError::TooSmall {
                name,
                value: value.clone(),
                min,
            });
        }
    }
    if c.is_even() {
        return Err(ValidationError::NotOdd(c.clone()));
    }
    let (a, b, c) = (a.magnitude(), b.magnitude(), c.magnitude());
    for (first, second, x, y) in [("a", "b", a, b), ("a", "c", a, c), ("b", "c", b, c)] {
        let gcd = x.gcd(y);
        if !gcd.is_one() {
            return Err(ValidationError::NotCoprime { first, second, gcd });
        }
    }
    Ok(EquationInstance {
        a: a.clone(),
        b: b.clone(),
        c: c.clone(),
    })
}

/// Positive exponents `(x, y, z)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Solution {
    pub x: u64,
    pub y: u64,
    pub z: u64,
}

impl Solution {
    pub fn new(x: u64, y: u64, z: u64) -> Self {
        Self { x, y, z }
    }

    pub fn parity(&self) -> ParityClass {
        ParityClass {
            x_parity: (self.x % 2) as u8,
            y_parity: (self.y % 2) as u8,
        }
    }
}

/// `(x mod 2, y mod 2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParityClass {
    pub x_parity: u8,
    pub y_parity: u8,
}

pub fn parity_classes(solutions: &[Solution]) -> BTreeSet<ParityClass> {
    solutions.iter().map(Solution::parity).collect()
}

pub(crate) fn sort_solutions(solutions: &mut [Solution]) {
    solutions.sort_by_key(|s| (s.z, s.x, s.y));
}

/// All solutions with `1 <= z <= floor((ab - 1) / 2)`, sorted by `(z, x)`.
///
/// Verdicts are left unset; see [`crate::verify_instance`].
pub fn solve(instance: &EquationInstance, config: &SieveConfig) -> Result<SolveReport, SolveError> {
    let started = Instant::now();
    let z_bound = z_bound_new(instance.a(), instance.b()).expect("validated a, b >= 2");
    let le_z_bound = z_bound_le(instance.a(), instance.b()).expect("validated a, b >= 2");
    let omega_c = factorize(instance.c())?.omega();
    let z_max = z_bound
        .to_u32()
        .ok_or_else(|| SolveError::BoundTooLarge(z_bound.clone()))? as u64;

    // Two odd bases sum to an even number, never an odd power.
    let (solutions, prefilter_stats) = if instance.a().is_odd() && instance.b().is_odd() {
        (Vec::new(), PrefilterStats::default())
    } else {
        search(instance, z_max, config)
    };

    Ok(SolveReport {
        instance: instance.clone(),
        parity_classes: parity_classes(&solutions),
        solutions,
        omega_c,
        count_bound: BigUint::one() << omega_c,
        z_bound,
        le_z_bound,
        verdicts: Verdicts::default(),
        prefilter_stats,
        elapsed: started.elapsed(),
    })
}

fn search(
    instance: &EquationInstance,
    z_max: u64,
    config: &SieveConfig,
) -> (Vec<Solution>, PrefilterStats) {
    if z_max == 0 {
        return (Vec::new(), PrefilterStats::default());
    }
    let (a, b, c) = (instance.a(), instance.b(), instance.c());
    let filter = Prefilter::new(instance, config);

    // a^0 ..= a^(x_top + 1), where a^(x_top + 1) >= c^z_max bounds every scan.
    let x_top = exponent_ranges_for_power(instance, &c.pow(z_max as u32)).0;
    let mut a_pows = Vec::with_capacity(x_top as usize + 2);
    let mut p = BigUint::one();
    for _ in 0..x_top + 2 {
        let next = &p * a;
        a_pows.push(p);
        p = next;
    }

    let chunks: Vec<(u64, u64)> = (1..=z_max)
        .step_by(Z_CHUNK as usize)
        .map(|lo| (lo, (lo + Z_CHUNK - 1).min(z_max)))
        .collect();

    let parts: Vec<(Vec<Solution>, PrefilterStats)> = chunks
        .par_iter()
        .map(|&(lo, hi)| {
            let mut found = Vec::new();
            let mut stats = PrefilterStats::default();
            let mut cz = c.pow(lo as u32);
            let mut c_res = filter.c_residues(lo);
            let mut x_max = ilog_bound(a, &cz).expect("c^z >= 3");
            for z in lo..=hi {
                while a_pows[x_max as usize + 1] < cz {
                    x_max += 1;
                }
                let mut a_res = filter.a_base();
                for x in 1..=x_max {
                    stats.candidates += 1;
                    if !filter.is_empty() {
                        if !filter.admits(&c_res, &a_res) {
                            stats.pruned += 1;
                            filter.step_a(&mut a_res);
                            continue;
                        }
                        filter.step_a(&mut a_res);
                    }
                    stats.exact_checks += 1;
                    let rest = &cz - &a_pows[x as usize];
                    if let Some(y) = power_of(&rest, b) {
                        found.push(Solution { x, y, z });
                    }
                }
                cz *= c;
                filter.step_c(&mut c_res);
            }
            (found, stats)
        })
        .collect();

    let stats = parts.iter().map(|(_, s)| *s).sum();
    let mut solutions: Vec<Solution> = parts.into_iter().flat_map(|(f, _)| f).collect();
    sort_solutions(&mut solutions);
    (solutions, stats)
}
