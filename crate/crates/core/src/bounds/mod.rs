//! Bounds on `z`: the sharp `z < ab/2` used by the solver, and Le's older
//! `z < 2ab * log(2e * ab) / pi` kept for comparison.
//!
//! `log` in Le's bound is the natural logarithm.

mod interval;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::ntheory::ilog_bound;
use crate::solver::EquationInstance;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("{name} must be at least 2, got {value}")]
    TooSmall { name: &'static str, value: BigUint },
}

fn check(name: &'static str, value: &BigUint) -> Result<(), BoundsError> {
    if *value < BigUint::from(2u32) {
        return Err(BoundsError::TooSmall {
            name,
            value: value.clone(),
        });
    }
    Ok(())
}

/// Largest `z` with `z < ab/2`, i.e. `floor((ab - 1) / 2)`.
pub fn z_bound_new(a: &BigUint, b: &BigUint) -> Result<BigUint, BoundsError> {
    check("a", a)?;
    check("b", b)?;
    Ok((a * b - 1u32) / 2u32)
}

/// Largest integer strictly below `2ab * ln(2e * ab) / pi`, certified.
pub fn z_bound_le(a: &BigUint, b: &BigUint) -> Result<BigUint, BoundsError> {
    check("a", a)?;
    check("b", b)?;
    Ok(interval::le_floor(&(a * b)))
}

/// Both bounds side by side.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub a: BigUint,
    pub b: BigUint,
    pub z_max_new: BigUint,
    pub z_max_le: BigUint,
    /// `z_max_le / z_max_new`.
    pub ratio: f64,
}

impl BoundReport {
    pub fn new(a: &BigUint, b: &BigUint) -> Result<Self, BoundsError> {
        let z_max_new = z_bound_new(a, b)?;
        let z_max_le = z_bound_le(a, b)?;
        let ratio = ratio(&z_max_le, &z_max_new);
        Ok(Self {
            a: a.clone(),
            b: b.clone(),
            z_max_new,
            z_max_le,
            ratio,
        })
    }
}

fn ratio(num: &BigUint, den: &BigUint) -> f64 {
    // Both are positive; f64 conversion saturates to inf only for absurd sizes.
    num.to_f64().unwrap_or(f64::INFINITY) / den.to_f64().unwrap_or(f64::INFINITY)
}

/// `n > sqrt(n) * ln(n)`, the comparison that converts the cited bound into
/// `z < ab/2`. Holds for every `n >= 2`.
pub fn dominates_sqrt_log(n: u64) -> bool {
    let n = n as f64;
    n > n.sqrt() * n.ln()
}

/// Largest `x` with `a^x < c^z` and largest `y` with `b^y < c^z`.
///
/// Either may be zero when the base already exceeds `c^z`.
pub fn exponent_ranges(instance: &EquationInstance, z: u64) -> (u64, u64) {
    let cz = instance.c().pow(z as u32);
    exponent_ranges_for_power(instance, &cz)
}

pub(crate) fn exponent_ranges_for_power(instance: &EquationInstance, cz: &BigUint) -> (u64, u64) {
    let x_max = ilog_bound(instance.a(), cz).expect("a >= 2 and c^z >= 3");
    let y_max = ilog_bound(instance.b(), cz).expect("b >= 2 and c^z >= 3");
    (x_max, y_max)
}
