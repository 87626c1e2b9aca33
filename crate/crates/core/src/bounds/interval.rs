//! Fixed-point interval evaluation of `2ab * ln(2e * ab) / pi`.
//!
//! Values are integers scaled by `2^prec` carrying an absolute error bound in
//! units of the last place. Every series truncation and every floor division
//! is charged to that bound, so the final interval always contains the true
//! value.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone)]
struct Approx {
    mid: BigInt,
    err: BigUint,
}

/// `atanh(u/v)` (or `atan(u/v)` when `alternating`), for `0 <= u/v <= 1/3`.
fn arctan_series(u: &BigUint, v: &BigUint, prec: u64, alternating: bool) -> Approx {
    let u2 = u * u;
    let v2 = v * v;
    let mut power = (BigUint::one() << prec) * u / v;
    let mut sum = BigInt::zero();
    let mut k = 0u64;
    while !power.is_zero() {
        let term = BigInt::from(&power / (2 * k + 1));
        if alternating && k % 2 == 1 {
            sum -= term;
        } else {
            sum += term;
        }
        power = power * &u2 / &v2;
        k += 1;
    }
    // power_k carries at most k+1 ulps of floor error and each term adds one
    // more; the tail after the last nonzero power is below (k+2) * 9/8.
    Approx {
        mid: sum,
        err: BigUint::from(4 * (k + 2)),
    }
}

fn ln2(prec: u64) -> Approx {
    let a = arctan_series(&BigUint::one(), &BigUint::from(3u32), prec, false);
    Approx {
        mid: a.mid * 2,
        err: a.err * 2u32,
    }
}

fn pi(prec: u64) -> Approx {
    let one = BigUint::one();
    let a = arctan_series(&one, &BigUint::from(5u32), prec, true);
    let b = arctan_series(&one, &BigUint::from(239u32), prec, true);
    Approx {
        mid: a.mid * 16 - b.mid * 4,
        err: a.err * 16u32 + b.err * 4u32,
    }
}

/// `ln(n)` for `n >= 1`, via `n = 2^k * f` with `f` in `[1, 2)`.
fn ln(n: &BigUint, prec: u64) -> Approx {
    let k = n.bits() - 1;
    let pow2 = BigUint::one() << k;
    let frac = arctan_series(&(n - &pow2), &(n + &pow2), prec, false);
    let l2 = ln2(prec);
    Approx {
        mid: l2.mid * BigInt::from(k) + frac.mid * 2,
        err: l2.err * k + frac.err * 2u32,
    }
}

fn div_ceil(num: &BigInt, den: &BigInt) -> BigInt {
    num.div_ceil(den)
}

/// Bracket `2ab * (1 + ln(2ab)) / pi`, scaled by `2^prec`.
fn le_interval(ab: &BigUint, prec: u64) -> (BigInt, BigInt) {
    let two_ab = ab * 2u32;
    let log = ln(&two_ab, prec);
    let scale = BigInt::one() << prec;
    let factor = BigInt::from(two_ab);
    let numer_mid = (&scale + &log.mid) * &factor;
    let numer_err = BigInt::from(log.err) * &factor;
    let p = pi(prec);
    let p_err = BigInt::from(p.err);
    let lo = ((&numer_mid - &numer_err) * &scale).div_floor(&(&p.mid + &p_err));
    let hi = div_ceil(&((&numer_mid + &numer_err) * &scale), &(&p.mid - &p_err));
    (lo, hi)
}

/// Largest integer strictly below `2ab * ln(2e * ab) / pi`, doubling the
/// working precision until the floor is unambiguous.
pub(crate) fn le_floor(ab: &BigUint) -> BigUint {
    let mut prec = 64u64 + 2 * ab.bits();
    loop {
        let (lo, hi) = le_interval(ab, prec);
        debug_assert!(lo.is_positive());
        let k = &lo >> prec;
        let k_scaled = &k << prec;
        let next_scaled = (&k + 1) << prec;
        if lo > k_scaled && hi < next_scaled {
            return k.to_biguint().expect("bound is positive");
        }
        // The value is transcendental, so this only loops while the
        // interval straddles an integer.
        prec *= 2;
        assert!(
            prec <= 1 << 20,
            "precision runaway evaluating the Le bound for ab = {ab}"
        );
    }
}
