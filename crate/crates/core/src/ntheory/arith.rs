use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::factor::factorize;
use super::prime::{gcd_u64, powmod};
use super::NtError;

pub fn gcd(m: &BigUint, n: &BigUint) -> BigUint {
    m.gcd(n)
}

fn low_bits(n: &BigUint) -> u32 {
    n.iter_u32_digits().next().unwrap_or(0)
}

/// Jacobi symbol `(a / n)` for odd positive `n`.
pub fn jacobi(a: &BigInt, n: &BigUint) -> Result<i8, NtError> {
    if n.is_zero() || n.is_even() {
        return Err(NtError::InvalidJacobiModulus(n.clone()));
    }
    let modulus = BigInt::from(n.clone());
    let mut a = a
        .mod_floor(&modulus)
        .to_biguint()
        .expect("mod_floor by a positive modulus is nonnegative");
    let mut n = n.clone();
    let mut sign = 1i8;
    while !a.is_zero() {
        let twos = a.trailing_zeros().unwrap_or(0);
        a >>= twos;
        if twos % 2 == 1 && matches!(low_bits(&n) & 7, 3 | 5) {
            sign = -sign;
        }
        std::mem::swap(&mut a, &mut n);
        if low_bits(&a) & 3 == 3 && low_bits(&n) & 3 == 3 {
            sign = -sign;
        }
        a %= &n;
    }
    Ok(if n.is_one() { sign } else { 0 })
}

/// Rough `log2(n)` for `n >= 1` from the top 64 bits.
fn log2_approx(n: &BigUint) -> f64 {
    let bits = n.bits();
    if bits <= 64 {
        return (n.to_u64().unwrap_or(1) as f64).log2();
    }
    let shift = bits - 64;
    let top = (n >> shift).to_u64().unwrap_or(u64::MAX);
    (top as f64).log2() + shift as f64
}

/// Largest `e` with `base^e <= n`, together with `base^e`. Requires
/// `base >= 2` and `n >= 1`.
fn floor_log_with_power(base: &BigUint, n: &BigUint) -> (u64, BigUint) {
    debug_assert!(*base >= BigUint::from(2u32) && !n.is_zero());
    let estimate = (log2_approx(n) / log2_approx(base)).floor();
    let mut e = if estimate.is_finite() && estimate > 0.0 {
        estimate as u64
    } else {
        0
    };
    let mut power = base.pow(e as u32);
    while &power > n {
        power /= base;
        e -= 1;
    }
    loop {
        let next = &power * base;
        if &next > n {
            break;
        }
        power = next;
        e += 1;
    }
    (e, power)
}

/// Largest `e` with `base^e <= n`. Requires `base >= 2` and `n >= 1`.
pub fn floor_log(base: &BigUint, n: &BigUint) -> Result<u64, NtError> {
    if *base < BigUint::from(2u32) {
        return Err(NtError::BaseTooSmall(base.clone()));
    }
    if n.is_zero() {
        return Err(NtError::LimitTooSmall(n.clone()));
    }
    Ok(floor_log_with_power(base, n).0)
}

/// Largest `e >= 0` with `base^e < limit`.
///
/// `limit = 1` has no such exponent and is reported as an error.
pub fn ilog_bound(base: &BigUint, limit: &BigUint) -> Result<u64, NtError> {
    if *base < BigUint::from(2u32) {
        return Err(NtError::BaseTooSmall(base.clone()));
    }
    if *limit < BigUint::from(2u32) {
        return Err(NtError::LimitTooSmall(limit.clone()));
    }
    Ok(floor_log_with_power(base, &(limit - 1u32)).0)
}

/// The exponent `y >= 1` with `b^y = m`, if there is one.
pub fn power_of(m: &BigUint, b: &BigUint) -> Option<u64> {
    if *b < BigUint::from(2u32) || m < b {
        return None;
    }
    if m == b {
        return Some(1);
    }
    if !(m % b).is_zero() {
        return None;
    }
    let (e, power) = floor_log_with_power(b, m);
    (&power == m).then_some(e)
}

/// Multiplicative order of `g` modulo `m`.
pub fn mult_order(g: &BigInt, m: u64) -> Result<u64, NtError> {
    if m < 2 {
        return Err(NtError::ModulusTooSmall(m));
    }
    let residue = g
        .mod_floor(&BigInt::from(m))
        .to_u64()
        .expect("residue is below m");
    if gcd_u64(residue, m) != 1 {
        return Err(NtError::NotCoprime {
            g: BigUint::from(residue),
            m,
        });
    }
    let phi = factorize(&BigUint::from(m))?
        .euler_phi()
        .to_u64()
        .expect("phi(m) <= m");
    let mut order = phi;
    for (p, _) in factorize(&BigUint::from(phi))?.factors() {
        let p = p.to_u64().expect("divides phi");
        while order % p == 0 && powmod(residue, order / p, m) == 1 {
            order /= p;
        }
    }
    Ok(order)
}
