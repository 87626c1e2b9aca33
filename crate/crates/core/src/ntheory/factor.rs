use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::prime::{gcd_u64, is_prime, is_prime_u64, mulmod, small_primes, SIEVE_LIMIT};
use super::NtError;

/// Effort limits for the Pollard-Brent stage.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FactorConfig {
    /// Polynomial constants `x^2 + k` tried before giving up on a cofactor.
    pub rho_attempts: u64,
    /// Iteration budget per polynomial.
    pub rho_iterations: u64,
}

impl Default for FactorConfig {
    fn default() -> Self {
        Self {
            rho_attempts: 64,
            rho_iterations: 1 << 24,
        }
    }
}

/// Prime factorization of a positive integer, primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    n: BigUint,
    factors: Vec<(BigUint, u32)>,
}

impl Factorization {
    pub fn n(&self) -> &BigUint {
        &self.n
    }

    pub fn factors(&self) -> &[(BigUint, u32)] {
        &self.factors
    }

    /// Number of distinct prime factors.
    pub fn omega(&self) -> usize {
        self.factors.len()
    }

    pub fn product(&self) -> BigUint {
        self.factors
            .iter()
            .fold(BigUint::one(), |acc, (p, e)| acc * p.pow(*e))
    }

    /// Order of the multiplicative group modulo `n`.
    pub fn euler_phi(&self) -> BigUint {
        self.factors.iter().fold(BigUint::one(), |acc, (p, e)| {
            acc * p.pow(e - 1) * (p - 1u32)
        })
    }
}

pub fn factorize(n: &BigUint) -> Result<Factorization, NtError> {
    factorize_with(n, &FactorConfig::default())
}

/// Trial division by the primes below one million, then Pollard rho with
/// Brent's cycle detection on whatever composite cofactor remains.
pub fn factorize_with(n: &BigUint, config: &FactorConfig) -> Result<Factorization, NtError> {
    if n.is_zero() {
        return Err(NtError::ZeroInput);
    }
    let mut found: BTreeMap<BigUint, u32> = BTreeMap::new();
    let rest = trial_divide(n, &mut found);

    let mut pending = Vec::new();
    if !rest.is_one() {
        let limit_sq = BigUint::from(SIEVE_LIMIT as u64 * SIEVE_LIMIT as u64);
        if rest < limit_sq {
            *found.entry(rest).or_default() += 1;
        } else {
            pending.push(rest);
        }
    }

    while let Some(m) = pending.pop() {
        if is_prime(&m) {
            *found.entry(m).or_default() += 1;
            continue;
        }
        let d = split(&m, config).ok_or_else(|| NtError::FactorizationExhausted {
            n: n.clone(),
            cofactor: m.clone(),
        })?;
        let e = &m / &d;
        pending.push(d);
        pending.push(e);
    }

    Ok(Factorization {
        n: n.clone(),
        factors: found.into_iter().collect(),
    })
}

fn trial_divide(n: &BigUint, found: &mut BTreeMap<BigUint, u32>) -> BigUint {
    let primes = small_primes();
    let mut rest = n.clone();
    for (idx, &p) in primes.iter().enumerate() {
        if let Some(small) = rest.to_u64() {
            return BigUint::from(trial_divide_u64(small, &primes[idx..], found));
        }
        // rest > u64::MAX > p^2 here, so no early exit is possible yet.
        let mut k = 0;
        loop {
            let (q, r) = rest.div_rem(&BigUint::from(p));
            if !r.is_zero() {
                break;
            }
            rest = q;
            k += 1;
        }
        if k > 0 {
            found.insert(BigUint::from(p), k);
        }
    }
    rest
}

fn trial_divide_u64(mut rest: u64, primes: &[u32], found: &mut BTreeMap<BigUint, u32>) -> u64 {
    for &p in primes {
        let p = p as u64;
        if p * p > rest {
            break;
        }
        let mut k = 0;
        while rest.is_multiple_of(p) {
            rest /= p;
            k += 1;
        }
        if k > 0 {
            found.insert(BigUint::from(p), k);
        }
    }
    rest
}

/// Nontrivial divisor of a composite, or `None` once the budget is spent.
fn split(n: &BigUint, config: &FactorConfig) -> Option<BigUint> {
    if n.is_even() {
        return Some(BigUint::from(2u32));
    }
    if let Some(small) = n.to_u64() {
        debug_assert!(!is_prime_u64(small));
        return (1..=config.rho_attempts)
            .find_map(|k| brent_u64(small, k, config.rho_iterations))
            .map(BigUint::from);
    }
    (1..=config.rho_attempts).find_map(|k| brent_big(n, &BigUint::from(k), config.rho_iterations))
}

const BATCH: u64 = 128;

fn brent_u64(n: u64, k: u64, budget: u64) -> Option<u64> {
    let step = |v: u64| ((mulmod(v, v, n) as u128 + k as u128) % n as u128) as u64;
    let (mut y, mut r, mut q, mut g) = (2u64, 1u64, 1u64, 1u64);
    let (mut x, mut ys) = (0u64, 0u64);
    let mut spent = 0u64;
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = step(y);
        }
        let mut done = 0;
        while done < r && g == 1 {
            ys = y;
            for _ in 0..BATCH.min(r - done) {
                y = step(y);
                q = mulmod(q, x.abs_diff(y), n);
            }
            g = gcd_u64(q, n);
            done += BATCH;
        }
        spent += 2 * r;
        r *= 2;
        if spent > budget && g == 1 {
            return None;
        }
    }
    if g == n {
        loop {
            ys = step(ys);
            g = gcd_u64(x.abs_diff(ys), n);
            if g > 1 {
                break;
            }
        }
    }
    (g != n).then_some(g)
}

fn brent_big(n: &BigUint, k: &BigUint, budget: u64) -> Option<BigUint> {
    let step = |v: &BigUint| (v * v + k) % n;
    let dist = |a: &BigUint, b: &BigUint| if a > b { a - b } else { b - a };
    let mut y = BigUint::from(2u32);
    let mut x = y.clone();
    let mut ys = y.clone();
    let mut q = BigUint::one();
    let mut g = BigUint::one();
    let mut r = 1u64;
    let mut spent = 0u64;
    while g.is_one() {
        x = y.clone();
        for _ in 0..r {
            y = step(&y);
        }
        let mut done = 0;
        while done < r && g.is_one() {
            ys = y.clone();
            for _ in 0..BATCH.min(r - done) {
                y = step(&y);
                q = q * dist(&x, &y) % n;
            }
            g = q.gcd(n);
            done += BATCH;
        }
        spent += 2 * r;
        r *= 2;
        if spent > budget && g.is_one() {
            return None;
        }
    }
    if &g == n {
        loop {
            ys = step(&ys);
            g = dist(&x, &ys).gcd(n);
            if !g.is_one() {
                break;
            }
        }
    }
    (&g != n).then_some(g)
}
