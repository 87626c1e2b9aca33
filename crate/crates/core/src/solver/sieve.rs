use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::ToPrimitive;
use thiserror::Error;

use super::EquationInstance;
use crate::ntheory::mult_order;

/// Moduli tried when nothing else is configured.
pub const DEFAULT_MODULI: [u64; 8] = [8, 3, 5, 7, 11, 13, 16, 9];
/// Longest moduli list accepted.
pub const MAX_MODULI: usize = 64;
/// Largest single modulus accepted; residue tables are dense.
pub const MAX_MODULUS: u64 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SieveConfigError {
    #[error("sieve modulus must be at least 2, got {0}")]
    ModulusTooSmall(u64),
    #[error("sieve modulus {0} exceeds the limit {MAX_MODULUS}")]
    ModulusTooLarge(u64),
    #[error("at most {MAX_MODULI} sieve moduli are allowed, got {0}")]
    TooMany(usize),
    #[error("cannot parse sieve modulus {0:?}")]
    Parse(String),
}

/// Moduli for the residue prefilter. Moduli sharing a factor with `a`, `b`
/// or `c` are skipped per instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SieveConfig {
    moduli: Vec<u64>,
}

impl Default for SieveConfig {
    fn default() -> Self {
        Self {
            moduli: DEFAULT_MODULI.to_vec(),
        }
    }
}

impl SieveConfig {
    pub fn new(moduli: Vec<u64>) -> Result<Self, SieveConfigError> {
        if moduli.len() > MAX_MODULI {
            return Err(SieveConfigError::TooMany(moduli.len()));
        }
        for &m in &moduli {
            if m < 2 {
                return Err(SieveConfigError::ModulusTooSmall(m));
            }
            if m > MAX_MODULUS {
                return Err(SieveConfigError::ModulusTooLarge(m));
            }
        }
        Ok(Self { moduli })
    }

    /// No prefiltering: every candidate goes to the exact test.
    pub fn none() -> Self {
        Self { moduli: Vec::new() }
    }

    /// Comma-separated list, e.g. `"8,3,5"`. Blank input means no moduli.
    pub fn parse(list: &str) -> Result<Self, SieveConfigError> {
        let moduli = list
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse()
                    .map_err(|_| SieveConfigError::Parse(s.to_string()))
            })
            .collect::<Result<Vec<u64>, _>>()?;
        Self::new(moduli)
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    /// The configured moduli coprime to `a`, `b` and `c`, duplicates dropped.
    pub fn effective_moduli(&self, instance: &EquationInstance) -> Vec<u64> {
        let mut out: Vec<u64> = Vec::new();
        for &m in &self.moduli {
            let coprime = [instance.a(), instance.b(), instance.c()]
                .iter()
                .all(|v| residue(v, m).gcd(&m) == 1);
            if coprime && !out.contains(&m) {
                out.push(m);
            }
        }
        out
    }
}

pub(crate) fn residue(v: &BigUint, m: u64) -> u64 {
    (v % m).to_u64().expect("residue below a u64 modulus")
}

#[derive(Debug, Clone)]
struct ModSieve {
    m: u64,
    a: u64,
    c: u64,
    /// `b_powers[r]` iff `b^y = r (mod m)` for some `y >= 1`.
    b_powers: Vec<bool>,
}

/// Per-instance residue tables.
#[derive(Debug, Clone)]
pub(crate) struct Prefilter {
    sieves: Vec<ModSieve>,
}

impl Prefilter {
    pub(crate) fn new(instance: &EquationInstance, config: &SieveConfig) -> Self {
        let sieves = config
            .effective_moduli(instance)
            .into_iter()
            .map(|m| {
                let b = residue(instance.b(), m);
                let order = mult_order(&BigInt::from(b), m).expect("modulus is coprime to b");
                let mut b_powers = vec![false; m as usize];
                let mut r = 1u64;
                for _ in 0..order {
                    r = mul(r, b, m);
                    b_powers[r as usize] = true;
                }
                ModSieve {
                    m,
                    a: residue(instance.a(), m),
                    c: residue(instance.c(), m),
                    b_powers,
                }
            })
            .collect();
        Self { sieves }
    }

    pub(crate) fn is_empty(&self) -> bool {
        self.sieves.is_empty()
    }

    /// `c^z mod m` for every modulus.
    pub(crate) fn c_residues(&self, z: u64) -> Vec<u64> {
        self.sieves.iter().map(|s| pow(s.c, z, s.m)).collect()
    }

    /// Residues of `a^1`.
    pub(crate) fn a_base(&self) -> Vec<u64> {
        self.sieves.iter().map(|s| s.a).collect()
    }

    pub(crate) fn step_c(&self, residues: &mut [u64]) {
        for (r, s) in residues.iter_mut().zip(&self.sieves) {
            *r = mul(*r, s.c, s.m);
        }
    }

    pub(crate) fn step_a(&self, residues: &mut [u64]) {
        for (r, s) in residues.iter_mut().zip(&self.sieves) {
            *r = mul(*r, s.a, s.m);
        }
    }

    /// False only when `c^z - a^x` cannot be a positive power of `b`.
    pub(crate) fn admits(&self, c_res: &[u64], a_res: &[u64]) -> bool {
        self.sieves
            .iter()
            .zip(c_res.iter().zip(a_res))
            .all(|(s, (&cz, &ax))| s.b_powers[((cz + s.m - ax) % s.m) as usize])
    }
}

#[inline]
fn mul(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul(acc, base, m);
        }
        base = mul(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Whether `(z, x)` survives the residue prefilter: false means
/// `c^z - a^x` is provably not a power of `b`.
pub fn residue_prefilter(
    instance: &EquationInstance,
    z: u64,
    x: u64,
    config: &SieveConfig,
) -> bool {
    let filter = Prefilter::new(instance, config);
    let c_res = filter.c_residues(z);
    let a_res: Vec<u64> = filter.sieves.iter().map(|s| pow(s.a, x, s.m)).collect();
    filter.admits(&c_res, &a_res)
}
