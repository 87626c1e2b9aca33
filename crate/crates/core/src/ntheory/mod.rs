//! Exact arithmetic over arbitrary-precision nonnegative integers.
//!
//! Floating point appears here only to seed estimates; every integer that
//! leaves this module has been confirmed by exact big-integer comparison.

mod arith;
mod factor;
mod prime;

pub use arith::{floor_log, gcd, ilog_bound, jacobi, mult_order, power_of};
pub use factor::{factorize, factorize_with, FactorConfig, Factorization};
pub use prime::{is_prime, small_primes, MR_DETERMINISTIC_LIMIT};

use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NtError {
    #[error("jacobi symbol needs an odd positive modulus, got {0}")]
    InvalidJacobiModulus(BigUint),
    #[error("cannot factor zero")]
    ZeroInput,
    #[error("base must be at least 2, got {0}")]
    BaseTooSmall(BigUint),
    #[error("no exponent e >= 0 has base^e < {0}")]
    LimitTooSmall(BigUint),
    #[error("modulus must be at least 2, got {0}")]
    ModulusTooSmall(u64),
    #[error("{g} is not invertible modulo {m}")]
    NotCoprime { g: BigUint, m: u64 },
    #[error("could not split cofactor {cofactor} of {n} within the configured effort")]
    FactorizationExhausted { n: BigUint, cofactor: BigUint },
}
