//! Complete enumeration of the positive solutions of `a^x + b^y = c^z` for
//! pairwise coprime `a, b >= 2` and odd `c >= 3`.
//!
//! Every solution satisfies `z < ab/2`, so searching `z` up to that bound is
//! exhaustive. The [`verify`] module checks each solved instance against an
//! independent brute-force enumeration and against the structural claims
//! that accompany the bound: at most `2^omega(c)` solutions, occupying at
//! most two of the four `(x mod 2, y mod 2)` classes.
//!
//! ```
//! use expdio::{solve, EquationInstance, SieveConfig};
//!
//! let instance = EquationInstance::new(2u32, 3u32, 5u32).unwrap();
//! let report = solve(&instance, &SieveConfig::default()).unwrap();
//! let found: Vec<_> = report.solutions.iter().map(|s| (s.x, s.y, s.z)).collect();
//! assert_eq!(found, vec![(1, 1, 1), (4, 2, 2)]);
//! ```

pub mod bounds;
pub mod ntheory;
pub mod report;
pub mod solver;
pub mod verify;

pub use bounds::{exponent_ranges, z_bound_le, z_bound_new, BoundReport, BoundsError};
pub use ntheory::{factorize, Factorization, NtError};
pub use report::{PrefilterStats, SolveReport, Verdicts};
pub use solver::{
    parity_classes, residue_prefilter, solve, validate, EquationInstance, ParityClass, SieveConfig,
    Solution, SolveError, ValidationError,
};
pub use verify::{
    oracle_solve, scan, verify_instance, OracleMode, ScanOutcome, ScanRanges, ScanSummary,
};
