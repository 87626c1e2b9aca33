//! Shared fixtures for the criterion benches.

use expdio::EquationInstance;

/// Instances with nontrivial search ranges, smallest first.
pub fn fixture_instances() -> Vec<EquationInstance> {
    [
        (2u32, 3u32, 5u32),
        (2, 7, 3),
        (3, 10, 13),
        (12, 11, 35),
        (20, 19, 49),
    ]
    .into_iter()
    .map(|(a, b, c)| EquationInstance::new(a, b, c).expect("fixture is valid"))
    .collect()
}
