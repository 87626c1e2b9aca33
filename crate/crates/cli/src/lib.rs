//! Command-line surface for `expdio`: `solve`, `verify`, `scan` and `bounds`.

mod app;
pub mod record;
pub mod render;

pub use app::{run, Outcome, EXIT_INTERNAL, EXIT_OK, EXIT_REJECTED, EXIT_USAGE, MODULI_ENV};
