//! Shared fixtures for the criterion benchmarks.

use satvote_core::{random_profile, CultureSpec, Profile};

/// A seeded impartial-culture profile.
pub fn fixture(m: usize, n: usize, p: f64, seed: u64) -> Profile {
    let spec = CultureSpec::new(m, n, p, seed).expect("benchmark parameters are valid");
    random_profile(&spec).expect("generated profiles are valid")
}
