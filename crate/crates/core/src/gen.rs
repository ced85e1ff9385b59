//! Seeded impartial-culture profiles.
//!
//! Each agent approves each candidate independently with probability `p`.
//! The random stream is ChaCha8 (`rand_chacha::ChaCha8Rng::seed_from_u64`),
//! whose output is fixed by its specification, and an approval is drawn as
//! `next_u64() < floor(p * 2^64)` so no float-to-distribution code from a
//! third-party crate sits between the seed and the profile. A ballot that
//! comes out empty is discarded and redrawn from the same stream.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::profile::{Ballot, Profile};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CultureSpec {
    /// Number of candidates, at least 1.
    pub m: usize,
    /// Number of agents, at least 1.
    pub n: usize,
    /// Approval probability in `(0, 1]`.
    pub p: f64,
    pub seed: u64,
}

impl CultureSpec {
    pub fn new(m: usize, n: usize, p: f64, seed: u64) -> Result<Self> {
        let spec = CultureSpec { m, n, p, seed };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.m == 0 {
            return Err(Error::Culture(
                "candidate count m must be at least 1".into(),
            ));
        }
        if self.n == 0 {
            return Err(Error::Culture("voter count n must be at least 1".into()));
        }
        if !(self.p > 0.0 && self.p <= 1.0) {
            return Err(Error::Culture(format!(
                "approval probability p must lie in (0, 1], got {}",
                self.p
            )));
        }
        Ok(())
    }
}

/// Names used by generated profiles: `c0`, `c1`, ...
pub fn candidate_names(m: usize) -> Vec<String> {
    (0..m).map(|i| format!("c{i}")).collect()
}

pub fn random_profile(spec: &CultureSpec) -> Result<Profile> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    // p * 2^64 saturates to u64::MAX for p = 1, which the explicit branch covers.
    let threshold = (spec.p * 18_446_744_073_709_551_616.0) as u64;
    let approve = |rng: &mut ChaCha8Rng| spec.p >= 1.0 || rng.next_u64() < threshold;

    let mut ballots = Vec::with_capacity(spec.n);
    let mut approved = Vec::new();
    while ballots.len() < spec.n {
        approved.clear();
        for c in 0..spec.m {
            if approve(&mut rng) {
                approved.push(c);
            }
        }
        if !approved.is_empty() {
            ballots.push(Ballot::new(approved.iter().copied())?);
        }
    }
    Profile::new(candidate_names(spec.m), ballots)
}
