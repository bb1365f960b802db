//! Deterministic interval fixtures and seeded random instances.
//!
//! Randomness comes from ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded with
//! `seed_from_u64`, and uniform integers from `rand`'s `gen_range`. The same
//! spec therefore yields the same representation on every platform.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::interval::IntervalRepresentation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GeneratorKind {
    RandomIntervals,
    Complete,
    Path,
    Star,
    Figure1,
}

impl FromStr for GeneratorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "random-intervals" => Ok(GeneratorKind::RandomIntervals),
            "complete" => Ok(GeneratorKind::Complete),
            "path" => Ok(GeneratorKind::Path),
            "star" => Ok(GeneratorKind::Star),
            "figure1" => Ok(GeneratorKind::Figure1),
            other => Err(Error::InvalidSpec(format!("unknown kind `{other}`"))),
        }
    }
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GeneratorKind::RandomIntervals => "random-intervals",
            GeneratorKind::Complete => "complete",
            GeneratorKind::Path => "path",
            GeneratorKind::Star => "star",
            GeneratorKind::Figure1 => "figure1",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GeneratorSpec {
    pub kind: GeneratorKind,
    /// Vertex count; for `Star` the number of leaves.
    pub n: usize,
    pub seed: u64,
    /// Largest endpoint for `RandomIntervals` and `Complete`.
    pub max_coord: i64,
}

impl GeneratorSpec {
    pub fn new(kind: GeneratorKind, n: usize) -> GeneratorSpec {
        GeneratorSpec { kind, n, seed: 0, max_coord: 100 }
    }

    pub fn random(n: usize, seed: u64, max_coord: i64) -> GeneratorSpec {
        GeneratorSpec { kind: GeneratorKind::RandomIntervals, n, seed, max_coord }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 1 {
            return Err(Error::InvalidSpec("n must be at least 1".into()));
        }
        if self.max_coord < 2 {
            return Err(Error::InvalidSpec("max_coord must be at least 2".into()));
        }
        Ok(())
    }
}

/// The eight-vertex example representation used throughout the tests.
pub fn figure1() -> IntervalRepresentation {
    IntervalRepresentation::numbered(&[(31, 35), (31, 45), (36, 40), (36, 45), (42, 49), (41, 45), (47, 55), (51, 55)])
        .expect("valid fixture")
}

pub fn generate(spec: &GeneratorSpec) -> Result<IntervalRepresentation> {
    spec.validate()?;
    let n = spec.n as i64;
    let intervals: Vec<(i64, i64)> = match spec.kind {
        GeneratorKind::Figure1 => return Ok(figure1()),
        GeneratorKind::Complete => vec![(0, spec.max_coord); spec.n],
        GeneratorKind::Path => (0..n).map(|i| (i, i + 1)).collect(),
        GeneratorKind::Star => std::iter::once((0, 2 * n)).chain((0..n).map(|i| (2 * i, 2 * i + 1))).collect(),
        GeneratorKind::RandomIntervals => {
            let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
            (0..spec.n)
                .map(|_| {
                    let a = rng.gen_range(0..=spec.max_coord);
                    let b = rng.gen_range(0..=spec.max_coord);
                    (a.min(b), a.max(b))
                })
                .collect()
        }
    };
    IntervalRepresentation::numbered(&intervals)
}

/// Attempts allowed by [`generate_connected`] before giving up.
pub const CONNECTED_ATTEMPTS: usize = 10_000;

/// Like [`generate`], but redraws random instances until their intersection
/// graph is connected. The first attempt uses `spec.seed`; later attempts use
/// seeds drawn from a ChaCha8 stream keyed by it, so the result stays a pure
/// function of the spec.
pub fn generate_connected(spec: &GeneratorSpec) -> Result<IntervalRepresentation> {
    let mut reseed = ChaCha8Rng::seed_from_u64(spec.seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut current = *spec;
    for _ in 0..CONNECTED_ATTEMPTS {
        let rep = generate(&current)?;
        if is_connected(&rep) {
            return Ok(rep);
        }
        current.seed = reseed.gen();
    }
    Err(Error::InvalidSpec(format!("no connected instance within {CONNECTED_ATTEMPTS} attempts")))
}

/// Intervals form a connected graph iff, sorted by left end, each one starts
/// no later than the furthest right end seen so far.
fn is_connected(rep: &IntervalRepresentation) -> bool {
    let mut ivs = rep.intervals().to_vec();
    ivs.sort_by_key(|iv| iv.left);
    let mut reach = match ivs.first() {
        Some(iv) => iv.right,
        None => return false,
    };
    for iv in &ivs[1..] {
        if iv.left > reach {
            return false;
        }
        reach = reach.max(iv.right);
    }
    true
}
