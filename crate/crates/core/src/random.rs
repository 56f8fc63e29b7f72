//! Seeded random monomial ideals for property suites and scans.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Error;
use crate::ideal::{Exponent, ExponentVector, MonomialIdeal};

pub const MIN_VARS: usize = 2;
pub const MAX_VARS: usize = 4;
pub const MIN_GENERATORS: usize = 2;
pub const MAX_GENERATORS: usize = 6;
pub const MAX_ENTRY: Exponent = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum IdealShape {
    /// Entries in `0..=5`.
    Any,
    /// Entries in `0..=1`.
    Squarefree,
    /// Entries in `0..=5`, plus a pure power `xᵢ^a` (`1 ≤ a ≤ 5`) of every variable.
    Mprimary,
}

impl fmt::Display for IdealShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IdealShape::Any => "any",
            IdealShape::Squarefree => "squarefree",
            IdealShape::Mprimary => "mprimary",
        })
    }
}

impl FromStr for IdealShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "any" => Ok(IdealShape::Any),
            "squarefree" => Ok(IdealShape::Squarefree),
            "mprimary" => Ok(IdealShape::Mprimary),
            other => Err(Error::InvalidArgument(format!(
                "unknown ideal shape `{other}`"
            ))),
        }
    }
}

/// A proper nonzero ideal in `nvars` variables. Every sampled generator has
/// a positive entry.
pub fn random_ideal<R: Rng + ?Sized>(
    rng: &mut R,
    nvars: usize,
    shape: IdealShape,
) -> MonomialIdeal {
    let max_entry = match shape {
        IdealShape::Squarefree => 1,
        _ => MAX_ENTRY,
    };
    let count = rng.gen_range(MIN_GENERATORS..=MAX_GENERATORS);
    let mut gens = Vec::with_capacity(count + nvars);
    while gens.len() < count {
        let v: Vec<Exponent> = (0..nvars).map(|_| rng.gen_range(0..=max_entry)).collect();
        if v.iter().any(|&e| e > 0) {
            gens.push(ExponentVector::new(v));
        }
    }
    if shape == IdealShape::Mprimary {
        for i in 0..nvars {
            gens.push(ExponentVector::pure_power(
                nvars,
                i,
                rng.gen_range(1..=MAX_ENTRY),
            ));
        }
    }
    MonomialIdeal::new(nvars, gens).expect("sampled generators have the right length")
}

/// `count` ideals with `nvars` uniform in `2..=4`, reproducible from `seed`.
pub fn random_suite(seed: u64, count: usize, shape: IdealShape) -> Vec<MonomialIdeal> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(MIN_VARS..=MAX_VARS);
            random_ideal(&mut rng, n, shape)
        })
        .collect()
}
