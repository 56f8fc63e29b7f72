//! Randomized check of the proven inequalities, with the conjectural bounds
//! tabulated alongside.

use rayon::prelude::*;
use serde::Serialize;

use crate::decomp::irreducible_decomposition;
use crate::error::Result;
use crate::ideal::MonomialIdeal;
use crate::invariants::bounds_report;
use crate::parse::format_ideal;
use crate::poly::check_np_sp_ip_chain;
use crate::random::{random_suite, IdealShape};
use crate::scalar::from_u64;
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ScanConfig {
    pub count: usize,
    pub seed: u64,
    pub shape: IdealShape,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    /// `NP(I) ⊆ SP(I) ⊆ IP(I)`.
    ContainmentChain,
    /// `α ≥ α̂ ≥ α̃`.
    Ordering,
    /// `α̃ ≥ α / e`.
    Skoda,
    /// `α̃(I) ≥ α̃(𝔪ₙ^α)`.
    MaxIdealLeast,
    /// `α̃ ≥ ⌊(α + e − 1)/e⌋` when `e = n`.
    WeakChudnovskyFullHeight,
    /// `α̂ = α̃` when the component radicals are pairwise incomparable.
    IncomparableRadicalsEquality,
    /// `α̂ ≥ (α + e − 1)/e` for square-free `I`, a known theorem.
    ChudnovskySquarefree,
    /// `α̂ ≥ (α + e − 1)/e`.
    Chudnovsky,
    /// `α̃ ≥ (α + e − 1)/e`.
    NaiveChudnovsky,
    /// `α̃ ≥ ⌊(α + e − 1)/e⌋` when `e < n`.
    WeakChudnovskyPartialHeight,
}

impl Property {
    pub const ALL: [Property; 10] = [
        Property::ContainmentChain,
        Property::Ordering,
        Property::Skoda,
        Property::MaxIdealLeast,
        Property::WeakChudnovskyFullHeight,
        Property::IncomparableRadicalsEquality,
        Property::ChudnovskySquarefree,
        Property::Chudnovsky,
        Property::NaiveChudnovsky,
        Property::WeakChudnovskyPartialHeight,
    ];

    /// Failures of asserted properties make a scan fail; the rest are only
    /// tallied.
    pub fn is_asserted(self) -> bool {
        !matches!(
            self,
            Property::Chudnovsky
                | Property::NaiveChudnovsky
                | Property::WeakChudnovskyPartialHeight
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyTally {
    pub property: Property,
    pub asserted: bool,
    pub checked: usize,
    pub held: usize,
    /// Violating ideals in the input grammar, in suite order.
    pub violations: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanFailure {
    pub ideal: String,
    pub error: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub seed: u64,
    pub shape: IdealShape,
    pub count: usize,
    pub properties: Vec<PropertyTally>,
    pub errors: Vec<ScanFailure>,
    /// No asserted property failed and every ideal was evaluated.
    pub ok: bool,
}

impl ScanReport {
    pub fn tally(&self, property: Property) -> &PropertyTally {
        self.properties
            .iter()
            .find(|t| t.property == property)
            .expect("every property is tallied")
    }
}

/// Per-property verdicts for one ideal; `None` where a property does not apply.
pub type Verdicts = Vec<(Property, Option<bool>)>;

pub fn evaluate(ideal: &MonomialIdeal) -> Result<Verdicts> {
    let report = bounds_report::<Rational>(ideal)?;
    let chain = check_np_sp_ip_chain::<Rational>(ideal)?;
    let decomp = irreducible_decomposition(ideal)?;
    let radicals: Vec<_> = decomp.components().iter().map(|c| c.radical()).collect();
    let incomparable = radicals.iter().enumerate().all(|(i, p)| {
        radicals
            .iter()
            .enumerate()
            .all(|(j, q)| i == j || !p.is_subset(q))
    });

    let full_height = report.big_height == report.nvars;
    let floor = from_u64::<Rational>(report.floor_bound);
    let alpha = from_u64::<Rational>(report.alpha);
    Ok(Property::ALL
        .iter()
        .map(|&p| {
            let verdict = match p {
                Property::ContainmentChain => Some(chain.np_in_sp && chain.sp_in_ip),
                Property::Ordering => Some(
                    alpha >= report.waldschmidt && report.waldschmidt >= report.naive_waldschmidt,
                ),
                Property::Skoda => Some(report.naive_waldschmidt >= report.skoda_bound),
                Property::MaxIdealLeast => Some(report.naive_waldschmidt >= report.max_ideal_bound),
                Property::WeakChudnovskyFullHeight => {
                    full_height.then(|| report.naive_waldschmidt >= floor)
                }
                Property::IncomparableRadicalsEquality => {
                    incomparable.then(|| report.waldschmidt == report.naive_waldschmidt)
                }
                Property::ChudnovskySquarefree => {
                    ideal.is_squarefree().then_some(report.chudnovsky_holds)
                }
                Property::Chudnovsky => Some(report.chudnovsky_holds),
                Property::NaiveChudnovsky => {
                    Some(report.naive_waldschmidt >= report.chudnovsky_expr)
                }
                Property::WeakChudnovskyPartialHeight => {
                    (!full_height).then(|| report.naive_waldschmidt >= floor)
                }
            };
            (p, verdict)
        })
        .collect())
}

/// Evaluates each ideal on the rayon pool and merges in input order.
pub fn scan_ideals(ideals: &[MonomialIdeal], config: ScanConfig) -> ScanReport {
    let results: Vec<Result<Verdicts>> = ideals.par_iter().map(evaluate).collect();

    let mut properties: Vec<PropertyTally> = Property::ALL
        .iter()
        .map(|&p| PropertyTally {
            property: p,
            asserted: p.is_asserted(),
            checked: 0,
            held: 0,
            violations: Vec::new(),
        })
        .collect();
    let mut errors = Vec::new();
    for (ideal, result) in ideals.iter().zip(results) {
        match result {
            Ok(verdicts) => {
                for (tally, (_, verdict)) in properties.iter_mut().zip(verdicts) {
                    if let Some(held) = verdict {
                        tally.checked += 1;
                        if held {
                            tally.held += 1;
                        } else {
                            tally.violations.push(format_ideal(ideal));
                        }
                    }
                }
            }
            Err(e) => errors.push(ScanFailure {
                ideal: format_ideal(ideal),
                error: e.to_string(),
            }),
        }
    }
    let ok = errors.is_empty()
        && properties
            .iter()
            .all(|t| !t.asserted || t.violations.is_empty());
    ScanReport {
        seed: config.seed,
        shape: config.shape,
        count: config.count,
        properties,
        errors,
        ok,
    }
}

pub fn scan(config: ScanConfig) -> ScanReport {
    let ideals = random_suite(config.seed, config.count, config.shape);
    scan_ideals(&ideals, config)
}
