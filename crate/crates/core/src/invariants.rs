//! Asymptotic initial degrees and the lower bounds relating them.
//!
//! The Waldschmidt constant `α̂` and the naive Waldschmidt constant `α̃` are
//! computed only as exact LP optima over the symbolic and irreducible
//! polyhedra. [`alpha_sequence`] exposes the finite ratios `α(I_m)/m`, which
//! decrease towards those optima from above.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::decomp::{
    big_height_of, irreducible_decomposition, IrreducibleComponent, IrreducibleDecomposition,
    PowerFamily,
};
use crate::error::{Error, Result};
use crate::ideal::{Exponent, MonomialIdeal};
use crate::lp::{solve_min, LpOutcome};
use crate::poly::{irreducible_hrep, serialize_scalar, sp_spec};
use crate::scalar::{from_u64, ExactScalar};

/// `α̂(I)`: minimum of `Σ yᵢ` over the symbolic polyhedron.
pub fn waldschmidt<S: ExactScalar>(ideal: &MonomialIdeal) -> Result<S> {
    ideal.require_proper("Waldschmidt constant")?;
    let sp = sp_spec(ideal)?;
    Ok(sp.minimize(&vec![S::one(); ideal.nvars()])?.0)
}

/// `α̃(I)`: minimum of `Σ yᵢ` over the irreducible polyhedron.
pub fn naive_waldschmidt<S: ExactScalar>(ideal: &MonomialIdeal) -> Result<S> {
    naive_waldschmidt_of(&irreducible_decomposition(ideal)?)
}

pub fn naive_waldschmidt_of<S: ExactScalar>(decomp: &IrreducibleDecomposition) -> Result<S> {
    let hrep = irreducible_hrep::<S>(decomp);
    match solve_min(&hrep.lp(vec![S::one(); decomp.nvars()])?)? {
        LpOutcome::Optimal(sol) => Ok(sol.value),
        other => Err(Error::Lp(format!(
            "irreducible polyhedron objective is {}",
            other.status()
        ))),
    }
}

/// `α(I_m)/m` for `m = 1..=max_m` in the chosen power family.
pub fn alpha_sequence<S: ExactScalar>(
    ideal: &MonomialIdeal,
    family: PowerFamily,
    max_m: u32,
) -> Result<Vec<S>> {
    if max_m == 0 {
        return Err(Error::InvalidArgument(
            "sequence length must be positive".into(),
        ));
    }
    ideal.require_proper("initial-degree sequence")?;
    (1..=max_m)
        .map(|m| {
            let power = family.power(ideal, m).map_err(|e| match e {
                Error::SizeLimit { op, size, cap } => Error::SizeLimit {
                    op: format!("{op} at m = {m}"),
                    size,
                    cap,
                },
                other => other,
            })?;
            Ok(from_u64::<S>(power.alpha()?) / from_u64::<S>(u64::from(m)))
        })
        .collect()
}

/// All ordered `n`-tuples of positive integers summing to `s`, in
/// lexicographic order. Empty when `s < n`.
pub fn compositions(n: usize, s: u32) -> Vec<Vec<Exponent>> {
    let mut out = Vec::new();
    if n == 0 || (s as usize) < n {
        return out;
    }
    let mut current = Vec::with_capacity(n);
    fn rec(n: usize, remaining: u32, current: &mut Vec<Exponent>, out: &mut Vec<Vec<Exponent>>) {
        let left = n - current.len();
        if left == 1 {
            current.push(remaining);
            out.push(current.clone());
            current.pop();
            return;
        }
        for first in 1..=remaining - (left as u32 - 1) {
            current.push(first);
            rec(n, remaining - first, current, out);
            current.pop();
        }
    }
    rec(n, s, &mut current, &mut out);
    out
}

/// `𝔪ₙᵈ = ⋂ (x₁^{a₁}, ..., xₙ^{aₙ})` over compositions of `d + n − 1`.
pub fn max_ideal_power_decomposition(n: usize, d: u32) -> Result<IrreducibleDecomposition> {
    if n == 0 || d == 0 {
        return Err(Error::InvalidArgument("need n ≥ 1 and d ≥ 1".into()));
    }
    let components = compositions(n, d + n as u32 - 1)
        .into_iter()
        .map(|a| {
            IrreducibleComponent::from_pairs(
                n,
                &a.iter()
                    .enumerate()
                    .map(|(i, &e)| (i, e))
                    .collect::<Vec<_>>(),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    IrreducibleDecomposition::from_components(components)
}

/// The composition of `n + d − 1` into `n` parts differing by at most one:
/// `k = (d − 1) mod n` parts equal to `a`, the other `n − k` equal to `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BalancedPartition {
    pub n: u64,
    pub d: u64,
    pub k: u64,
    pub a: u64,
    pub b: u64,
}

impl BalancedPartition {
    pub fn new(n: u64, d: u64) -> Result<Self> {
        if n == 0 || d == 0 {
            return Err(Error::InvalidArgument("need n ≥ 1 and d ≥ 1".into()));
        }
        let k = (d - 1) % n;
        let total = n + d - 1;
        Ok(Self {
            n,
            d,
            k,
            a: (total + (n - k)) / n,
            b: (total - k) / n,
        })
    }

    pub fn parts(&self) -> Vec<u64> {
        let mut v = vec![self.a; self.k as usize];
        v.extend(std::iter::repeat_n(self.b, (self.n - self.k) as usize));
        v
    }
}

fn binomial<S: ExactScalar>(n: u64, k: i64) -> S {
    if k < 0 || k as u64 > n {
        return S::zero();
    }
    let k = k as u64;
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    from_u64(acc.to_u64().expect("binomial fits in u64"))
}

/// `(n+d−1−k)(2n+d−1−k) / (n(2n+d−1−2k))` with `k = (d−1) mod n`.
pub fn max_ideal_closed_formula<S: ExactScalar>(n: u64, d: u64) -> Result<S> {
    let bp = BalancedPartition::new(n, d)?;
    let (n, d, k) = (bp.n, bp.d, bp.k);
    let num = from_u64::<S>(n + d - 1 - k) * from_u64::<S>(2 * n + d - 1 - k);
    let den = from_u64::<S>(n) * from_u64::<S>(2 * n + d - 1 - 2 * k);
    Ok(num / den)
}

/// `β = C(n,k) / (C(n−1,k−1)/a + C(n−1,k)/b)` from the balanced partition.
pub fn max_ideal_beta<S: ExactScalar>(n: u64, d: u64) -> Result<S> {
    let bp = BalancedPartition::new(n, d)?;
    let k = bp.k as i64;
    let denom = binomial::<S>(n - 1, k - 1) / from_u64::<S>(bp.a)
        + binomial::<S>(n - 1, k) / from_u64::<S>(bp.b);
    Ok(binomial::<S>(n, k) / denom)
}

/// Closed-form `α̃(𝔪ₙᵈ)`, checked against the balanced-partition form.
pub fn naive_waldschmidt_max_ideal_power<S: ExactScalar>(n: u64, d: u64) -> Result<S> {
    let closed = max_ideal_closed_formula::<S>(n, d)?;
    let beta = max_ideal_beta::<S>(n, d)?;
    if closed != beta {
        return Err(Error::InvalidArgument(format!(
            "closed formula {closed} disagrees with β = {beta} for n = {n}, d = {d}"
        )));
    }
    Ok(closed)
}

/// Minimum of `Σ 1/aᵢ` over compositions of `s` into `n` parts, attained by
/// the balanced composition.
pub fn min_reciprocal_sum<S: ExactScalar>(n: u64, s: u64) -> Result<S> {
    if n == 0 || s < n {
        return Err(Error::InvalidArgument(format!(
            "no composition of {s} into {n} positive parts"
        )));
    }
    let (q, r) = (s / n, s % n);
    Ok(from_u64::<S>(r) / from_u64::<S>(q + 1) + from_u64::<S>(n - r) / from_u64::<S>(q))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport<S: ExactScalar> {
    pub nvars: usize,
    pub alpha: u64,
    #[serde(serialize_with = "serialize_scalar")]
    pub waldschmidt: S,
    #[serde(serialize_with = "serialize_scalar")]
    pub naive_waldschmidt: S,
    pub big_height: usize,
    /// `α / e`.
    #[serde(serialize_with = "serialize_scalar")]
    pub skoda_bound: S,
    /// `(α + e − 1) / e`.
    #[serde(serialize_with = "serialize_scalar")]
    pub chudnovsky_expr: S,
    /// `⌊(α + e − 1) / e⌋`.
    pub floor_bound: u64,
    /// `α̃(𝔪ₙ^α)`, a lower bound for `α̃(I)`.
    #[serde(serialize_with = "serialize_scalar")]
    pub max_ideal_bound: S,
    pub chain_ok: bool,
    /// `α̂ ≥ (α + e − 1)/e`; conjectural in general.
    pub chudnovsky_holds: bool,
    /// `α̃ ≥ ⌊(α + e − 1)/e⌋`; proven when `e = n`.
    pub weak_chudnovsky_holds: bool,
}

pub fn bounds_report<S: ExactScalar>(ideal: &MonomialIdeal) -> Result<BoundsReport<S>> {
    ideal.require_proper("bounds report")?;
    let decomp = irreducible_decomposition(ideal)?;
    let n = ideal.nvars();
    let alpha = ideal.alpha()?;
    let e = big_height_of(&decomp);
    let waldschmidt = waldschmidt::<S>(ideal)?;
    let naive = naive_waldschmidt_of::<S>(&decomp)?;

    let alpha_s = from_u64::<S>(alpha);
    let e_s = from_u64::<S>(e as u64);
    let skoda_bound = alpha_s.clone() / e_s.clone();
    let chudnovsky_expr = (alpha_s.clone() + e_s.clone() - S::one()) / e_s;
    let floor_bound = alpha.div_ceil(e as u64);
    let max_ideal_bound = naive_waldschmidt_max_ideal_power::<S>(n as u64, alpha)?;
    let floor_s = from_u64::<S>(floor_bound);

    let mut chain_ok = alpha_s >= waldschmidt && waldschmidt >= naive && naive >= skoda_bound;
    if e == n {
        chain_ok &= naive >= max_ideal_bound && max_ideal_bound >= floor_s;
    }
    Ok(BoundsReport {
        nvars: n,
        alpha,
        chudnovsky_holds: waldschmidt >= chudnovsky_expr,
        weak_chudnovsky_holds: naive >= floor_s,
        waldschmidt,
        naive_waldschmidt: naive,
        big_height: e,
        skoda_bound,
        chudnovsky_expr,
        floor_bound,
        max_ideal_bound,
        chain_ok,
    })
}

/// For `I ⊆ I′`, whether `α̃(I) ≥ α̃(I′)`.
pub fn monotonicity_check(smaller: &MonomialIdeal, larger: &MonomialIdeal) -> Result<bool> {
    if !larger.contains_ideal(smaller)? {
        return Err(Error::InvalidArgument(
            "monotonicity needs the first ideal inside the second".into(),
        ));
    }
    let a = naive_waldschmidt::<crate::Rational>(smaller)?;
    let b = naive_waldschmidt::<crate::Rational>(larger)?;
    Ok(a >= b)
}

/// `⌊(d + n − 1)/n⌋`.
pub fn max_ideal_floor_bound(n: u64, d: u64) -> u64 {
    d.div_ceil(n)
}
