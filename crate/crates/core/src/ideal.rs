//! Monomials and monomial ideals in canonical form.
//!
//! A monomial ideal is stored as its antichain of divisibility-minimal
//! exponent vectors, sorted in graded lexicographic order, so two ideals are
//! equal exactly when their structures are equal.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::error::{check_dim, Error, Result};
use crate::limits;

pub type Exponent = u32;

/// Exponent vector `a` of the monomial `x^a`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<Exponent>);

impl ExponentVector {
    pub fn new(exponents: Vec<Exponent>) -> Self {
        Self(exponents)
    }

    pub fn zero(nvars: usize) -> Self {
        Self(vec![0; nvars])
    }

    /// Standard basis vector `e_index` scaled by `exponent`.
    pub fn pure_power(nvars: usize, index: usize, exponent: Exponent) -> Self {
        let mut v = vec![0; nvars];
        v[index] = exponent;
        Self(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Exponent] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    /// `self` divides `other`, i.e. `self <= other` componentwise.
    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &ExponentVector) -> ExponentVector {
        Self(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    pub fn checked_add(&self, other: &ExponentVector) -> Result<ExponentVector> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::ExponentOverflow("product")))
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    pub fn into_inner(self) -> Vec<Exponent> {
        self.0
    }
}

impl std::ops::Index<usize> for ExponentVector {
    type Output = Exponent;

    fn index(&self, index: usize) -> &Exponent {
        &self.0[index]
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<Vec<Exponent>> for ExponentVector {
    fn from(v: Vec<Exponent>) -> Self {
        Self(v)
    }
}

/// Graded lexicographic order: ascending total degree, then the vector with
/// the larger first differing exponent first (`x1^2 < x1*x2 < x2^2`).
pub fn grlex(a: &ExponentVector, b: &ExponentVector) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| b.0.cmp(&a.0))
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        grlex(self, other)
    }
}

/// Divisibility-minimal antichain generating the same ideal, in grlex order.
pub fn minimalize(gens: Vec<ExponentVector>) -> Result<Vec<ExponentVector>> {
    if let Some(first) = gens.first() {
        let n = first.len();
        for g in &gens {
            check_dim(n, g.len())?;
        }
    }
    Ok(minimalize_unchecked(gens))
}

fn minimalize_unchecked(mut gens: Vec<ExponentVector>) -> Vec<ExponentVector> {
    gens.sort_unstable();
    gens.dedup();
    let mut kept: Vec<ExponentVector> = Vec::with_capacity(gens.len());
    // Sorted by degree, so only earlier vectors can divide later ones.
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

/// Buffer of candidate generators that is compacted whenever it outgrows
/// the generator cap; fails if the compacted set still exceeds it.
struct Accumulator {
    op: &'static str,
    buf: Vec<ExponentVector>,
    cap: usize,
}

impl Accumulator {
    fn new(op: &'static str) -> Self {
        Self {
            op,
            buf: Vec::new(),
            cap: limits::generator_cap(),
        }
    }

    fn push(&mut self, v: ExponentVector) -> Result<()> {
        self.buf.push(v);
        if self.buf.len() > 2 * self.cap {
            self.buf = minimalize_unchecked(std::mem::take(&mut self.buf));
            limits::check_size(self.op, self.buf.len())?;
        }
        Ok(())
    }

    fn finish(self) -> Result<Vec<ExponentVector>> {
        let out = minimalize_unchecked(self.buf);
        limits::check_size(self.op, out.len())?;
        Ok(out)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MonomialIdeal {
    nvars: usize,
    generators: Vec<ExponentVector>,
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: Vec<ExponentVector>) -> Result<Self> {
        if nvars == 0 {
            return Err(Error::InvalidArgument(
                "ideal needs at least one variable".into(),
            ));
        }
        for g in &gens {
            check_dim(nvars, g.len())?;
        }
        Ok(Self {
            nvars,
            generators: minimalize_unchecked(gens),
        })
    }

    /// Convenience constructor from raw exponent rows.
    pub fn from_exponents(nvars: usize, rows: &[&[Exponent]]) -> Result<Self> {
        Self::new(
            nvars,
            rows.iter()
                .map(|r| ExponentVector::new(r.to_vec()))
                .collect(),
        )
    }

    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            generators: Vec::new(),
        }
    }

    pub fn unit(nvars: usize) -> Self {
        Self {
            nvars,
            generators: vec![ExponentVector::zero(nvars)],
        }
    }

    /// The homogeneous maximal ideal `(x_1, ..., x_n)`.
    pub fn maximal(nvars: usize) -> Self {
        Self {
            nvars,
            generators: (0..nvars)
                .rev()
                .map(|i| ExponentVector::pure_power(nvars, i, 1))
                .collect::<Vec<_>>(),
        }
        .canonical()
    }

    fn canonical(mut self) -> Self {
        self.generators = minimalize_unchecked(self.generators);
        self
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].degree() == 0
    }

    /// Rejects the zero and unit ideals, where the invariants are undefined.
    pub(crate) fn require_proper(&self, invariant: &'static str) -> Result<()> {
        if self.is_zero() {
            Err(Error::Undefined {
                invariant,
                ideal: "zero",
            })
        } else if self.is_unit() {
            Err(Error::Undefined {
                invariant,
                ideal: "unit",
            })
        } else {
            Ok(())
        }
    }

    pub fn contains_monomial(&self, b: &ExponentVector) -> Result<bool> {
        check_dim(self.nvars, b.len())?;
        Ok(self.contains_unchecked(b))
    }

    pub(crate) fn contains_unchecked(&self, b: &ExponentVector) -> bool {
        self.generators.iter().any(|g| g.divides(b))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> Result<bool> {
        check_dim(self.nvars, other.nvars)?;
        Ok(other.generators.iter().all(|g| self.contains_unchecked(g)))
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dim(self.nvars, other.nvars)?;
        let mut acc = Accumulator::new("intersect");
        for g in &self.generators {
            if other.contains_unchecked(g) {
                acc.push(g.clone())?;
                continue;
            }
            for h in &other.generators {
                if self.contains_unchecked(h) {
                    acc.push(h.clone())?;
                } else {
                    acc.push(g.lcm(h))?;
                }
            }
        }
        Ok(MonomialIdeal {
            nvars: self.nvars,
            generators: acc.finish()?,
        })
    }

    pub fn multiply(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dim(self.nvars, other.nvars)?;
        let mut acc = Accumulator::new("multiply");
        for g in &self.generators {
            for h in &other.generators {
                acc.push(g.checked_add(h)?)?;
            }
        }
        Ok(MonomialIdeal {
            nvars: self.nvars,
            generators: acc.finish()?,
        })
    }

    /// `I^m` by iterated multiplication, minimalizing after every step.
    pub fn power(&self, m: u32) -> Result<MonomialIdeal> {
        if m == 0 {
            return Err(Error::InvalidArgument(
                "power exponent must be positive".into(),
            ));
        }
        let mut acc = self.clone();
        for _ in 1..m {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    /// Initial degree: the least total degree of a minimal generator.
    pub fn alpha(&self) -> Result<u64> {
        self.generators
            .iter()
            .map(ExponentVector::degree)
            .min()
            .ok_or(Error::Undefined {
                invariant: "initial degree",
                ideal: "zero",
            })
    }

    pub fn max_exponent(&self) -> Exponent {
        self.generators
            .iter()
            .flat_map(|g| g.as_slice().iter().copied())
            .max()
            .unwrap_or(0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators
            .iter()
            .all(|g| g.as_slice().iter().all(|&e| e <= 1))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "MonomialIdeal[{}]({})",
            self.nvars,
            crate::parse::format_ideal(self)
        )
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parse::format_ideal(self))
    }
}
