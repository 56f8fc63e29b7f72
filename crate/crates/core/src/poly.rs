//! Newton, symbolic and irreducible polyhedra.
//!
//! Every body here is `conv(points) + ℝ₊ⁿ` or an intersection of such
//! bodies. Newton polyhedra are kept in V-representation (the minimal
//! generators of the ideal); the irreducible polyhedron has a cheap
//! H-representation, one row per irreducible component. The symbolic
//! polyhedron is never converted: all queries against it are linear programs
//! over the intersection of its component V-representations.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::Serialize;

use crate::decomp::{combined_primary_components, IrreducibleDecomposition, MonomialPrime};
use crate::error::{check_dim, Error, Result};
use crate::ideal::{Exponent, ExponentVector, MonomialIdeal};
use crate::lp::{solve_min, vrep_intersection_problem, LpOutcome, LpProblem};
use crate::scalar::{denominator_lcm, dot, from_u64, ExactScalar};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalPoint<S>(Vec<S>);

impl<S: ExactScalar> RationalPoint<S> {
    pub fn new(coords: Vec<S>) -> Self {
        Self(coords)
    }

    pub fn from_exponents(v: &ExponentVector) -> Self {
        Self(
            v.as_slice()
                .iter()
                .map(|&e| from_u64(u64::from(e)))
                .collect(),
        )
    }

    pub fn from_fractions(pairs: &[(i64, i64)]) -> Self {
        Self(pairs.iter().map(|&(n, d)| S::from_fraction(n, d)).collect())
    }

    pub fn coords(&self) -> &[S] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn scale(&self, factor: &S) -> Self {
        Self(self.0.iter().map(|c| c.clone() * factor.clone()).collect())
    }

    pub fn coordinate_sum(&self) -> S {
        crate::scalar::sum(&self.0)
    }

    /// The exponent vector with these coordinates, if they are all
    /// nonnegative integers.
    pub fn to_exponents(&self) -> Option<ExponentVector> {
        self.0
            .iter()
            .map(|c| {
                if c.is_integral() && !c.is_negative() {
                    c.numer_big().to_u32()
                } else {
                    None
                }
            })
            .collect::<Option<Vec<Exponent>>>()
            .map(ExponentVector::new)
    }
}

impl<S: ExactScalar> fmt::Debug for RationalPoint<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl<S: ExactScalar> Serialize for RationalPoint<S> {
    fn serialize<Ser: serde::Serializer>(&self, s: Ser) -> Result<Ser::Ok, Ser::Error> {
        serialize_rationals(&self.0, s)
    }
}

pub(crate) fn serialize_rationals<S: ExactScalar, Ser: serde::Serializer>(
    values: &[S],
    s: Ser,
) -> Result<Ser::Ok, Ser::Error> {
    let mut seq = s.serialize_seq(Some(values.len()))?;
    for v in values {
        seq.serialize_element(&v.to_ratio_string())?;
    }
    seq.end()
}

/// `conv(generators) + ℝ₊ⁿ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolyhedronVRep {
    nvars: usize,
    generators: Vec<ExponentVector>,
}

impl PolyhedronVRep {
    /// Newton polyhedron of a nonzero ideal.
    pub fn newton(ideal: &MonomialIdeal) -> Result<Self> {
        if ideal.is_zero() {
            return Err(Error::Undefined {
                invariant: "Newton polyhedron",
                ideal: "zero",
            });
        }
        Ok(Self {
            nvars: ideal.nvars(),
            generators: ideal.generators().to_vec(),
        })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    /// Decided by an exact feasibility LP for `λ ≥ 0, Σλ = 1,
    /// Σ λⱼ vⱼ ≤ p`.
    pub fn contains<S: ExactScalar>(&self, p: &RationalPoint<S>) -> Result<bool> {
        Ok(self.caratheodory(p)?.is_some())
    }

    /// Convex weights `λ` with `Σ λⱼ vⱼ ≤ p`, if any exist.
    pub fn caratheodory<S: ExactScalar>(&self, p: &RationalPoint<S>) -> Result<Option<Vec<S>>> {
        check_dim(self.nvars, p.len())?;
        if p.coords().iter().any(|c| c.is_negative()) {
            return Ok(None);
        }
        let k = self.generators.len();
        let mut problem = LpProblem::new(vec![S::zero(); k]);
        problem.equals(vec![S::one(); k], S::one())?;
        for i in 0..self.nvars {
            let row = self
                .generators
                .iter()
                .map(|g| -from_u64::<S>(u64::from(g[i])))
                .collect();
            problem.ge(row, -p.coords()[i].clone())?;
        }
        Ok(solve_min(&problem)?.optimal().map(|s| s.point))
    }
}

/// Rows `Σ cᵢ yᵢ ≥ 1` together with the implicit `y ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyhedronHRep<S> {
    nvars: usize,
    rows: Vec<Vec<S>>,
}

impl<S: ExactScalar> PolyhedronHRep<S> {
    pub fn new(nvars: usize, rows: Vec<Vec<S>>) -> Result<Self> {
        for r in &rows {
            check_dim(nvars, r.len())?;
            if r.iter().any(|c| c.is_negative()) || r.iter().all(|c| c.is_zero()) {
                return Err(Error::InvalidArgument(
                    "H-representation rows need nonnegative coefficients, not all zero".into(),
                ));
            }
        }
        Ok(Self { nvars, rows })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rows(&self) -> &[Vec<S>] {
        &self.rows
    }

    pub fn contains(&self, p: &RationalPoint<S>) -> Result<bool> {
        check_dim(self.nvars, p.len())?;
        Ok(p.coords().iter().all(|c| !c.is_negative())
            && self.rows.iter().all(|r| dot(r, p.coords()) >= S::one()))
    }

    pub fn lp(&self, objective: Vec<S>) -> Result<LpProblem<S>> {
        check_dim(self.nvars, objective.len())?;
        let mut problem = LpProblem::new(objective);
        for r in &self.rows {
            problem.ge(r.clone(), S::one())?;
        }
        Ok(problem)
    }

    /// Vertices of a two-variable body, sorted lexicographically.
    ///
    /// Every vertex is the intersection of two independent tight lines taken
    /// from the rows and the axes, so it suffices to intersect all pairs and
    /// keep the feasible points.
    pub fn vertices_2d(&self) -> Result<Vec<RationalPoint<S>>> {
        if self.nvars != 2 {
            return Err(Error::InvalidArgument(
                "vertex enumeration is only available in two variables".into(),
            ));
        }
        // Lines a·y = b.
        let mut lines: Vec<([S; 2], S)> = vec![
            ([S::one(), S::zero()], S::zero()),
            ([S::zero(), S::one()], S::zero()),
        ];
        lines.extend(
            self.rows
                .iter()
                .map(|r| ([r[0].clone(), r[1].clone()], S::one())),
        );
        let mut out = Vec::new();
        for (i, (a, b)) in lines.iter().enumerate() {
            for (c, d) in &lines[i + 1..] {
                let det = a[0].clone() * c[1].clone() - a[1].clone() * c[0].clone();
                if det.is_zero() {
                    continue;
                }
                let y0 = (b.clone() * c[1].clone() - a[1].clone() * d.clone()) / det.clone();
                let y1 = (a[0].clone() * d.clone() - b.clone() * c[0].clone()) / det;
                let p = RationalPoint::new(vec![y0, y1]);
                if self.contains(&p)? {
                    out.push(p);
                }
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl<S: ExactScalar> Serialize for PolyhedronHRep<S> {
    fn serialize<Ser: serde::Serializer>(&self, s: Ser) -> Result<Ser::Ok, Ser::Error> {
        struct Rows<'a, S>(&'a [Vec<S>]);
        impl<S: ExactScalar> Serialize for Rows<'_, S> {
            fn serialize<Ser: serde::Serializer>(&self, s: Ser) -> Result<Ser::Ok, Ser::Error> {
                let mut seq = s.serialize_seq(Some(self.0.len()))?;
                for r in self.0 {
                    seq.serialize_element(&RationalPoint(r.clone()))?;
                }
                seq.end()
            }
        }
        let mut st = s.serialize_struct("PolyhedronHRep", 2)?;
        st.serialize_field("nvars", &self.nvars)?;
        st.serialize_field("rows", &Rows(&self.rows))?;
        st.end()
    }
}

/// One row per component: coefficient `1/a` on each variable carrying the
/// pure power `a`, zero elsewhere.
pub fn irreducible_hrep<S: ExactScalar>(decomp: &IrreducibleDecomposition) -> PolyhedronHRep<S> {
    let rows = decomp
        .components()
        .iter()
        .map(|c| {
            let mut row = vec![S::zero(); decomp.nvars()];
            for (&i, &a) in c.powers() {
                row[i] = S::one() / from_u64::<S>(u64::from(a));
            }
            row
        })
        .collect();
    PolyhedronHRep {
        nvars: decomp.nvars(),
        rows,
    }
}

/// `SP(I) = ⋂_{P ∈ Max(I)} NP(Q_{⊆P})`, one V-representation per maximal
/// associated prime.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymbolicPolyhedronSpec {
    components: Vec<SymbolicComponent>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymbolicComponent {
    pub prime: MonomialPrime,
    pub body: PolyhedronVRep,
}

impl SymbolicPolyhedronSpec {
    pub fn components(&self) -> &[SymbolicComponent] {
        &self.components
    }

    pub fn bodies(&self) -> Vec<PolyhedronVRep> {
        self.components.iter().map(|c| c.body.clone()).collect()
    }

    pub fn nvars(&self) -> usize {
        self.components[0].body.nvars()
    }

    pub fn contains<S: ExactScalar>(&self, p: &RationalPoint<S>) -> Result<bool> {
        for c in &self.components {
            if !c.body.contains(p)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Exact minimum of `objective · y` over the body.
    pub fn minimize<S: ExactScalar>(&self, objective: &[S]) -> Result<(S, RationalPoint<S>)> {
        let problem = vrep_intersection_problem(&self.bodies(), objective)?;
        match solve_min(&problem)? {
            LpOutcome::Optimal(sol) => Ok((
                sol.value,
                RationalPoint::new(sol.point[..self.nvars()].to_vec()),
            )),
            other => Err(Error::Lp(format!(
                "symbolic polyhedron objective is {}",
                other.status()
            ))),
        }
    }
}

pub fn sp_spec(ideal: &MonomialIdeal) -> Result<SymbolicPolyhedronSpec> {
    let components = combined_primary_components(ideal)?
        .into_iter()
        .map(|(prime, q)| {
            Ok(SymbolicComponent {
                prime,
                body: PolyhedronVRep::newton(&q)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SymbolicPolyhedronSpec { components })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowMinimum<S: ExactScalar> {
    /// Index of the irreducible component defining the row.
    pub row: usize,
    #[serde(serialize_with = "serialize_scalar")]
    pub value: S,
    pub point: RationalPoint<S>,
}

pub(crate) fn serialize_scalar<S: ExactScalar, Ser: serde::Serializer>(
    v: &S,
    s: Ser,
) -> Result<Ser::Ok, Ser::Error> {
    s.serialize_str(&v.to_ratio_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainVerdict<S: ExactScalar> {
    /// Every minimal generator lies in SP(I). SP(I) is convex and recedes
    /// along the orthant, so this gives NP(I) ⊆ SP(I).
    pub np_in_sp: bool,
    /// Every IP row has minimum ≥ 1 over SP(I), which gives SP(I) ⊆ IP(I).
    pub sp_in_ip: bool,
    pub row_minima: Vec<RowMinimum<S>>,
}

/// Checks `NP(I) ⊆ SP(I) ⊆ IP(I)` with finitely many exact LPs.
pub fn check_np_sp_ip_chain<S: ExactScalar>(ideal: &MonomialIdeal) -> Result<ChainVerdict<S>> {
    let decomp = crate::decomp::irreducible_decomposition(ideal)?;
    let sp = sp_spec(ideal)?;
    let mut np_in_sp = true;
    for g in ideal.generators() {
        if !sp.contains(&RationalPoint::<S>::from_exponents(g))? {
            np_in_sp = false;
            break;
        }
    }
    let hrep = irreducible_hrep::<S>(&decomp);
    let mut row_minima = Vec::with_capacity(hrep.rows().len());
    for (row, coeffs) in hrep.rows().iter().enumerate() {
        let (value, point) = sp.minimize(coeffs)?;
        row_minima.push(RowMinimum { row, value, point });
    }
    let sp_in_ip = row_minima.iter().all(|r| r.value >= S::one());
    Ok(ChainVerdict {
        np_in_sp,
        sp_in_ip,
        row_minima,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledWitness {
    /// Scaling factor: the lcm of all certificate and point denominators.
    pub m: u64,
    /// `m·p`, an integral exponent vector lying in every `J_i^m`.
    pub exponents: ExponentVector,
}

/// Finds `m` with `x^{m·p} ∈ J_1^m ∩ ... ∩ J_s^m`.
///
/// For each component a convex-weight certificate `p ≥ Σ λⱼ vⱼ` is found by
/// LP; scaling by the lcm `m` of every denominator turns it into the product
/// `∏ (x^{vⱼ})^{m λⱼ}` of `m` generators of `J_i` dividing `x^{m·p}`.
pub fn witness_scaled_membership<S: ExactScalar>(
    p: &RationalPoint<S>,
    components: &[MonomialIdeal],
) -> Result<ScaledWitness> {
    if components.is_empty() {
        return Err(Error::InvalidArgument("empty component list".into()));
    }
    let mut certificates = Vec::with_capacity(components.len());
    for (k, c) in components.iter().enumerate() {
        check_dim(c.nvars(), p.len())?;
        let body = PolyhedronVRep::newton(c)?;
        match body.caratheodory(p)? {
            Some(lambda) => certificates.push((body, lambda)),
            None => return Err(Error::NotInBody { component: k }),
        }
    }
    let m: BigInt = denominator_lcm(
        p.coords()
            .iter()
            .chain(certificates.iter().flat_map(|(_, l)| l.iter())),
    );
    let m = m
        .to_u64()
        .ok_or_else(|| Error::InvalidArgument("witness scale does not fit in u64".into()))?;
    let scale = from_u64::<S>(m);
    let exponents = p
        .scale(&scale)
        .to_exponents()
        .ok_or(Error::ExponentOverflow("scaled witness"))?;

    // Re-derive the product certificate with integers.
    for (body, lambda) in &certificates {
        let mut bound = vec![0u64; p.len()];
        let mut count = 0u64;
        for (g, l) in body.generators().iter().zip(lambda) {
            let mult = (l.clone() * scale.clone())
                .numer_big()
                .to_u64()
                .ok_or_else(|| Error::Lp("certificate weight out of range".into()))?;
            count += mult;
            for (b, &e) in bound.iter_mut().zip(g.as_slice()) {
                *b += mult * u64::from(e);
            }
        }
        let divides = bound
            .iter()
            .zip(exponents.as_slice())
            .all(|(&b, &e)| b <= u64::from(e));
        if count != m || !divides {
            return Err(Error::Lp("scaled certificate failed verification".into()));
        }
    }
    Ok(ScaledWitness { m, exponents })
}
