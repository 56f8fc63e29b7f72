//! Irreducible and combined primary decompositions, associated primes and
//! the three power families.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::error::{check_dim, Error, Result};
use crate::ideal::{Exponent, ExponentVector, MonomialIdeal};
use crate::limits;

/// Irreducible monomial ideal `(x_{i_1}^{a_1}, ..., x_{i_t}^{a_t})`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IrreducibleComponent {
    nvars: usize,
    powers: BTreeMap<usize, Exponent>,
}

impl IrreducibleComponent {
    pub fn new(nvars: usize, powers: BTreeMap<usize, Exponent>) -> Result<Self> {
        if powers.is_empty() {
            return Err(Error::InvalidArgument(
                "irreducible component needs at least one pure power".into(),
            ));
        }
        if let Some((&i, _)) = powers.iter().find(|(&i, _)| i >= nvars) {
            return Err(Error::DimensionMismatch {
                expected: nvars,
                found: i + 1,
            });
        }
        if powers.values().any(|&a| a == 0) {
            return Err(Error::InvalidArgument(
                "pure-power exponents must be positive".into(),
            ));
        }
        Ok(Self { nvars, powers })
    }

    pub fn from_pairs(nvars: usize, pairs: &[(usize, Exponent)]) -> Result<Self> {
        Self::new(nvars, pairs.iter().copied().collect())
    }

    /// Dense form with 0 marking an absent variable.
    fn from_dense(bounds: &[Exponent]) -> Self {
        Self {
            nvars: bounds.len(),
            powers: bounds
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(i, &a)| (i, a))
                .collect(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn powers(&self) -> &BTreeMap<usize, Exponent> {
        &self.powers
    }

    pub fn exponent(&self, var: usize) -> Option<Exponent> {
        self.powers.get(&var).copied()
    }

    pub fn radical(&self) -> MonomialPrime {
        MonomialPrime {
            support: self.powers.keys().copied().collect(),
        }
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        let gens = self
            .powers
            .iter()
            .map(|(&i, &a)| ExponentVector::pure_power(self.nvars, i, a))
            .collect();
        MonomialIdeal::new(self.nvars, gens).expect("pure powers are well formed")
    }

    /// `x^b` lies in this component iff `b_i >= a_i` for some listed `i`.
    pub fn contains_monomial(&self, b: &ExponentVector) -> bool {
        self.powers.iter().any(|(&i, &a)| b[i] >= a)
    }

    /// `other ⊆ self`.
    pub fn contains_component(&self, other: &IrreducibleComponent) -> bool {
        other
            .powers
            .iter()
            .all(|(i, &a)| self.powers.get(i).is_some_and(|&s| s <= a))
    }

    pub fn contains_ideal(&self, ideal: &MonomialIdeal) -> bool {
        ideal.generators().iter().all(|g| self.contains_monomial(g))
    }
}

impl fmt::Debug for IrreducibleComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, (i, a)) in self.powers.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "x{}^{}", i + 1, a)?;
        }
        write!(f, ")")
    }
}

impl Serialize for IrreducibleComponent {
    /// Serialized as the exponent vector with 0 for absent variables.
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut dense = vec![0; self.nvars];
        for (&i, &a) in &self.powers {
            dense[i] = a;
        }
        dense.serialize(s)
    }
}

/// Monomial prime `(x_i : i ∈ support)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonomialPrime {
    support: BTreeSet<usize>,
}

impl MonomialPrime {
    pub fn new(support: impl IntoIterator<Item = usize>) -> Result<Self> {
        let support: BTreeSet<usize> = support.into_iter().collect();
        if support.is_empty() {
            return Err(Error::InvalidArgument(
                "prime needs a nonempty support".into(),
            ));
        }
        Ok(Self { support })
    }

    pub fn support(&self) -> &BTreeSet<usize> {
        &self.support
    }

    pub fn height(&self) -> usize {
        self.support.len()
    }

    pub fn is_subset(&self, other: &MonomialPrime) -> bool {
        self.support.is_subset(&other.support)
    }
}

impl fmt::Debug for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars: Vec<String> = self.support.iter().map(|i| format!("x{}", i + 1)).collect();
        write!(f, "({})", vars.join(","))
    }
}

impl Serialize for MonomialPrime {
    /// Serialized as 1-based variable indices.
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let one_based: Vec<usize> = self.support.iter().map(|i| i + 1).collect();
        one_based.serialize(s)
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct IrreducibleDecomposition {
    nvars: usize,
    components: Vec<IrreducibleComponent>,
}

impl IrreducibleDecomposition {
    /// Builds a decomposition from arbitrary components, irredundantized and
    /// sorted.
    pub fn from_components(components: Vec<IrreducibleComponent>) -> Result<Self> {
        let nvars = components
            .first()
            .map(IrreducibleComponent::nvars)
            .ok_or_else(|| Error::InvalidArgument("empty component list".into()))?;
        let components = irredundantize(components)?;
        Ok(Self { nvars, components })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn components(&self) -> &[IrreducibleComponent] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn intersection(&self) -> Result<MonomialIdeal> {
        intersect_all(self.nvars, self.components.iter().map(|c| c.to_ideal()))
    }
}

pub(crate) fn intersect_all(
    nvars: usize,
    ideals: impl IntoIterator<Item = MonomialIdeal>,
) -> Result<MonomialIdeal> {
    let mut acc: Option<MonomialIdeal> = None;
    for ideal in ideals {
        acc = Some(match acc {
            None => ideal,
            Some(a) => a.intersect(&ideal)?,
        });
    }
    Ok(acc.unwrap_or_else(|| MonomialIdeal::unit(nvars)))
}

/// Removes every component that contains the intersection of the others.
///
/// For irreducible monomial ideals `J_1 ∩ ... ∩ J_r ⊆ J` holds iff some
/// `J_k ⊆ J`: otherwise pick `m_k ∈ J_k \ J`; their lcm lies in every `J_k`
/// and, since membership in `J` is decided one variable at a time, not in
/// `J`. So the full redundancy test reduces to pairwise containment. Equal
/// components are collapsed to one.
pub fn irredundantize(components: Vec<IrreducibleComponent>) -> Result<Vec<IrreducibleComponent>> {
    let Some(first) = components.first() else {
        return Err(Error::InvalidArgument("empty component list".into()));
    };
    let nvars = first.nvars();
    for c in &components {
        check_dim(nvars, c.nvars())?;
    }
    let mut comps = components;
    comps.sort();
    comps.dedup();
    let kept: Vec<IrreducibleComponent> = comps
        .iter()
        .enumerate()
        .filter(|(i, c)| {
            !comps
                .iter()
                .enumerate()
                .any(|(j, other)| *i != j && c.contains_component(other))
        })
        .map(|(_, c)| c.clone())
        .collect();
    Ok(kept)
}

/// Unique irredundant irreducible decomposition.
///
/// Generators are added one at a time to a running decomposition that starts
/// at the zero ideal (a single component with no pure powers). A component
/// `J` not containing the new generator `x^g` is replaced by the components
/// `J + (x_i^{g_i})`, `i ∈ supp(g)`; then non-minimal components are
/// dropped. Surviving old components stay minimal, so only the fresh ones
/// need checking.
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<IrreducibleDecomposition> {
    ideal.require_proper("irreducible decomposition")?;
    let nvars = ideal.nvars();
    // Dense bounds: 0 = no pure power in that variable.
    let mut comps: Vec<Vec<Exponent>> = vec![vec![0; nvars]];
    for g in ideal.generators() {
        let g = g.as_slice();
        let mut kept = Vec::with_capacity(comps.len());
        let mut fresh = Vec::new();
        for c in comps {
            if dense_contains(&c, g) {
                kept.push(c);
            } else {
                for (i, &gi) in g.iter().enumerate() {
                    if gi > 0 {
                        let mut f = c.clone();
                        f[i] = gi;
                        fresh.push(f);
                    }
                }
            }
        }
        fresh.sort_unstable();
        fresh.dedup();
        let survivors: Vec<Vec<Exponent>> = fresh
            .iter()
            .filter(|f| {
                !kept.iter().any(|k| dense_subset(k, f))
                    && !fresh.iter().any(|o| o != *f && dense_subset(o, f))
            })
            .cloned()
            .collect();
        kept.extend(survivors);
        limits::check_size("irreducible decomposition", kept.len())?;
        comps = kept;
    }
    let mut components: Vec<IrreducibleComponent> = comps
        .iter()
        .map(|c| IrreducibleComponent::from_dense(c))
        .collect();
    components.sort();
    Ok(IrreducibleDecomposition { nvars, components })
}

fn dense_contains(bounds: &[Exponent], g: &[Exponent]) -> bool {
    bounds.iter().zip(g).any(|(&a, &b)| a > 0 && b >= a)
}

/// `small ⊆ big` for dense components.
fn dense_subset(small: &[Exponent], big: &[Exponent]) -> bool {
    small
        .iter()
        .zip(big)
        .all(|(&s, &b)| s == 0 || (b > 0 && b <= s))
}

pub fn ass_primes(ideal: &MonomialIdeal) -> Result<BTreeSet<MonomialPrime>> {
    Ok(ass_of(&irreducible_decomposition(ideal)?))
}

fn ass_of(decomp: &IrreducibleDecomposition) -> BTreeSet<MonomialPrime> {
    decomp.components.iter().map(|c| c.radical()).collect()
}

fn maximal_elements(primes: &BTreeSet<MonomialPrime>) -> BTreeSet<MonomialPrime> {
    primes
        .iter()
        .filter(|p| !primes.iter().any(|q| q != *p && p.is_subset(q)))
        .cloned()
        .collect()
}

pub fn max_primes(ideal: &MonomialIdeal) -> Result<BTreeSet<MonomialPrime>> {
    Ok(maximal_elements(&ass_primes(ideal)?))
}

pub fn big_height(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(big_height_of(&irreducible_decomposition(ideal)?))
}

pub(crate) fn big_height_of(decomp: &IrreducibleDecomposition) -> usize {
    decomp
        .components
        .iter()
        .map(|c| c.powers.len())
        .max()
        .unwrap_or(0)
}

/// `Q_{⊆P}` for every maximal associated prime `P`: the intersection of the
/// irreducible components whose radical lies in `P`.
pub fn combined_primary_components(
    ideal: &MonomialIdeal,
) -> Result<BTreeMap<MonomialPrime, MonomialIdeal>> {
    combined_of(&irreducible_decomposition(ideal)?)
}

pub(crate) fn combined_of(
    decomp: &IrreducibleDecomposition,
) -> Result<BTreeMap<MonomialPrime, MonomialIdeal>> {
    let max = maximal_elements(&ass_of(decomp));
    max.into_iter()
        .map(|p| {
            let members = decomp
                .components
                .iter()
                .filter(|c| c.radical().is_subset(&p))
                .map(|c| c.to_ideal())
                .collect::<Vec<_>>();
            Ok((p, intersect_all(decomp.nvars, members)?))
        })
        .collect()
}

/// `I^{(m)} = ⋂_{P ∈ Max(I)} (Q_{⊆P})^m`.
pub fn symbolic_power(ideal: &MonomialIdeal, m: u32) -> Result<MonomialIdeal> {
    check_power(m)?;
    if m == 1 {
        return Ok(ideal.clone());
    }
    let combined = combined_primary_components(ideal)?;
    let powers = combined
        .values()
        .map(|q| q.power(m))
        .collect::<Result<Vec<_>>>()?;
    intersect_all(ideal.nvars(), powers)
}

/// `I^{{m}} = J_1^m ∩ ... ∩ J_s^m` over the irreducible components.
pub fn irreducible_power(ideal: &MonomialIdeal, m: u32) -> Result<MonomialIdeal> {
    check_power(m)?;
    if m == 1 {
        return Ok(ideal.clone());
    }
    let decomp = irreducible_decomposition(ideal)?;
    irreducible_power_of(decomp.components(), m)
}

/// Intersection of the `m`-th powers of arbitrary (possibly redundant)
/// components.
pub fn irreducible_power_of(components: &[IrreducibleComponent], m: u32) -> Result<MonomialIdeal> {
    check_power(m)?;
    let nvars = components
        .first()
        .map(IrreducibleComponent::nvars)
        .ok_or_else(|| Error::InvalidArgument("empty component list".into()))?;
    let powers = components
        .iter()
        .map(|c| c.to_ideal().power(m))
        .collect::<Result<Vec<_>>>()?;
    intersect_all(nvars, powers)
}

fn check_power(m: u32) -> Result<()> {
    if m == 0 {
        Err(Error::InvalidArgument(
            "power exponent must be positive".into(),
        ))
    } else {
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PowerFamily {
    Ordinary,
    Symbolic,
    Irreducible,
}

impl PowerFamily {
    pub fn power(self, ideal: &MonomialIdeal, m: u32) -> Result<MonomialIdeal> {
        match self {
            PowerFamily::Ordinary => ideal.power(m),
            PowerFamily::Symbolic => symbolic_power(ideal, m),
            PowerFamily::Irreducible => irreducible_power(ideal, m),
        }
    }
}

impl std::str::FromStr for PowerFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ordinary" => Ok(PowerFamily::Ordinary),
            "symbolic" => Ok(PowerFamily::Symbolic),
            "irreducible" => Ok(PowerFamily::Irreducible),
            other => Err(Error::InvalidArgument(format!(
                "unknown power family `{other}`"
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, rows: &[&[Exponent]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, rows).unwrap()
    }

    fn comp(n: usize, pairs: &[(usize, Exponent)]) -> IrreducibleComponent {
        IrreducibleComponent::from_pairs(n, pairs).unwrap()
    }

    fn prime(support: &[usize]) -> MonomialPrime {
        MonomialPrime::new(support.iter().copied()).unwrap()
    }

    fn triangle() -> MonomialIdeal {
        ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]])
    }

    /// (x,y)∩(x,z)∩(x,w)∩(y,z)∩(y,w)∩(z,w)∩(x,y,z,w)^4
    fn noemb() -> MonomialIdeal {
        let mut acc = MonomialIdeal::maximal(4).power(4).unwrap();
        for a in 0..4 {
            for b in a + 1..4 {
                acc = acc
                    .intersect(&comp(4, &[(a, 1), (b, 1)]).to_ideal())
                    .unwrap();
            }
        }
        acc
    }

    #[test]
    fn decomposes_square_of_maximal_ideal() {
        let d = irreducible_decomposition(&ideal(2, &[&[2, 0], &[1, 1], &[0, 2]])).unwrap();
        let expected: BTreeSet<_> = [comp(2, &[(0, 2), (1, 1)]), comp(2, &[(0, 1), (1, 2)])].into();
        assert_eq!(
            d.components().iter().cloned().collect::<BTreeSet<_>>(),
            expected
        );
    }

    #[test]
    fn irreducible_ideal_is_its_own_decomposition() {
        let d = irreducible_decomposition(&ideal(2, &[&[3, 0], &[0, 1]])).unwrap();
        assert_eq!(d.components(), &[comp(2, &[(0, 3), (1, 1)])]);
    }

    #[test]
    fn cube_of_maximal_ideal_in_three_variables() {
        let m3 = MonomialIdeal::maximal(3).power(3).unwrap();
        let d = irreducible_decomposition(&m3).unwrap();
        assert_eq!(d.len(), 6);
        for c in d.components() {
            assert_eq!(c.powers().len(), 3);
            assert_eq!(c.powers().values().sum::<u32>(), 5);
        }
        assert_eq!(d.intersection().unwrap(), m3);
    }

    #[test]
    fn rejects_zero_and_unit() {
        assert!(matches!(
            irreducible_decomposition(&MonomialIdeal::zero(2)),
            Err(Error::Undefined { .. })
        ));
        assert!(matches!(
            irreducible_decomposition(&MonomialIdeal::unit(2)),
            Err(Error::Undefined { .. })
        ));
    }

    #[test]
    fn irredundantize_drops_containing_components() {
        let out = irredundantize(vec![comp(2, &[(0, 1), (1, 1)]), comp(2, &[(0, 1)])]).unwrap();
        assert_eq!(out, vec![comp(2, &[(0, 1)])]);

        let genuine = vec![comp(2, &[(0, 1), (1, 2)]), comp(2, &[(0, 2), (1, 1)])];
        assert_eq!(irredundantize(genuine.clone()).unwrap(), genuine);

        let mut with_max = genuine.clone();
        with_max.push(comp(2, &[(0, 1), (1, 1)]));
        assert_eq!(irredundantize(with_max).unwrap(), genuine);

        // (x^3,y^3) lies inside both (x^2,y) and (x,y^2), so it is the one
        // that survives.
        let mut with_cube = genuine;
        with_cube.push(comp(2, &[(0, 3), (1, 3)]));
        assert_eq!(
            irredundantize(with_cube).unwrap(),
            vec![comp(2, &[(0, 3), (1, 3)])]
        );

        assert!(irredundantize(vec![]).is_err());
        assert!(matches!(
            irredundantize(vec![comp(2, &[(0, 1)]), comp(3, &[(0, 1)])]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn associated_primes() {
        let i = ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        assert_eq!(ass_primes(&i).unwrap(), [prime(&[0, 1])].into());
        assert_eq!(big_height(&i).unwrap(), 2);

        let t = triangle();
        assert_eq!(
            ass_primes(&t).unwrap(),
            [prime(&[0, 1]), prime(&[0, 2]), prime(&[1, 2])].into()
        );
        assert_eq!(max_primes(&t).unwrap(), ass_primes(&t).unwrap());
        assert_eq!(big_height(&t).unwrap(), 2);

        let n = noemb();
        assert_eq!(big_height(&n).unwrap(), 4);
        assert_eq!(max_primes(&n).unwrap(), [prime(&[0, 1, 2, 3])].into());
    }

    #[test]
    fn combined_primary() {
        let i = ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        let c = combined_primary_components(&i).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[&prime(&[0, 1])], i);

        let c = combined_primary_components(&triangle()).unwrap();
        assert_eq!(c.len(), 3);
        for (p, q) in &c {
            let gens: Vec<ExponentVector> = p
                .support()
                .iter()
                .map(|&i| ExponentVector::pure_power(3, i, 1))
                .collect();
            assert_eq!(q, &MonomialIdeal::new(3, gens).unwrap());
        }

        let n = noemb();
        let c = combined_primary_components(&n).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[&prime(&[0, 1, 2, 3])], n);
    }

    #[test]
    fn symbolic_square_of_triangle() {
        let s = symbolic_power(&triangle(), 2).unwrap();
        assert!(s
            .contains_monomial(&ExponentVector::new(vec![1, 1, 1]))
            .unwrap());
        assert_eq!(s.alpha().unwrap(), 3);
        // Direct: (x,y)^2 ∩ (x,z)^2 ∩ (y,z)^2.
        let direct = [(0, 1), (0, 2), (1, 2)]
            .iter()
            .map(|&(a, b)| comp(3, &[(a, 1), (b, 1)]).to_ideal().power(2).unwrap())
            .reduce(|a, b| a.intersect(&b).unwrap())
            .unwrap();
        assert_eq!(s, direct);
        assert_eq!(symbolic_power(&triangle(), 1).unwrap(), triangle());
    }

    #[test]
    fn powers_of_irreducible_ideals_coincide() {
        let j = ideal(3, &[&[2, 0, 0], &[0, 0, 3]]);
        for m in 1..=3 {
            let ord = j.power(m).unwrap();
            assert_eq!(symbolic_power(&j, m).unwrap(), ord);
            assert_eq!(irreducible_power(&j, m).unwrap(), ord);
        }
    }

    #[test]
    fn noemb_symbolic_square_gains_embedded_primes() {
        let n = noemb();
        let ass = ass_primes(&n).unwrap();
        let sym = ass_primes(&symbolic_power(&n, 2).unwrap()).unwrap();
        for p in [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]] {
            let p = prime(&p);
            assert!(sym.contains(&p), "{p:?} missing");
            assert!(!ass.contains(&p));
        }
        let irr = ass_primes(&irreducible_power(&n, 2).unwrap()).unwrap();
        assert!(irr.is_subset(&ass));
    }

    #[test]
    fn irreducible_square_of_m2_squared() {
        let i = ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        let p = irreducible_power(&i, 2).unwrap();
        let direct = comp(2, &[(0, 2), (1, 1)])
            .to_ideal()
            .power(2)
            .unwrap()
            .intersect(&comp(2, &[(0, 1), (1, 2)]).to_ideal().power(2).unwrap())
            .unwrap();
        assert_eq!(p, direct);
        // x^2 y ∈ (x^4,x^2y,y^2) ∩ (x^2,xy^2,y^4); nothing of degree 2 is.
        assert!(p
            .contains_monomial(&ExponentVector::new(vec![2, 1]))
            .unwrap());
        assert_eq!(p.alpha().unwrap(), 3);
    }

    #[test]
    fn squarefree_irreducible_equals_symbolic() {
        let t = triangle();
        for m in 1..=4 {
            assert_eq!(
                irreducible_power(&t, m).unwrap(),
                symbolic_power(&t, m).unwrap()
            );
        }
    }

    #[test]
    fn nested_radicals_separate_symbolic_and_irreducible_powers() {
        // (x²,xy) = (x) ∩ (x²,y): distinct radicals, but (x) ⊂ (x,y) is embedded.
        let i = MonomialIdeal::from_exponents(2, &[&[2, 0], &[1, 1]]).unwrap();
        let sym = symbolic_power(&i, 2).unwrap();
        let irr = irreducible_power(&i, 2).unwrap();
        assert_eq!(sym, i.power(2).unwrap());
        assert_eq!(
            irr,
            MonomialIdeal::from_exponents(2, &[&[4, 0], &[2, 1]]).unwrap()
        );
        assert!(irr.contains_ideal(&sym).unwrap() && sym != irr);
    }

    #[test]
    fn irreducible_power_ignores_redundant_components() {
        let genuine = vec![comp(2, &[(0, 2), (1, 1)]), comp(2, &[(0, 1), (1, 2)])];
        let mut padded = genuine.clone();
        padded.push(comp(2, &[(0, 1), (1, 1)]));
        padded.push(comp(2, &[(0, 2), (1, 1)]));
        for m in 1..=3 {
            assert_eq!(
                irreducible_power_of(&padded, m).unwrap(),
                irreducible_power_of(&genuine, m).unwrap()
            );
        }
    }

    #[test]
    fn component_validation() {
        assert!(IrreducibleComponent::from_pairs(2, &[]).is_err());
        assert!(IrreducibleComponent::from_pairs(2, &[(0, 0)]).is_err());
        assert!(IrreducibleComponent::from_pairs(2, &[(2, 1)]).is_err());
    }
}
