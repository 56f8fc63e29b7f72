//! Independent reference implementations used by the integration tests.
//! Nothing here calls into the algorithms it is checking.

#![allow(dead_code)]

use std::collections::BTreeSet;

use monoform::lp::{LpProblem, Relation};
use monoform::{ExactScalar, MonomialIdeal};

pub type Dense = Vec<u32>;

pub fn gens(ideal: &MonomialIdeal) -> Vec<Dense> {
    ideal
        .generators()
        .iter()
        .map(|g| g.as_slice().to_vec())
        .collect()
}

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn member(gens: &[Dense], b: &[u32]) -> bool {
    gens.iter().any(|g| divides(g, b))
}

/// Every exponent vector with entries in `0..=bound`.
pub fn grid(n: usize, bound: u32) -> Vec<Dense> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=bound).map(move |e| {
                    let mut w = v.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
    }
    out
}

/// Dense irreducible component: `0` marks an absent variable.
pub fn component_contains(j: &[u32], b: &[u32]) -> bool {
    j.iter().zip(b).any(|(&a, &e)| a > 0 && e >= a)
}

/// `J ⊇ J'` for dense irreducible components.
pub fn component_superset(j: &[u32], jp: &[u32]) -> bool {
    jp.iter()
        .enumerate()
        .filter(|(_, &a)| a > 0)
        .all(|(i, &a)| j[i] > 0 && j[i] <= a)
}

/// Irreducible decomposition by splitting a mixed generator
/// `x_i^{g_i}·h` into `(I', x_i^{g_i}) ∩ (I', h)`, then discarding every
/// component that contains another.
pub fn splitting_decomposition(n: usize, gens: &[Dense]) -> BTreeSet<Dense> {
    let mut raw = Vec::new();
    split(n, gens.to_vec(), &mut raw);
    let raw: BTreeSet<Dense> = raw.into_iter().collect();
    raw.iter()
        .filter(|j| !raw.iter().any(|k| k != *j && component_superset(j, k)))
        .cloned()
        .collect()
}

fn split(n: usize, gens: Vec<Dense>, out: &mut Vec<Dense>) {
    let mixed = gens
        .iter()
        .position(|g| g.iter().filter(|&&e| e > 0).count() >= 2);
    match mixed {
        None => {
            let mut j = vec![0u32; n];
            for g in &gens {
                if let Some(i) = g.iter().position(|&e| e > 0) {
                    if j[i] == 0 || g[i] < j[i] {
                        j[i] = g[i];
                    }
                }
            }
            out.push(j);
        }
        Some(k) => {
            let g = gens[k].clone();
            let i = g.iter().position(|&e| e > 0).unwrap();
            let mut pure = vec![0u32; n];
            pure[i] = g[i];
            let mut rest = g;
            rest[i] = 0;
            for piece in [pure, rest] {
                let mut next: Vec<Dense> = gens
                    .iter()
                    .enumerate()
                    .filter(|&(t, _)| t != k)
                    .map(|(_, h)| h.clone())
                    .collect();
                next.push(piece);
                split(n, next, out);
            }
        }
    }
}

/// Ordered `n`-tuples of positive integers summing to `s`, by filtering a box.
pub fn compositions_by_filter(n: usize, s: u32) -> BTreeSet<Dense> {
    grid(n, s)
        .into_iter()
        .filter(|v| v.iter().all(|&e| e >= 1) && v.iter().sum::<u32>() == s)
        .collect()
}

/// Monomial primes (0-based supports) associated to the ideal generated by
/// `gens`, found as colon ideals `I : u = P_S`.
pub fn associated_primes_by_colon(n: usize, gens: &[Dense]) -> BTreeSet<BTreeSet<usize>> {
    let top = gens.iter().flatten().copied().max().unwrap_or(0);
    let mut out = BTreeSet::new();
    for u in grid(n, top) {
        if member(gens, &u) {
            continue;
        }
        let s: BTreeSet<usize> = (0..n)
            .filter(|&i| {
                let mut w = u.clone();
                w[i] += 1;
                member(gens, &w)
            })
            .collect();
        if s.is_empty() {
            continue;
        }
        let mut far = u.clone();
        for (j, e) in far.iter_mut().enumerate() {
            if !s.contains(&j) {
                *e += top + 1;
            }
        }
        if !member(gens, &far) {
            out.insert(s);
        }
    }
    out
}

/// Solves `A x = b` exactly; `None` when `A` is singular.
pub fn solve_square<S: ExactScalar>(mut a: Vec<Vec<S>>, mut b: Vec<S>) -> Option<Vec<S>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone() / a[col][col].clone();
                let pivot_row = a[col].clone();
                for (x, p) in a[r].iter_mut().zip(pivot_row).skip(col) {
                    *x = x.clone() - p * f.clone();
                }
                let v = b[col].clone() * f;
                b[r] = b[r].clone() - v;
            }
        }
    }
    Some((0..n).map(|i| b[i].clone() / a[i][i].clone()).collect())
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut with = subsets(n - 1, k - 1);
    for s in &mut with {
        s.push(n - 1);
    }
    with.extend(subsets(n - 1, k));
    with
}

/// Minimum of the objective over the basic feasible points of
/// `{z ≥ 0, rows}`: every choice of `n` tight constraints among the rows and
/// the coordinate hyperplanes. `None` when there is no feasible basic point,
/// which for a polyhedron inside the orthant means infeasibility.
pub fn brute_force_min<S: ExactScalar>(p: &LpProblem<S>) -> Option<(S, Vec<S>)> {
    let n = p.nvars();
    let mut hyperplanes: Vec<(Vec<S>, S)> = p
        .constraints()
        .iter()
        .map(|c| (c.coeffs.clone(), c.rhs.clone()))
        .collect();
    for i in 0..n {
        let mut e = vec![S::zero(); n];
        e[i] = S::one();
        hyperplanes.push((e, S::zero()));
    }
    let mut best: Option<(S, Vec<S>)> = None;
    for choice in subsets(hyperplanes.len(), n) {
        let a = choice.iter().map(|&k| hyperplanes[k].0.clone()).collect();
        let b = choice.iter().map(|&k| hyperplanes[k].1.clone()).collect();
        let Some(z) = solve_square(a, b) else {
            continue;
        };
        if !z.iter().all(|v| !v.is_negative()) || !satisfies(p, &z) {
            continue;
        }
        let value = objective(p, &z);
        if best.as_ref().is_none_or(|(v, _)| value < *v) {
            best = Some((value, z));
        }
    }
    best
}

pub fn satisfies<S: ExactScalar>(p: &LpProblem<S>, z: &[S]) -> bool {
    p.constraints().iter().all(|c| {
        let lhs = c
            .coeffs
            .iter()
            .zip(z)
            .fold(S::zero(), |acc, (a, x)| acc + a.clone() * x.clone());
        match c.relation {
            Relation::Ge => lhs >= c.rhs,
            Relation::Eq => lhs == c.rhs,
        }
    })
}

pub fn objective<S: ExactScalar>(p: &LpProblem<S>, z: &[S]) -> S {
    p.objective()
        .iter()
        .zip(z)
        .fold(S::zero(), |acc, (a, x)| acc + a.clone() * x.clone())
}

/// A random LP with `1..=3` variables, `1..=12` rows, small integer data and
/// a mix of `≥` and `=` rows.
pub fn random_lp<R: rand::Rng>(rng: &mut R) -> LpProblem<monoform::Rational> {
    let q = |v: i64| monoform::Rational::from_int(v);
    let n = rng.gen_range(1..=3);
    let objective = (0..n).map(|_| q(rng.gen_range(-3..=4))).collect();
    let mut p = LpProblem::new(objective);
    for _ in 0..rng.gen_range(1..=12) {
        let coeffs = (0..n).map(|_| q(rng.gen_range(-3..=3))).collect();
        let rhs = q(rng.gen_range(-4..=6));
        let relation = if rng.gen_bool(0.2) {
            Relation::Eq
        } else {
            Relation::Ge
        };
        p.add(coeffs, relation, rhs).unwrap();
    }
    p
}
