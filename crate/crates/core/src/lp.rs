//! Exact linear programming.
//!
//! Problems have the form `min cᵀz` subject to rows `aᵀz ≥ b` or `aᵀz = b`
//! and `z ≥ 0`. They are solved by a dense two-phase primal simplex with
//! Bland's rule, so termination is guaranteed even on degenerate problems.
//! Every optimal outcome carries a primal point and a dual vector, both
//! re-checked against the original data before they are returned.

use crate::error::{check_dim, Error, Result};
use crate::poly::PolyhedronVRep;
use crate::scalar::{dot, from_u64, ExactScalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Ge,
    Eq,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint<S> {
    pub coeffs: Vec<S>,
    pub relation: Relation,
    pub rhs: S,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpProblem<S> {
    objective: Vec<S>,
    constraints: Vec<Constraint<S>>,
}

impl<S: ExactScalar> LpProblem<S> {
    pub fn new(objective: Vec<S>) -> Self {
        Self {
            objective,
            constraints: Vec::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.objective.len()
    }

    pub fn objective(&self) -> &[S] {
        &self.objective
    }

    pub fn constraints(&self) -> &[Constraint<S>] {
        &self.constraints
    }

    pub fn add(&mut self, coeffs: Vec<S>, relation: Relation, rhs: S) -> Result<()> {
        check_dim(self.nvars(), coeffs.len())?;
        self.constraints.push(Constraint {
            coeffs,
            relation,
            rhs,
        });
        Ok(())
    }

    pub fn ge(&mut self, coeffs: Vec<S>, rhs: S) -> Result<()> {
        self.add(coeffs, Relation::Ge, rhs)
    }

    pub fn equals(&mut self, coeffs: Vec<S>, rhs: S) -> Result<()> {
        self.add(coeffs, Relation::Eq, rhs)
    }

    /// `z` satisfies every row and `z ≥ 0`, exactly.
    pub fn is_feasible(&self, z: &[S]) -> bool {
        z.len() == self.nvars()
            && z.iter().all(|v| !v.is_negative())
            && self.constraints.iter().all(|c| {
                let lhs = dot(&c.coeffs, z);
                match c.relation {
                    Relation::Ge => lhs >= c.rhs,
                    Relation::Eq => lhs == c.rhs,
                }
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpSolution<S> {
    pub value: S,
    pub point: Vec<S>,
    /// One multiplier per constraint row; nonnegative on `≥` rows.
    pub duals: Vec<S>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnboundedRay<S> {
    pub point: Vec<S>,
    pub direction: Vec<S>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome<S> {
    Optimal(LpSolution<S>),
    Infeasible,
    Unbounded(UnboundedRay<S>),
}

impl<S> LpOutcome<S> {
    pub fn optimal(self) -> Option<LpSolution<S>> {
        match self {
            LpOutcome::Optimal(s) => Some(s),
            _ => None,
        }
    }

    pub fn is_optimal(&self) -> bool {
        matches!(self, LpOutcome::Optimal(_))
    }

    pub fn status(&self) -> &'static str {
        match self {
            LpOutcome::Optimal(_) => "optimal",
            LpOutcome::Infeasible => "infeasible",
            LpOutcome::Unbounded(_) => "unbounded",
        }
    }
}

pub fn solve_min<S: ExactScalar>(problem: &LpProblem<S>) -> Result<LpOutcome<S>> {
    for c in &problem.constraints {
        check_dim(problem.nvars(), c.coeffs.len())?;
    }
    let outcome = Tableau::build(problem).run(problem);
    verify(problem, &outcome)?;
    Ok(outcome)
}

fn verify<S: ExactScalar>(problem: &LpProblem<S>, outcome: &LpOutcome<S>) -> Result<()> {
    match outcome {
        LpOutcome::Infeasible => Ok(()),
        LpOutcome::Optimal(sol) => {
            if !problem.is_feasible(&sol.point) {
                return Err(Error::Lp("optimal point violates a constraint".into()));
            }
            if dot(&problem.objective, &sol.point) != sol.value {
                return Err(Error::Lp("optimal value does not match the point".into()));
            }
            // Dual: Aᵀu ≤ c, u ≥ 0 on ≥ rows, bᵀu = value.
            let dual_ok = problem
                .constraints
                .iter()
                .zip(&sol.duals)
                .all(|(c, u)| c.relation == Relation::Eq || !u.is_negative())
                && (0..problem.nvars()).all(|j| {
                    let col: S = problem
                        .constraints
                        .iter()
                        .zip(&sol.duals)
                        .filter(|(c, u)| !u.is_zero() && !c.coeffs[j].is_zero())
                        .fold(S::zero(), |acc, (c, u)| {
                            acc + c.coeffs[j].clone() * u.clone()
                        });
                    col <= problem.objective[j]
                });
            let dual_value = problem
                .constraints
                .iter()
                .zip(&sol.duals)
                .fold(S::zero(), |acc, (c, u)| acc + c.rhs.clone() * u.clone());
            if !dual_ok || dual_value != sol.value {
                return Err(Error::Lp("dual certificate failed verification".into()));
            }
            Ok(())
        }
        LpOutcome::Unbounded(ray) => {
            let d = &ray.direction;
            let recedes = d.iter().all(|v| !v.is_negative())
                && problem.constraints.iter().all(|c| {
                    let lhs = dot(&c.coeffs, d);
                    match c.relation {
                        Relation::Ge => !lhs.is_negative(),
                        Relation::Eq => lhs.is_zero(),
                    }
                });
            if !problem.is_feasible(&ray.point)
                || !recedes
                || !dot(&problem.objective, d).is_negative()
            {
                return Err(Error::Lp("unbounded ray failed verification".into()));
            }
            Ok(())
        }
    }
}

/// Dense simplex tableau `B⁻¹[A | b]` with the reduced-cost row kept
/// alongside.
struct Tableau<S> {
    rows: Vec<Vec<S>>,
    basis: Vec<usize>,
    /// Reduced costs; the last entry is minus the current objective value.
    costs: Vec<S>,
    nstruct: usize,
    /// First artificial column.
    art_start: usize,
    ncols: usize,
    /// Column holding the identity column of each row (slack or artificial).
    unit_col: Vec<usize>,
    /// `false` where the original row was negated during normalisation.
    sign: Vec<bool>,
}

impl<S: ExactScalar> Tableau<S> {
    fn build(problem: &LpProblem<S>) -> Self {
        let n = problem.nvars();
        let m = problem.constraints.len();

        // Normalise so every right-hand side is nonnegative. Rows of the form
        // `aᵀz ≤ b'` get a basic slack; the rest need an artificial.
        #[derive(Clone, Copy)]
        enum Kind {
            SlackBasic,
            Surplus,
            Equality,
        }
        let mut kinds = Vec::with_capacity(m);
        let mut sign = Vec::with_capacity(m);
        for c in &problem.constraints {
            let (kind, negate) = match c.relation {
                Relation::Ge if !c.rhs.is_positive() => (Kind::SlackBasic, true),
                Relation::Ge => (Kind::Surplus, false),
                Relation::Eq => (Kind::Equality, c.rhs.is_negative()),
            };
            kinds.push(kind);
            sign.push(!negate);
        }
        let nslack = kinds
            .iter()
            .filter(|k| !matches!(k, Kind::Equality))
            .count();
        let nart = kinds
            .iter()
            .filter(|k| !matches!(k, Kind::SlackBasic))
            .count();
        let art_start = n + nslack;
        let ncols = art_start + nart;

        let mut rows = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let mut unit_col = Vec::with_capacity(m);
        let (mut next_slack, mut next_art) = (n, art_start);
        for (i, c) in problem.constraints.iter().enumerate() {
            let flip = |v: &S| if sign[i] { v.clone() } else { -v.clone() };
            let mut row = vec![S::zero(); ncols + 1];
            for (j, a) in c.coeffs.iter().enumerate() {
                row[j] = flip(a);
            }
            row[ncols] = flip(&c.rhs);
            match kinds[i] {
                Kind::SlackBasic => {
                    row[next_slack] = S::one();
                    basis.push(next_slack);
                    unit_col.push(next_slack);
                    next_slack += 1;
                }
                Kind::Surplus => {
                    row[next_slack] = -S::one();
                    next_slack += 1;
                    row[next_art] = S::one();
                    basis.push(next_art);
                    unit_col.push(next_art);
                    next_art += 1;
                }
                Kind::Equality => {
                    row[next_art] = S::one();
                    basis.push(next_art);
                    unit_col.push(next_art);
                    next_art += 1;
                }
            }
            rows.push(row);
        }

        Self {
            rows,
            basis,
            costs: Vec::new(),
            nstruct: n,
            art_start,
            ncols,
            unit_col,
            sign,
        }
    }

    /// Resets the reduced-cost row for the cost vector `c` (length `ncols`).
    fn price(&mut self, c: &[S]) {
        let mut costs: Vec<S> = c.to_vec();
        costs.push(S::zero());
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            let cb = &c[b];
            if cb.is_zero() {
                continue;
            }
            for (k, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    costs[k] = costs[k].clone() - cb.clone() * v.clone();
                }
            }
        }
        self.costs = costs;
    }

    fn pivot(&mut self, p: usize, j: usize) {
        let inv = S::one() / self.rows[p][j].clone();
        for v in self.rows[p].iter_mut() {
            if !v.is_zero() {
                *v = v.clone() * inv.clone();
            }
        }
        let nz: Vec<usize> = (0..=self.ncols)
            .filter(|&k| !self.rows[p][k].is_zero())
            .collect();
        let pivot_row = self.rows[p].clone();
        let eliminate = |row: &mut Vec<S>| {
            let f = row[j].clone();
            if f.is_zero() {
                return;
            }
            for &k in &nz {
                row[k] = row[k].clone() - f.clone() * pivot_row[k].clone();
            }
        };
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != p {
                eliminate(row);
            }
        }
        eliminate(&mut self.costs);
        self.basis[p] = j;
    }

    /// Bland's rule iterations over columns `< limit`. Returns the entering
    /// column of an unbounded direction, if one is found.
    fn iterate(&mut self, limit: usize) -> Option<usize> {
        loop {
            let j = (0..limit).find(|&j| self.costs[j].is_negative())?;
            let mut best: Option<(usize, S)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[j].is_positive() {
                    continue;
                }
                let ratio = row[self.ncols].clone() / row[j].clone();
                let better = match &best {
                    None => true,
                    Some((bi, br)) => {
                        ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi])
                    }
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                Some((p, _)) => self.pivot(p, j),
                None => return Some(j),
            }
        }
    }

    fn basic_point(&self) -> Vec<S> {
        let mut z = vec![S::zero(); self.nstruct];
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            if b < self.nstruct {
                z[b] = row[self.ncols].clone();
            }
        }
        z
    }

    fn run(mut self, problem: &LpProblem<S>) -> LpOutcome<S> {
        if self.art_start < self.ncols {
            let mut c1 = vec![S::zero(); self.ncols];
            for c in c1.iter_mut().skip(self.art_start) {
                *c = S::one();
            }
            self.price(&c1);
            // Phase one is bounded below by zero.
            let _ = self.iterate(self.ncols);
            if !self.costs[self.ncols].is_zero() {
                return LpOutcome::Infeasible;
            }
            // Drive zero-level artificials out where a real column allows it;
            // rows where none does are redundant and stay inert.
            for p in 0..self.rows.len() {
                if self.basis[p] >= self.art_start {
                    if let Some(j) = (0..self.art_start).find(|&j| !self.rows[p][j].is_zero()) {
                        self.pivot(p, j);
                    }
                }
            }
        }

        let mut c2 = vec![S::zero(); self.ncols];
        c2[..self.nstruct].clone_from_slice(&problem.objective);
        self.price(&c2);
        if let Some(j) = self.iterate(self.art_start) {
            let mut direction = vec![S::zero(); self.nstruct];
            if j < self.nstruct {
                direction[j] = S::one();
            }
            for (row, &b) in self.rows.iter().zip(&self.basis) {
                if b < self.nstruct {
                    direction[b] = -row[j].clone();
                }
            }
            return LpOutcome::Unbounded(UnboundedRay {
                point: self.basic_point(),
                direction,
            });
        }

        let point = self.basic_point();
        let value = -self.costs[self.ncols].clone();
        let duals = (0..self.rows.len())
            .map(|i| {
                let col = self.unit_col[i];
                let y = self
                    .rows
                    .iter()
                    .zip(&self.basis)
                    .filter(|(row, &b)| !c2[b].is_zero() && !row[col].is_zero())
                    .fold(S::zero(), |acc, (row, &b)| {
                        acc + c2[b].clone() * row[col].clone()
                    });
                if self.sign[i] {
                    y
                } else {
                    -y
                }
            })
            .collect();
        LpOutcome::Optimal(LpSolution {
            value,
            point,
            duals,
        })
    }
}

/// Minimises `objective · y` over the intersection of the bodies
/// `conv(V_k) + ℝ₊ⁿ`.
///
/// Variables are `y` followed by one convex-combination block `λ⁽ᵏ⁾` per
/// component, with `Σⱼ λ⁽ᵏ⁾ⱼ = 1` and `y − Σⱼ λ⁽ᵏ⁾ⱼ v_{kj} ≥ 0`. The
/// orthant recession cone is what lets the `≥` stand in for equality.
pub fn min_over_vrep_intersection<S: ExactScalar>(
    components: &[PolyhedronVRep],
    objective: &[S],
) -> Result<LpOutcome<S>> {
    solve_min(&vrep_intersection_problem(components, objective)?)
}

pub(crate) fn vrep_intersection_problem<S: ExactScalar>(
    components: &[PolyhedronVRep],
    objective: &[S],
) -> Result<LpProblem<S>> {
    let Some(first) = components.first() else {
        return Err(Error::InvalidArgument("empty component list".into()));
    };
    let n = first.nvars();
    check_dim(n, objective.len())?;
    for c in components {
        check_dim(n, c.nvars())?;
        if c.generators().is_empty() {
            return Err(Error::InvalidArgument(
                "component without generators".into(),
            ));
        }
    }
    let total = n + components
        .iter()
        .map(|c| c.generators().len())
        .sum::<usize>();
    let mut obj = vec![S::zero(); total];
    obj[..n].clone_from_slice(objective);
    let mut problem = LpProblem::new(obj);
    let mut offset = n;
    for c in components {
        let k = c.generators().len();
        let mut convex = vec![S::zero(); total];
        for v in &mut convex[offset..offset + k] {
            *v = S::one();
        }
        problem.equals(convex, S::one())?;
        for i in 0..n {
            let mut row = vec![S::zero(); total];
            row[i] = S::one();
            for (j, g) in c.generators().iter().enumerate() {
                if g[i] > 0 {
                    row[offset + j] = -from_u64::<S>(u64::from(g[i]));
                }
            }
            problem.ge(row, S::zero())?;
        }
        offset += k;
    }
    Ok(problem)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::MonomialIdeal;
    use crate::Rational;
    use num_rational::Ratio;
    use num_traits::Signed;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_fraction(n, d)
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_int(x)).collect()
    }

    #[test]
    fn irreducible_polyhedron_of_m2_squared() {
        let mut p = LpProblem::new(ints(&[1, 1]));
        p.ge(vec![q(1, 2), q(1, 1)], q(1, 1)).unwrap();
        p.ge(vec![q(1, 1), q(1, 2)], q(1, 1)).unwrap();
        let sol = solve_min(&p).unwrap().optimal().unwrap();
        assert_eq!(sol.value, q(4, 3));
        assert_eq!(sol.point, vec![q(2, 3), q(2, 3)]);
        assert_eq!(sol.duals, vec![q(2, 3), q(2, 3)]);
    }

    #[test]
    fn single_bound() {
        let mut p = LpProblem::new(ints(&[1]));
        p.ge(ints(&[1]), q(1, 1)).unwrap();
        assert_eq!(solve_min(&p).unwrap().optimal().unwrap().value, q(1, 1));
    }

    #[test]
    fn infeasible_and_unbounded() {
        let mut p = LpProblem::new(ints(&[1, 0]));
        p.ge(ints(&[-1, -1]), q(1, 1)).unwrap();
        assert_eq!(solve_min(&p).unwrap(), LpOutcome::Infeasible);

        let mut p = LpProblem::new(ints(&[-1, 1]));
        p.ge(ints(&[1, -1]), q(-3, 1)).unwrap();
        match solve_min(&p).unwrap() {
            LpOutcome::Unbounded(ray) => {
                assert!(dot(&ints(&[-1, 1]), &ray.direction).is_negative());
            }
            other => panic!("expected unbounded, got {other:?}"),
        }
    }

    #[test]
    fn equalities_and_negative_rhs() {
        // min x + 2y with x + y = 3 and x - y ≥ -1 puts everything on x.
        let mut p = LpProblem::new(ints(&[1, 2]));
        p.equals(ints(&[1, 1]), q(3, 1)).unwrap();
        p.ge(ints(&[1, -1]), q(-1, 1)).unwrap();
        let sol = solve_min(&p).unwrap().optimal().unwrap();
        assert_eq!(sol.value, q(3, 1));
        assert_eq!(sol.point, ints(&[3, 0]));

        let mut p = LpProblem::new(ints(&[0, 1]));
        p.equals(ints(&[-1, -1]), q(-2, 1)).unwrap();
        p.ge(ints(&[-1, 0]), q(-1, 2)).unwrap();
        let sol = solve_min(&p).unwrap().optimal().unwrap();
        assert_eq!(sol.value, q(3, 2));
    }

    #[test]
    fn redundant_equalities() {
        let mut p = LpProblem::new(ints(&[1, 1]));
        p.equals(ints(&[1, 1]), q(2, 1)).unwrap();
        p.equals(ints(&[2, 2]), q(4, 1)).unwrap();
        p.ge(ints(&[1, 0]), q(1, 2)).unwrap();
        assert_eq!(solve_min(&p).unwrap().optimal().unwrap().value, q(2, 1));
    }

    #[test]
    fn degenerate_cycling_example() {
        // Beale's example, which cycles under the largest-coefficient rule.
        let mut p = LpProblem::new(vec![q(-3, 4), q(20, 1), q(-1, 2), q(6, 1)]);
        p.ge(vec![q(-1, 4), q(8, 1), q(1, 1), q(-9, 1)], q(0, 1))
            .unwrap();
        p.ge(vec![q(-1, 2), q(12, 1), q(1, 2), q(-3, 1)], q(0, 1))
            .unwrap();
        p.ge(vec![q(0, 1), q(0, 1), q(-1, 1), q(0, 1)], q(-1, 1))
            .unwrap();
        let sol = solve_min(&p).unwrap().optimal().unwrap();
        assert_eq!(sol.value, q(-5, 4));
        assert_eq!(sol.point, ints(&[1, 0, 1, 0]));
    }

    #[test]
    fn dimension_mismatch() {
        let mut p = LpProblem::new(ints(&[1, 1]));
        assert!(p.ge(ints(&[1]), q(1, 1)).is_err());
    }

    #[test]
    fn fixed_width_scalar() {
        let mut p: LpProblem<Ratio<i64>> = LpProblem::new(vec![Ratio::from_int(1); 2]);
        p.ge(
            vec![Ratio::new(1, 2), Ratio::from_int(1)],
            Ratio::from_int(1),
        )
        .unwrap();
        p.ge(
            vec![Ratio::from_int(1), Ratio::new(1, 2)],
            Ratio::from_int(1),
        )
        .unwrap();
        assert_eq!(
            solve_min(&p).unwrap().optimal().unwrap().value,
            Ratio::new(4, 3)
        );
    }

    #[test]
    fn vrep_intersection_for_triangle() {
        let comps: Vec<PolyhedronVRep> = [[0, 1], [0, 2], [1, 2]]
            .iter()
            .map(|&[a, b]| {
                let gens = vec![
                    crate::ideal::ExponentVector::pure_power(3, a, 1),
                    crate::ideal::ExponentVector::pure_power(3, b, 1),
                ];
                PolyhedronVRep::newton(&MonomialIdeal::new(3, gens).unwrap()).unwrap()
            })
            .collect();
        let sol = min_over_vrep_intersection(&comps, &ints(&[1, 1, 1]))
            .unwrap()
            .optimal()
            .unwrap();
        assert_eq!(sol.value, q(3, 2));
        assert_eq!(&sol.point[..3], &[q(1, 2), q(1, 2), q(1, 2)]);

        let m32 = MonomialIdeal::maximal(3).power(2).unwrap();
        let single = [PolyhedronVRep::newton(&m32).unwrap()];
        let sol = min_over_vrep_intersection(&single, &ints(&[1, 1, 1]))
            .unwrap()
            .optimal()
            .unwrap();
        assert_eq!(sol.value, q(2, 1));
        assert!(min_over_vrep_intersection::<Rational>(&[], &[]).is_err());
    }
}
