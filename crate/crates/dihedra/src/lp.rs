//! Exact linear programming over any ordered field scalar.
//!
//! Standard form throughout: minimize `cost · x` subject to
//! `constraints · x = rhs`, `x >= 0`. Two-phase dense-tableau simplex with
//! Bland's anti-cycling rule, so identical inputs always pivot identically.

use crate::scalar::Scalar;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LpError {
    #[error("constraint matrix dimensions are inconsistent")]
    DimensionMismatch,
}

/// minimize `cost · x` subject to `constraints · x = rhs`, `x >= 0`.
#[derive(Clone, Debug)]
pub struct RationalLp<S> {
    pub constraints: Vec<Vec<S>>,
    pub rhs: Vec<S>,
    pub cost: Vec<S>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome<S> {
    /// `dual` has one multiplier per constraint row; `cost·point` equals
    /// `dual·rhs` exactly.
    Optimal { point: Vec<S>, value: S, dual: Vec<S> },
    /// `farkas · constraints <= 0` componentwise while `farkas · rhs > 0`.
    Infeasible { farkas: Vec<S> },
    /// `point` is feasible; `point + t*ray` stays feasible for all `t >= 0`
    /// with `cost · ray < 0`.
    Unbounded { point: Vec<S>, ray: Vec<S> },
}

struct Tableau<S> {
    n: usize,             // original variables (artificials live at n..n+rows)
    rows: Vec<Vec<S>>,    // each of length n + m + 1, rhs last
    basis: Vec<usize>,
    row_origin: Vec<usize>, // original constraint index (rows can be dropped)
    z1: Vec<S>,           // phase-1 reduced costs + negated objective value
    z2: Vec<S>,           // phase-2 reduced costs, kept in lockstep
    enter: S,             // reduced costs above -enter do not enter the basis
}

impl<S: Scalar> Tableau<S> {
    fn rhs_col(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len() - 1)
    }

    fn pivot(&mut self, r: usize, col: usize) {
        let inv = self.rows[r][col].clone();
        for x in self.rows[r].iter_mut() {
            *x = x.clone() / inv.clone();
        }
        let pivot_row = self.rows[r].clone();
        let reduce = |row: &mut Vec<S>| {
            let f = row[col].clone();
            if !f.is_zero() {
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x = x.clone() - f.clone() * p.clone();
                }
            }
        };
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r {
                reduce(row);
            }
        }
        reduce(&mut self.z1);
        reduce(&mut self.z2);
        self.basis[r] = col;
    }

    /// Bland: entering = lowest-index column with negative reduced cost;
    /// leaving = min-ratio row, ties broken by lowest basic variable index.
    /// Returns Err(col) when the entering column certifies unboundedness.
    fn run(&mut self, phase_one: bool, allowed: usize) -> Result<(), usize> {
        loop {
            let z = if phase_one { &self.z1 } else { &self.z2 };
            let Some(col) = (0..allowed).find(|&j| z[j] < -self.enter.clone()) else {
                return Ok(());
            };
            let rhs = self.rhs_col();
            let mut leave: Option<usize> = None;
            for i in 0..self.rows.len() {
                if self.rows[i][col] > S::zero() {
                    let better = match leave {
                        None => true,
                        Some(l) => {
                            let cmp_new = self.rows[i][rhs].clone() * self.rows[l][col].clone();
                            let cmp_old = self.rows[l][rhs].clone() * self.rows[i][col].clone();
                            cmp_new < cmp_old
                                || (cmp_new == cmp_old && self.basis[i] < self.basis[l])
                        }
                    };
                    if better {
                        leave = Some(i);
                    }
                }
            }
            match leave {
                Some(r) => self.pivot(r, col),
                None => return Err(col),
            }
        }
    }

    fn point(&self) -> Vec<S> {
        let rhs = self.rhs_col();
        let mut x = vec![S::zero(); self.n];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < self.n {
                x[b] = self.rows[i][rhs].clone();
            }
        }
        x
    }
}

/// Two-phase simplex: exact for exact scalars. For the machine floats the
/// feasibility verdict and the pivot-selection cutoffs absorb roundoff at
/// the [`crate::scalar::verdict_slack`] scale, so near-ties resolve toward
/// feasibility rather than toward a noise-driven certificate.
pub fn solve<S: Scalar + 'static>(lp: &RationalLp<S>) -> Result<LpOutcome<S>, LpError> {
    let slack = crate::scalar::verdict_slack::<S>();
    let m = lp.constraints.len();
    let n = lp.cost.len();
    if lp.rhs.len() != m || lp.constraints.iter().any(|r| r.len() != n) {
        return Err(LpError::DimensionMismatch);
    }

    // Normalize to rhs >= 0, remembering flipped rows for dual recovery.
    let mut row_sign = vec![false; m];
    let mut rows: Vec<Vec<S>> = Vec::with_capacity(m);
    for i in 0..m {
        let flip = lp.rhs[i] < S::zero();
        row_sign[i] = flip;
        let mut row: Vec<S> = lp.constraints[i]
            .iter()
            .map(|v| if flip { -v.clone() } else { v.clone() })
            .collect();
        // artificial block
        for j in 0..m {
            row.push(if j == i { S::one() } else { S::zero() });
        }
        row.push(if flip { -lp.rhs[i].clone() } else { lp.rhs[i].clone() });
        rows.push(row);
    }

    // Reduced-cost rows against the all-artificial starting basis.
    let width = n + m + 1;
    let mut z1 = vec![S::zero(); width];
    let mut z2 = vec![S::zero(); width];
    for j in 0..width {
        let col_sum = rows.iter().fold(S::zero(), |a, r| a + r[j].clone());
        let c1 = if (n..n + m).contains(&j) { S::one() } else { S::zero() };
        z1[j] = c1 - col_sum;
        if j < n {
            z2[j] = lp.cost[j].clone();
        }
    }

    let mut t = Tableau {
        n,
        rows,
        basis: (n..n + m).collect(),
        row_origin: (0..m).collect(),
        z1,
        z2,
        // entering cutoff three orders under the verdict cutoff, so an
        // early stop cannot push the phase-1 value past the verdict
        enter: slack.clone() / crate::scalar::from_count(1 << 10),
    };

    // Phase 1: minimize the artificial total. Artificials may re-enter here.
    t.run(true, n + m).expect("phase-1 objective is bounded below by zero");
    let phase1_value = -t.z1[t.rhs_col()].clone();
    if phase1_value > slack {
        // farkas_i = multiplier y_i = 1 - reduced cost of artificial i,
        // pushed back through the sign normalization.
        let farkas: Vec<S> = (0..m)
            .map(|i| {
                let y = S::one() - t.z1[n + i].clone();
                if row_sign[i] { -y } else { y }
            })
            .collect();
        debug_assert!(slack > S::zero() || verify_farkas(lp, &farkas));
        return Ok(LpOutcome::Infeasible { farkas });
    }

    // Drive leftover artificials out of the basis; a row with no usable
    // pivot is a redundant constraint and is dropped (its dual multiplier
    // is zero). Entries at the slack scale are noise, not pivots.
    let mut r = 0;
    while r < t.rows.len() {
        if t.basis[r] >= n {
            if let Some(col) = (0..n).find(|&j| t.rows[r][j].abs() > slack) {
                t.pivot(r, col);
            } else {
                t.rows.remove(r);
                t.basis.remove(r);
                t.row_origin.remove(r);
                continue;
            }
        }
        r += 1;
    }

    // Phase 2: original objective, artificial columns barred from entering.
    match t.run(false, n) {
        Ok(()) => {
            let point = t.point();
            let value = dot(&lp.cost, &point);
            let mut dual = vec![S::zero(); m];
            for &orig in &t.row_origin {
                let y = -t.z2[n + orig].clone();
                dual[orig] = if row_sign[orig] { -y } else { y };
            }
            debug_assert!(slack > S::zero() || dot(&lp.rhs, &dual) == value);
            Ok(LpOutcome::Optimal { point, value, dual })
        }
        Err(col) => {
            let point = t.point();
            let mut ray = vec![S::zero(); n];
            ray[col] = S::one();
            for (i, &b) in t.basis.iter().enumerate() {
                debug_assert!(b < n, "artificials were pivoted out after phase 1");
                ray[b] = -t.rows[i][col].clone();
            }
            Ok(LpOutcome::Unbounded { point, ray })
        }
    }
}

fn dot<S: Scalar>(a: &[S], b: &[S]) -> S {
    a.iter()
        .zip(b)
        .fold(S::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// `farkas · constraints <= 0` componentwise and `farkas · rhs > 0`.
pub fn verify_farkas<S: Scalar>(lp: &RationalLp<S>, farkas: &[S]) -> bool {
    if farkas.len() != lp.constraints.len() {
        return false;
    }
    let n = lp.cost.len();
    (0..n).all(|j| {
        let col: S = lp
            .constraints
            .iter()
            .zip(farkas)
            .fold(S::zero(), |a, (row, y)| a + row[j].clone() * y.clone());
        col <= S::zero()
    }) && dot(&lp.rhs, farkas) > S::zero()
}

/// Does `point` satisfy `constraints · point = rhs`, `point >= 0`?
pub fn verify_point<S: Scalar>(lp: &RationalLp<S>, point: &[S]) -> bool {
    point.len() == lp.cost.len()
        && point.iter().all(|x| *x >= S::zero())
        && lp
            .constraints
            .iter()
            .zip(&lp.rhs)
            .all(|(row, b)| dot(row, point) == *b)
}

/// The standard-form dual: maximize `rhs · y` over free `y` with
/// `yᵀ·constraints <= cost`.
pub fn dualize<S: Scalar>(lp: &RationalLp<S>) -> GeneralProgram<S> {
    let m = lp.constraints.len();
    let n = lp.cost.len();
    let mut rows = Vec::with_capacity(n);
    for j in 0..n {
        let coeffs: Vec<S> = (0..m).map(|i| lp.constraints[i][j].clone()).collect();
        rows.push((coeffs, Relation::Le, lp.cost[j].clone()));
    }
    GeneralProgram {
        sense: Sense::Maximize,
        objective: lp.rhs.clone(),
        rows,
        free: vec![true; m],
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Minimize,
    Maximize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

/// A program in natural (non-standard) form: optional free variables and
/// inequality rows of either direction.
#[derive(Clone, Debug)]
pub struct GeneralProgram<S> {
    pub sense: Sense,
    pub objective: Vec<S>,
    /// (coefficients, relation, rhs) per row.
    pub rows: Vec<(Vec<S>, Relation, S)>,
    /// free[j] — may take either sign; otherwise x_j >= 0.
    pub free: Vec<bool>,
}

/// Standard form plus the bookkeeping to map answers back.
pub struct StandardForm<S> {
    pub lp: RationalLp<S>,
    sense: Sense,
    /// var j of the original program = std[pos[j]] - std[neg[j]] (neg absent
    /// for nonnegative variables).
    pos: Vec<usize>,
    neg: Vec<Option<usize>>,
}

impl<S: Scalar> GeneralProgram<S> {
    /// Split free variables, add slack/surplus columns, negate a Maximize
    /// objective. Feasibility and optimal value (up to the sense sign) are
    /// preserved.
    pub fn to_standard_form(&self) -> StandardForm<S> {
        let n = self.objective.len();
        let mut pos = vec![0usize; n];
        let mut neg = vec![None; n];
        let mut width = 0;
        for j in 0..n {
            pos[j] = width;
            width += 1;
            if self.free[j] {
                neg[j] = Some(width);
                width += 1;
            }
        }
        let n_slacks = self
            .rows
            .iter()
            .filter(|(_, rel, _)| *rel != Relation::Eq)
            .count();
        let total = width + n_slacks;

        let mut cost = vec![S::zero(); total];
        for j in 0..n {
            let c = match self.sense {
                Sense::Minimize => self.objective[j].clone(),
                Sense::Maximize => -self.objective[j].clone(),
            };
            cost[pos[j]] = c.clone();
            if let Some(k) = neg[j] {
                cost[k] = -c;
            }
        }

        let mut constraints = Vec::with_capacity(self.rows.len());
        let mut rhs = Vec::with_capacity(self.rows.len());
        let mut slack = width;
        for (coeffs, rel, b) in &self.rows {
            let mut row = vec![S::zero(); total];
            for j in 0..n {
                row[pos[j]] = coeffs[j].clone();
                if let Some(k) = neg[j] {
                    row[k] = -coeffs[j].clone();
                }
            }
            match rel {
                Relation::Le => {
                    row[slack] = S::one();
                    slack += 1;
                }
                Relation::Ge => {
                    row[slack] = -S::one();
                    slack += 1;
                }
                Relation::Eq => {}
            }
            constraints.push(row);
            rhs.push(b.clone());
        }

        StandardForm {
            lp: RationalLp { constraints, rhs, cost },
            sense: self.sense,
            pos,
            neg,
        }
    }
}

impl<S: Scalar> StandardForm<S> {
    pub fn recover_point(&self, std_point: &[S]) -> Vec<S> {
        self.pos
            .iter()
            .zip(&self.neg)
            .map(|(&p, n)| match n {
                Some(k) => std_point[p].clone() - std_point[*k].clone(),
                None => std_point[p].clone(),
            })
            .collect()
    }

    pub fn recover_value(&self, std_value: S) -> S {
        match self.sense {
            Sense::Minimize => std_value,
            Sense::Maximize => -std_value,
        }
    }

    /// Row multipliers of the original program (the standard form keeps rows
    /// one-to-one; only the objective sign may flip).
    pub fn recover_dual(&self, std_dual: &[S]) -> Vec<S> {
        std_dual
            .iter()
            .map(|y| match self.sense {
                Sense::Minimize => y.clone(),
                Sense::Maximize => -y.clone(),
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational;
    use crate::Rational;
    use num_traits::Zero;

    fn lp(constraints: Vec<Vec<i64>>, rhs: Vec<i64>, cost: Vec<i64>) -> RationalLp<Rational> {
        RationalLp {
            constraints: constraints
                .into_iter()
                .map(|r| r.into_iter().map(|v| rational(v, 1)).collect())
                .collect(),
            rhs: rhs.into_iter().map(|v| rational(v, 1)).collect(),
            cost: cost.into_iter().map(|v| rational(v, 1)).collect(),
        }
    }

    #[test]
    fn feasible_vertex() {
        let p = lp(vec![vec![1, 1]], vec![1], vec![0, 0]);
        match solve(&p).unwrap() {
            LpOutcome::Optimal { point, value, dual } => {
                assert!(verify_point(&p, &point));
                assert_eq!(value, rational(0, 1));
                assert_eq!(dual.len(), 1);
            }
            other => panic!("expected optimal, got {other:?}"),
        }
    }

    #[test]
    fn infeasible_with_negated_row_farkas() {
        let p = lp(vec![vec![1]], vec![-1], vec![0]);
        match solve(&p).unwrap() {
            LpOutcome::Infeasible { farkas } => {
                assert_eq!(farkas, vec![rational(-1, 1)]);
                assert!(verify_farkas(&p, &farkas));
            }
            other => panic!("expected infeasible, got {other:?}"),
        }
    }

    #[test]
    fn unbounded_ray() {
        let p = lp(vec![vec![1, -1]], vec![0], vec![-1, 0]);
        match solve(&p).unwrap() {
            LpOutcome::Unbounded { point, ray } => {
                assert!(verify_point(&p, &point));
                assert_eq!(ray, vec![rational(1, 1), rational(1, 1)]);
                // cost decreases along the ray, constraints unchanged.
                assert!(ray.iter().all(|v| *v >= rational(0, 1)));
            }
            other => panic!("expected unbounded, got {other:?}"),
        }
    }

    #[test]
    fn duplicate_rows_are_dropped_with_zero_multiplier() {
        let p = lp(vec![vec![1], vec![1]], vec![1, 1], vec![1]);
        match solve(&p).unwrap() {
            LpOutcome::Optimal { point, value, dual } => {
                assert_eq!(point, vec![rational(1, 1)]);
                assert_eq!(value, rational(1, 1));
                assert_eq!(dual.len(), 2);
                let dual_val = dual[0].clone() + dual[1].clone();
                assert_eq!(dual_val, rational(1, 1));
            }
            other => panic!("expected optimal, got {other:?}"),
        }
    }

    #[test]
    fn dual_program_of_unit_sum() {
        let p = lp(vec![vec![1, 1]], vec![1], vec![0, 0]);
        let dual = dualize(&p);
        assert_eq!(dual.rows.len(), 2);
        assert!(dual.rows.iter().all(|(_, rel, b)| *rel == Relation::Le && *b == rational(0, 1)));
        let std = dual.to_standard_form();
        match solve(&std.lp).unwrap() {
            LpOutcome::Optimal { value, .. } => {
                assert_eq!(std.recover_value(value), rational(0, 1))
            }
            other => panic!("expected optimal, got {other:?}"),
        }
    }

    #[test]
    fn zero_constraint_dual() {
        let p = lp(vec![], vec![], vec![1, 2]);
        let dual = dualize(&p);
        assert!(dual.objective.is_empty());
        assert_eq!(dual.rows.len(), 2);
        match solve(&p).unwrap() {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, rational(0, 1)),
            other => panic!("expected optimal, got {other:?}"),
        }
    }

    #[test]
    fn standard_form_recovers_free_maximum() {
        let gp = GeneralProgram {
            sense: Sense::Maximize,
            objective: vec![rational(1, 1)],
            rows: vec![(vec![rational(1, 1)], Relation::Le, rational(3, 1))],
            free: vec![true],
        };
        let std = gp.to_standard_form();
        match solve(&std.lp).unwrap() {
            LpOutcome::Optimal { point, value, .. } => {
                assert_eq!(std.recover_value(value), rational(3, 1));
                assert_eq!(std.recover_point(&point), vec![rational(3, 1)]);
            }
            other => panic!("expected optimal, got {other:?}"),
        }
    }

    #[test]
    fn contradictory_bounds_stay_infeasible() {
        let gp = GeneralProgram {
            sense: Sense::Minimize,
            objective: vec![rational(0, 1)],
            rows: vec![
                (vec![rational(1, 1)], Relation::Ge, rational(2, 1)),
                (vec![rational(1, 1)], Relation::Le, rational(1, 1)),
            ],
            free: vec![true],
        };
        let std = gp.to_standard_form();
        match solve(&std.lp).unwrap() {
            LpOutcome::Infeasible { farkas } => assert!(verify_farkas(&std.lp, &farkas)),
            other => panic!("expected infeasible, got {other:?}"),
        }
    }

    /// Brute-force oracle: optimal value over all basic feasible points,
    /// found by solving every square subsystem by Gaussian elimination.
    fn brute_force_optimum(p: &RationalLp<Rational>) -> Option<Rational> {
        let m = p.constraints.len();
        let n = p.cost.len();
        let mut best: Option<Rational> = None;
        let mut cols: Vec<usize> = Vec::new();
        // enumerate all column subsets of size <= m
        for mask in 0u32..1 << n {
            if mask.count_ones() as usize > m {
                continue;
            }
            cols.clear();
            cols.extend((0..n).filter(|j| mask >> j & 1 == 1));
            if let Some(x) = solve_subsystem(p, &cols) {
                if verify_point(p, &x) {
                    let v = x
                        .iter()
                        .zip(&p.cost)
                        .fold(rational(0, 1), |a, (xi, ci)| a + xi.clone() * ci.clone());
                    best = Some(match best {
                        None => v,
                        Some(b) if v < b => v,
                        Some(b) => b,
                    });
                }
            }
        }
        best
    }

    /// Least-squares-free exact solve of A[:, cols] y = rhs (unique solution
    /// or bust), embedded back into the full variable vector.
    fn solve_subsystem(p: &RationalLp<Rational>, cols: &[usize]) -> Option<Vec<Rational>> {
        let m = p.constraints.len();
        let k = cols.len();
        let mut a: Vec<Vec<Rational>> = (0..m)
            .map(|i| {
                let mut row: Vec<Rational> =
                    cols.iter().map(|&j| p.constraints[i][j].clone()).collect();
                row.push(p.rhs[i].clone());
                row
            })
            .collect();
        let mut pivot_of_col = vec![usize::MAX; k];
        let mut r = 0;
        for c in 0..k {
            let Some(pr) = (r..m).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, pr);
            let inv = a[r][c].clone();
            for x in a[r].iter_mut() {
                *x = x.clone() / inv.clone();
            }
            for i in 0..m {
                if i != r && !a[i][c].is_zero() {
                    let f = a[i][c].clone();
                    for j in 0..=k {
                        let delta = f.clone() * a[r][j].clone();
                        a[i][j] = a[i][j].clone() - delta;
                    }
                }
            }
            pivot_of_col[c] = r;
            r += 1;
        }
        // require a unique solution and consistency
        if pivot_of_col.iter().any(|&pc| pc == usize::MAX) {
            return None;
        }
        for i in r..m {
            if !a[i][k].is_zero() {
                return None;
            }
        }
        let mut x = vec![rational(0, 1); p.cost.len()];
        for (c, &j) in cols.iter().enumerate() {
            x[j] = a[pivot_of_col[c]][k].clone();
        }
        Some(x)
    }

    #[test]
    fn agrees_with_vertex_enumeration_on_small_random_programs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(20260819);
        for _ in 0..150 {
            let m = rng.gen_range(1..=4);
            let n = rng.gen_range(1..=6);
            let p = lp(
                (0..m)
                    .map(|_| (0..n).map(|_| rng.gen_range(-3i64..=3)).collect())
                    .collect(),
                (0..m).map(|_| rng.gen_range(-3i64..=3)).collect(),
                (0..n).map(|_| rng.gen_range(-3i64..=3)).collect(),
            );
            match solve(&p).unwrap() {
                LpOutcome::Optimal { point, value, dual } => {
                    assert!(verify_point(&p, &point));
                    assert_eq!(
                        value,
                        dual.iter()
                            .zip(&p.rhs)
                            .fold(rational(0, 1), |a, (y, b)| a + y.clone() * b.clone())
                    );
                    assert_eq!(Some(value), brute_force_optimum(&p));
                }
                LpOutcome::Infeasible { farkas } => {
                    assert!(verify_farkas(&p, &farkas));
                    assert_eq!(None, brute_force_optimum(&p));
                }
                LpOutcome::Unbounded { point, ray } => {
                    assert!(verify_point(&p, &point));
                    assert!(ray.iter().all(|v| *v >= rational(0, 1)));
                    let a_ray_zero = p.constraints.iter().all(|row| {
                        row.iter()
                            .zip(&ray)
                            .fold(rational(0, 1), |a, (c, r)| a + c.clone() * r.clone())
                            == rational(0, 1)
                    });
                    assert!(a_ray_zero);
                    let c_ray = p
                        .cost
                        .iter()
                        .zip(&ray)
                        .fold(rational(0, 1), |a, (c, r)| a + c.clone() * r.clone());
                    assert!(c_ray < rational(0, 1));
                }
            }
        }
    }

    #[test]
    fn strong_duality_on_random_optimal_programs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut checked = 0;
        for _ in 0..200 {
            let m = rng.gen_range(1..=3);
            let n = rng.gen_range(1..=5);
            let p = lp(
                (0..m)
                    .map(|_| (0..n).map(|_| rng.gen_range(-3i64..=3)).collect())
                    .collect(),
                (0..m).map(|_| rng.gen_range(-3i64..=3)).collect(),
                (0..n).map(|_| rng.gen_range(-3i64..=3)).collect(),
            );
            let LpOutcome::Optimal { value, .. } = solve(&p).unwrap() else {
                continue;
            };
            let std_dual = dualize(&p).to_standard_form();
            match solve(&std_dual.lp).unwrap() {
                LpOutcome::Optimal { value: dv, .. } => {
                    assert_eq!(std_dual.recover_value(dv), value);
                    checked += 1;
                }
                other => panic!("dual of optimal program must be optimal, got {other:?}"),
            }
        }
        assert!(checked > 20, "sampled too few optimal programs: {checked}");
    }

    #[test]
    fn determinism() {
        let p = lp(
            vec![vec![1, 2, -1], vec![0, 1, 1]],
            vec![3, 2],
            vec![1, -1, 0],
        );
        let a = format!("{:?}", solve(&p).unwrap());
        let b = format!("{:?}", solve(&p).unwrap());
        assert_eq!(a, b);
    }
}
