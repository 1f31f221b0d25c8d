//! A small dense two-phase simplex over exact rationals.
//!
//! Pivoting follows Bland's rule (smallest eligible index for both the
//! entering and the leaving variable), so the method terminates without any
//! anti-cycling tolerance. All variables are nonnegative.

use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

#[derive(Debug, Clone)]
pub struct Constraint {
    pub coeffs: Vec<(usize, Rational)>,
    pub relation: Relation,
    pub rhs: Rational,
}

/// Maximise `objective · x` subject to the constraints and `x ≥ 0`.
#[derive(Debug, Clone)]
pub struct LinearProgram {
    num_vars: usize,
    objective: Vec<Rational>,
    constraints: Vec<Constraint>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Optimal { value: Rational, point: Vec<Rational> },
    Infeasible,
    Unbounded,
}

impl LinearProgram {
    pub fn new(num_vars: usize) -> Self {
        LinearProgram {
            num_vars,
            objective: vec![Rational::zero(); num_vars],
            constraints: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn set_objective(&mut self, var: usize, coeff: Rational) {
        self.objective[var] = coeff;
    }

    pub fn add_constraint(&mut self, coeffs: Vec<(usize, Rational)>, relation: Relation, rhs: Rational) {
        debug_assert!(coeffs.iter().all(|(v, _)| *v < self.num_vars));
        self.constraints.push(Constraint { coeffs, relation, rhs });
    }

    /// Whether `point` satisfies every constraint and the sign bounds.
    pub fn is_feasible(&self, point: &[Rational]) -> bool {
        point.len() == self.num_vars
            && point.iter().all(|v| !v.is_negative())
            && self.constraints.iter().all(|c| {
                let lhs = c
                    .coeffs
                    .iter()
                    .fold(Rational::zero(), |acc, (v, a)| acc + a * &point[*v]);
                match c.relation {
                    Relation::Le => lhs <= c.rhs,
                    Relation::Eq => lhs == c.rhs,
                    Relation::Ge => lhs >= c.rhs,
                }
            })
    }

    pub fn solve(&self) -> Outcome {
        Tableau::build(self).solve(&self.objective)
    }
}

struct Tableau {
    /// Each row holds the column coefficients followed by the right-hand side.
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    num_vars: usize,
    /// Columns at or beyond this index are artificial.
    first_artificial: usize,
    width: usize,
}

impl Tableau {
    fn build(lp: &LinearProgram) -> Self {
        let m = lp.constraints.len();
        let num_slack = lp
            .constraints
            .iter()
            .filter(|c| c.relation != Relation::Eq)
            .count();
        let num_artificial = lp
            .constraints
            .iter()
            .filter(|c| {
                let flip = c.rhs.is_negative();
                match c.relation {
                    Relation::Le => flip,
                    Relation::Ge => !flip,
                    Relation::Eq => true,
                }
            })
            .count();
        let first_artificial = lp.num_vars + num_slack;
        let width = first_artificial + num_artificial;
        let mut rows = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let (mut next_slack, mut next_art) = (lp.num_vars, first_artificial);
        for c in &lp.constraints {
            let mut row = vec![Rational::zero(); width + 1];
            let flip = c.rhs.is_negative();
            let sign = if flip { -Rational::one() } else { Rational::one() };
            for (v, a) in &c.coeffs {
                row[*v] += a * &sign;
            }
            row[width] = &c.rhs * &sign;
            let relation = match (c.relation, flip) {
                (Relation::Le, true) => Relation::Ge,
                (Relation::Ge, true) => Relation::Le,
                (r, _) => r,
            };
            let slack_sign = match c.relation {
                Relation::Le => Some(Rational::one()),
                Relation::Ge => Some(-Rational::one()),
                Relation::Eq => None,
            };
            if let Some(s) = slack_sign {
                row[next_slack] = s * &sign;
                if relation == Relation::Le {
                    basis.push(next_slack);
                }
                next_slack += 1;
            }
            if relation != Relation::Le {
                row[next_art] = Rational::one();
                basis.push(next_art);
                next_art += 1;
            }
            rows.push(row);
        }
        Tableau { rows, basis, num_vars: lp.num_vars, first_artificial, width }
    }

    fn solve(mut self, objective: &[Rational]) -> Outcome {
        if self.first_artificial < self.width {
            let mut phase1 = vec![Rational::zero(); self.width];
            for c in &mut phase1[self.first_artificial..] {
                *c = -Rational::one();
            }
            let limit = self.width;
            match self.optimise(&phase1, limit) {
                Some(value) if value.is_zero() => {}
                Some(_) => return Outcome::Infeasible,
                None => unreachable!("phase one is bounded"),
            }
            self.evict_artificials();
        }
        let mut costs = vec![Rational::zero(); self.width];
        costs[..self.num_vars].clone_from_slice(objective);
        match self.optimise(&costs, self.first_artificial) {
            Some(value) => {
                let mut point = vec![Rational::zero(); self.num_vars];
                for (row, &b) in self.rows.iter().zip(&self.basis) {
                    if b < self.num_vars {
                        point[b] = row[self.width].clone();
                    }
                }
                Outcome::Optimal { value, point }
            }
            None => Outcome::Unbounded,
        }
    }

    /// Runs simplex iterations for `costs`, only letting columns below
    /// `limit` enter. Returns the optimum, or `None` when unbounded.
    fn optimise(&mut self, costs: &[Rational], limit: usize) -> Option<Rational> {
        loop {
            let reduced = self.reduced_costs(costs);
            let Some(col) = (0..limit).find(|&j| reduced[j].is_positive()) else {
                let value = self
                    .basis
                    .iter()
                    .zip(&self.rows)
                    .fold(Rational::zero(), |acc, (&b, row)| acc + &costs[b] * &row[self.width]);
                return Some(value);
            };
            let mut best: Option<(Rational, usize)> = None;
            for (r, row) in self.rows.iter().enumerate() {
                if row[col].is_positive() {
                    let ratio = &row[self.width] / &row[col];
                    let better = match &best {
                        None => true,
                        Some((q, br)) => ratio < *q || (ratio == *q && self.basis[r] < self.basis[*br]),
                    };
                    if better {
                        best = Some((ratio, r));
                    }
                }
            }
            let (_, row) = best?;
            self.pivot(row, col);
        }
    }

    fn reduced_costs(&self, costs: &[Rational]) -> Vec<Rational> {
        let mut reduced = costs.to_vec();
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            let cb = &costs[b];
            if cb.is_zero() {
                continue;
            }
            for (j, a) in row[..self.width].iter().enumerate() {
                if !a.is_zero() {
                    reduced[j] -= cb * a;
                }
            }
        }
        reduced
    }

    fn pivot(&mut self, r: usize, col: usize) {
        let inv = self.rows[r][col].recip();
        for a in self.rows[r].iter_mut() {
            if !a.is_zero() {
                *a *= &inv;
            }
        }
        let pivot_row = std::mem::take(&mut self.rows[r]);
        for row in self.rows.iter_mut() {
            if row.is_empty() || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (a, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *a -= &factor * p;
                }
            }
        }
        self.rows[r] = pivot_row;
        self.basis[r] = col;
    }

    /// After a successful phase one, pivots zero-valued artificials out of
    /// the basis and drops rows that turn out to be redundant.
    fn evict_artificials(&mut self) {
        let mut r = 0;
        while r < self.rows.len() {
            if self.basis[r] >= self.first_artificial {
                match (0..self.first_artificial).find(|&j| !self.rows[r][j].is_zero()) {
                    Some(col) => self.pivot(r, col),
                    None => {
                        self.rows.remove(r);
                        self.basis.remove(r);
                        continue;
                    }
                }
            }
            r += 1;
        }
    }
}
