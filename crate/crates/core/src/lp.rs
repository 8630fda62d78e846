//! Two-phase primal simplex over the rationals with Bland's anti-cycling rule.

use num_traits::{Signed, Zero};

use crate::rational::{dot, one, zero, Rational, Vector};

/// Linear constraints over `variable_count` variables. Variables are free
/// unless marked nonnegative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystem {
    variable_count: usize,
    nonneg: Vec<bool>,
    equalities: Vec<(Vector, Rational)>,
    inequalities_ge: Vec<(Vector, Rational)>,
}

impl LinearSystem {
    pub fn new(variable_count: usize) -> Self {
        Self {
            variable_count,
            nonneg: vec![false; variable_count],
            equalities: Vec::new(),
            inequalities_ge: Vec::new(),
        }
    }

    /// System whose variables are all constrained to be nonnegative.
    pub fn nonnegative(variable_count: usize) -> Self {
        let mut s = Self::new(variable_count);
        s.nonneg = vec![true; variable_count];
        s
    }

    pub fn variable_count(&self) -> usize {
        self.variable_count
    }

    pub fn set_nonneg(&mut self, var: usize) -> &mut Self {
        self.nonneg[var] = true;
        self
    }

    pub fn is_nonneg(&self, var: usize) -> bool {
        self.nonneg[var]
    }

    fn check_len(&self, coeffs: &[Rational]) {
        assert_eq!(coeffs.len(), self.variable_count, "constraint row has the wrong length");
    }

    /// `coeffs · x = rhs`
    pub fn add_eq(&mut self, coeffs: Vector, rhs: Rational) -> &mut Self {
        self.check_len(&coeffs);
        self.equalities.push((coeffs, rhs));
        self
    }

    /// `coeffs · x >= rhs`
    pub fn add_ge(&mut self, coeffs: Vector, rhs: Rational) -> &mut Self {
        self.check_len(&coeffs);
        self.inequalities_ge.push((coeffs, rhs));
        self
    }

    /// `coeffs · x <= rhs`
    pub fn add_le(&mut self, coeffs: Vector, rhs: Rational) -> &mut Self {
        self.check_len(&coeffs);
        let neg = coeffs.iter().map(|c| -c).collect();
        self.inequalities_ge.push((neg, -rhs));
        self
    }

    /// Pins `x_var` to `value`.
    pub fn fix(&mut self, var: usize, value: Rational) -> &mut Self {
        let mut row = vec![zero(); self.variable_count];
        row[var] = one();
        self.add_eq(row, value)
    }

    pub fn equalities(&self) -> &[(Vector, Rational)] {
        &self.equalities
    }

    pub fn inequalities_ge(&self) -> &[(Vector, Rational)] {
        &self.inequalities_ge
    }

    /// Exact check of every constraint at `x`.
    pub fn is_satisfied_by(&self, x: &[Rational]) -> bool {
        x.len() == self.variable_count
            && self.nonneg.iter().zip(x).all(|(&nn, v)| !nn || !v.is_negative())
            && self.equalities.iter().all(|(a, b)| &dot(a, x) == b)
            && self.inequalities_ge.iter().all(|(a, b)| &dot(a, x) >= b)
    }

    /// Whether `ray` is a recession direction of the feasible set.
    pub fn is_recession_direction(&self, ray: &[Rational]) -> bool {
        ray.len() == self.variable_count
            && self.nonneg.iter().zip(ray).all(|(&nn, v)| !nn || !v.is_negative())
            && self.equalities.iter().all(|(a, _)| dot(a, ray).is_zero())
            && self.inequalities_ge.iter().all(|(a, _)| !dot(a, ray).is_negative())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Minimize,
    Maximize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Feasible(Vector),
    Infeasible,
    OptimumBounded { value: Rational, witness: Vector },
    /// `witness + t * ray` is feasible for all `t >= 0` and improves the objective.
    Unbounded { witness: Vector, ray: Vector },
}

impl LpOutcome {
    pub fn is_feasible(&self) -> bool {
        !matches!(self, LpOutcome::Infeasible)
    }

    pub fn witness(&self) -> Option<&Vector> {
        match self {
            LpOutcome::Feasible(w) => Some(w),
            LpOutcome::OptimumBounded { witness, .. } | LpOutcome::Unbounded { witness, .. } => Some(witness),
            LpOutcome::Infeasible => None,
        }
    }
}

pub fn lp_feasible(sys: &LinearSystem) -> LpOutcome {
    match solve(sys, None) {
        LpOutcome::OptimumBounded { witness, .. } => LpOutcome::Feasible(witness),
        other => other,
    }
}

pub fn lp_optimize(objective: &[Rational], sys: &LinearSystem, sense: Sense) -> LpOutcome {
    assert_eq!(objective.len(), sys.variable_count, "objective has the wrong length");
    let c: Vector = match sense {
        Sense::Minimize => objective.to_vec(),
        Sense::Maximize => objective.iter().map(|x| -x).collect(),
    };
    match solve(sys, Some(&c)) {
        LpOutcome::OptimumBounded { value, witness } => LpOutcome::OptimumBounded {
            value: if sense == Sense::Maximize { -value } else { value },
            witness,
        },
        other => other,
    }
}

/// Dense tableau in standard form `A y = b, y >= 0, b >= 0`.
struct Tableau {
    rows: Vec<Vector>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    /// Reduced costs for the current objective and the negated objective value.
    cost: Vec<Rational>,
    cost_value: Rational,
    width: usize,
}

enum Step {
    Optimal,
    Unbounded(usize),
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let inv = one() / &self.rows[r][c];
        for x in self.rows[r].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        self.rhs[r] *= &inv;
        let prow = self.rows[r].clone();
        let prhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let f = self.rows[i][c].clone();
            for (x, p) in self.rows[i].iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
            self.rhs[i] -= &f * &prhs;
        }
        if !self.cost[c].is_zero() {
            let f = self.cost[c].clone();
            for (x, p) in self.cost.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
            self.cost_value -= &f * &prhs;
        }
        self.basis[r] = c;
    }

    /// Minimizes with Bland's rule over columns `< allowed`.
    fn run(&mut self, allowed: usize) -> Step {
        loop {
            let Some(c) = (0..allowed).find(|&j| self.cost[j].is_negative()) else {
                return Step::Optimal;
            };
            let mut best: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][c];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / a;
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                Some((r, _)) => self.pivot(r, c),
                None => return Step::Unbounded(c),
            }
        }
    }

    fn point(&self) -> Vector {
        let mut y = vec![zero(); self.width];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < self.width {
                y[b] = self.rhs[i].clone();
            }
        }
        y
    }

    fn set_cost(&mut self, c: &[Rational]) {
        let mut cost: Vector = (0..self.width + self.rows.len())
            .map(|j| c.get(j).cloned().unwrap_or_else(zero))
            .collect();
        let mut value = zero();
        for (i, &b) in self.basis.iter().enumerate() {
            let cb = cost[b].clone();
            if cb.is_zero() {
                continue;
            }
            for (x, a) in cost.iter_mut().zip(&self.rows[i]) {
                if !a.is_zero() {
                    *x -= &cb * a;
                }
            }
            value -= &cb * &self.rhs[i];
        }
        self.cost = cost;
        self.cost_value = value;
    }
}

/// Column layout of the standard-form translation.
struct Layout {
    /// For each original variable: positive part column, optional negative part column.
    columns: Vec<(usize, Option<usize>)>,
}

impl Layout {
    fn to_original(&self, y: &[Rational]) -> Vector {
        self.columns
            .iter()
            .map(|&(p, n)| match n {
                Some(n) => &y[p] - &y[n],
                None => y[p].clone(),
            })
            .collect()
    }
}

fn solve(sys: &LinearSystem, objective: Option<&[Rational]>) -> LpOutcome {
    let mut columns = Vec::with_capacity(sys.variable_count);
    let mut width = 0;
    for &nn in &sys.nonneg {
        if nn {
            columns.push((width, None));
            width += 1;
        } else {
            columns.push((width, Some(width + 1)));
            width += 2;
        }
    }
    let slack_start = width;
    width += sys.inequalities_ge.len();
    let layout = Layout { columns };

    let m = sys.equalities.len() + sys.inequalities_ge.len();
    let total = width + m;
    let mut rows = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    let all = sys
        .equalities
        .iter()
        .map(|r| (r, None))
        .chain(sys.inequalities_ge.iter().enumerate().map(|(k, r)| (r, Some(slack_start + k))));
    for (i, ((coeffs, b), slack)) in all.enumerate() {
        let mut row = vec![zero(); total];
        for (v, a) in coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let (p, n) = layout.columns[v];
            row[p] = a.clone();
            if let Some(n) = n {
                row[n] = -a;
            }
        }
        if let Some(s) = slack {
            row[s] = -one();
        }
        let mut b = b.clone();
        if b.is_negative() {
            for x in row.iter_mut() {
                *x = -&*x;
            }
            b = -b;
        }
        row[width + i] = one();
        rows.push(row);
        rhs.push(b);
    }

    let mut t = Tableau {
        rows,
        rhs,
        basis: (width..total).collect(),
        cost: Vec::new(),
        cost_value: zero(),
        width,
    };
    let phase1: Vector = (0..total).map(|j| if j >= width { one() } else { zero() }).collect();
    t.set_cost(&phase1);
    t.run(total);
    if !t.cost_value.is_zero() {
        return LpOutcome::Infeasible;
    }

    // Drive artificial variables out of the basis; drop redundant rows.
    let mut i = 0;
    while i < t.rows.len() {
        if t.basis[i] >= width {
            match (0..width).find(|&j| !t.rows[i][j].is_zero()) {
                Some(j) => t.pivot(i, j),
                None => {
                    t.rows.remove(i);
                    t.rhs.remove(i);
                    t.basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }

    let witness_of = |t: &Tableau| layout.to_original(&t.point());
    let Some(objective) = objective else {
        return LpOutcome::OptimumBounded {
            value: zero(),
            witness: witness_of(&t),
        };
    };

    let mut c = vec![zero(); width];
    for (v, a) in objective.iter().enumerate() {
        let (p, n) = layout.columns[v];
        c[p] = a.clone();
        if let Some(n) = n {
            c[n] = -a;
        }
    }
    t.set_cost(&c);
    match t.run(width) {
        Step::Optimal => LpOutcome::OptimumBounded {
            value: -t.cost_value.clone(),
            witness: witness_of(&t),
        },
        Step::Unbounded(col) => {
            let mut dir = vec![zero(); width];
            dir[col] = one();
            for (i, &b) in t.basis.iter().enumerate() {
                if b < width {
                    dir[b] = -t.rows[i][col].clone();
                }
            }
            LpOutcome::Unbounded {
                witness: witness_of(&t),
                ray: layout.to_original(&dir),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, vector_from_ints};

    #[test]
    fn simplex_feasible_and_infeasible() {
        let mut s = LinearSystem::nonnegative(2);
        s.add_eq(vector_from_ints(&[1, 1]), int(1));
        let w = lp_feasible(&s);
        assert!(s.is_satisfied_by(w.witness().unwrap()));

        let mut s = LinearSystem::new(1);
        s.add_ge(vector_from_ints(&[1]), int(1)).add_le(vector_from_ints(&[1]), int(0));
        assert_eq!(lp_feasible(&s), LpOutcome::Infeasible);
    }

    #[test]
    fn bounded_and_unbounded_optimum() {
        let mut s = LinearSystem::nonnegative(1);
        s.add_le(vector_from_ints(&[1]), int(3));
        match lp_optimize(&vector_from_ints(&[1]), &s, Sense::Maximize) {
            LpOutcome::OptimumBounded { value, witness } => {
                assert_eq!(value, int(3));
                assert_eq!(witness, vector_from_ints(&[3]));
            }
            other => panic!("{other:?}"),
        }
        let s = LinearSystem::nonnegative(1);
        match lp_optimize(&vector_from_ints(&[1]), &s, Sense::Maximize) {
            LpOutcome::Unbounded { witness, ray } => {
                assert!(s.is_satisfied_by(&witness));
                assert!(s.is_recession_direction(&ray));
                assert!(ray[0].is_positive());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn free_variables_reach_negative_values() {
        let mut s = LinearSystem::new(2);
        s.add_eq(vector_from_ints(&[1, 1]), int(-5)).add_ge(vector_from_ints(&[1, 0]), int(-2));
        match lp_optimize(&vector_from_ints(&[0, 1]), &s, Sense::Maximize) {
            LpOutcome::OptimumBounded { value, witness } => {
                assert_eq!(value, int(-3));
                assert_eq!(witness, vector_from_ints(&[-2, -3]));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn redundant_equalities_are_tolerated() {
        let mut s = LinearSystem::nonnegative(3);
        s.add_eq(vector_from_ints(&[1, 1, 0]), int(2))
            .add_eq(vector_from_ints(&[2, 2, 0]), int(4))
            .add_eq(vector_from_ints(&[0, 0, 1]), int(1));
        match lp_optimize(&vector_from_ints(&[1, 0, 0]), &s, Sense::Maximize) {
            LpOutcome::OptimumBounded { value, .. } => assert_eq!(value, int(2)),
            other => panic!("{other:?}"),
        }
    }
}
