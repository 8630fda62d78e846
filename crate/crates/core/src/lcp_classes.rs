//! Classes decided by families of feasibility problems: semipositivity,
//! (strict) semimonotonicity, P#, strict range semimonotonicity and
//! copositivity on polyhedral cones.

use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::range_membership_rows;
use crate::lp::{lp_feasible, lp_optimize, LinearSystem, LpOutcome, Sense};
use crate::matrix::Matrix;
use crate::minors::{check_cap, subset_of};
use crate::rational::{dot, int, is_zero_vector, one, ones, zero, Rational, Vector};

/// `0 != x >= 0` with `Ax >= 0`.
pub fn is_weakly_semipositive(a: &Matrix) -> bool {
    weakly_semipositive_witness(a).is_some()
}

pub fn weakly_semipositive_witness(a: &Matrix) -> Option<Vector> {
    let n = a.cols();
    let mut sys = LinearSystem::nonnegative(n);
    sys.add_eq(ones(n), one());
    for i in 0..a.rows() {
        sys.add_ge(a.row(i).to_vec(), zero());
    }
    match lp_feasible(&sys) {
        LpOutcome::Feasible(x) => Some(x),
        _ => None,
    }
}

/// `x > 0` with `Ax > 0`; by homogeneity `x >= e, Ax >= e` is equivalent.
pub fn is_semipositive(a: &Matrix) -> bool {
    semipositive_witness(a).is_some()
}

pub fn semipositive_witness(a: &Matrix) -> Option<Vector> {
    let n = a.cols();
    let mut sys = LinearSystem::new(n);
    for j in 0..n {
        let mut unit = vec![zero(); n];
        unit[j] = one();
        sys.add_ge(unit, one());
    }
    for i in 0..a.rows() {
        sys.add_ge(a.row(i).to_vec(), one());
    }
    match lp_feasible(&sys) {
        LpOutcome::Feasible(x) => Some(x),
        _ => None,
    }
}

fn all_principal<F>(a: &Matrix, cap: usize, test: F) -> Result<bool>
where
    F: Fn(&Matrix) -> bool + Sync,
{
    let n = a.order()?;
    check_cap(n, cap)?;
    Ok((1usize..1 << n).into_par_iter().all(|mask| test(&a.principal(&subset_of(mask, n)))))
}

/// Every principal submatrix is weakly semipositive.
pub fn is_semimonotone(a: &Matrix, cap: usize) -> Result<bool> {
    all_principal(a, cap, is_weakly_semipositive)
}

/// Every principal submatrix is semipositive.
pub fn is_strictly_semimonotone(a: &Matrix, cap: usize) -> Result<bool> {
    all_principal(a, cap, is_semipositive)
}

/// All proper principal submatrices are semimonotone while `a` is not.
pub fn is_almost_semimonotone(a: &Matrix, cap: usize) -> Result<bool> {
    let n = a.order()?;
    check_cap(n, cap)?;
    if is_semimonotone(a, cap)? {
        return Ok(false);
    }
    let full = (1usize << n) - 1;
    Ok((1usize..full)
        .into_par_iter()
        .all(|mask| is_weakly_semipositive(&a.principal(&subset_of(mask, n)))))
}

/// Adds `w · x = 0` for each row `w` describing `R(A)`; the first `n` variables are `x`.
pub(crate) fn add_range_constraints(sys: &mut LinearSystem, rows: &[Vector], offset: usize) {
    let width = sys.variable_count();
    for w in rows {
        let mut row = vec![zero(); width];
        row[offset..offset + w.len()].clone_from_slice(w);
        sys.add_eq(row, zero());
    }
}

/// Nonzero `x ∈ R(A)` with `x_i (Ax)_i <= 0` for all `i`, if any, searched
/// orthant by orthant in increasing bitmask order (bit set = negative sign).
pub fn p_hash_violation(a: &Matrix, cap: usize) -> Result<Option<Vector>> {
    let n = a.order()?;
    check_cap(n, cap)?;
    let w = range_membership_rows(a);
    Ok((0usize..1 << n).into_par_iter().find_map_first(|mask| {
        let s: Vec<Rational> = (0..n).map(|i| if mask >> i & 1 == 1 { int(-1) } else { one() }).collect();
        let mut sys = LinearSystem::new(n);
        add_range_constraints(&mut sys, &w, 0);
        for i in 0..n {
            let mut row = vec![zero(); n];
            row[i] = s[i].clone();
            sys.add_ge(row, zero());
            let ax: Vector = a.row(i).iter().map(|x| x * &s[i]).collect();
            sys.add_le(ax, zero());
        }
        sys.add_eq(s.clone(), one());
        match lp_feasible(&sys) {
            LpOutcome::Feasible(x) => Some(x),
            _ => None,
        }
    }))
}

/// Checks a claimed P# counterexample directly.
pub fn is_p_hash_violation(a: &Matrix, x: &[Rational]) -> bool {
    let ax = a.mul_vec(x);
    !is_zero_vector(x)
        && range_membership_rows(a).iter().all(|w| dot(w, x).is_zero())
        && x.iter().zip(&ax).all(|(xi, yi)| !(xi * yi).is_positive())
}

/// No nonzero vector of `R(A)` has its sign reversed by `A`.
pub fn is_p_hash(a: &Matrix, cap: usize) -> Result<bool> {
    Ok(p_hash_violation(a, cap)?.is_none())
}

/// Nonzero `x ∈ R(A)`, `x >= 0` with `x_i (Ax)_i <= 0` on its support, if any.
pub fn strict_range_semimonotone_violation(a: &Matrix, cap: usize) -> Result<Option<Vector>> {
    let n = a.order()?;
    check_cap(n, cap)?;
    let w = range_membership_rows(a);
    Ok((1usize..1 << n).into_par_iter().find_map_first(|mask| {
        let support = subset_of(mask, n);
        let mut sys = LinearSystem::nonnegative(n);
        add_range_constraints(&mut sys, &w, 0);
        for i in 0..n {
            if mask >> i & 1 == 0 {
                sys.fix(i, zero());
            }
        }
        let mut sum = vec![zero(); n];
        for &i in &support {
            sum[i] = one();
            sys.add_le(a.row(i).to_vec(), zero());
        }
        sys.add_eq(sum, one());
        match lp_feasible(&sys) {
            LpOutcome::Feasible(x) => Some(x),
            _ => None,
        }
    }))
}

pub fn is_strictly_range_semimonotone(a: &Matrix, cap: usize) -> Result<bool> {
    Ok(strict_range_semimonotone_violation(a, cap)?.is_none())
}

/// Polyhedral cone given by generators, optionally also by the constraint
/// form `x >= 0, w · x = 0` for each stored row `w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeRep {
    pub ambient_dim: usize,
    pub generators: Vec<Vector>,
    pub subspace_rows: Option<Vec<Vector>>,
}

impl ConeRep {
    pub fn from_generators(ambient_dim: usize, generators: Vec<Vector>) -> Self {
        Self {
            ambient_dim,
            generators,
            subspace_rows: None,
        }
    }

    pub fn nonnegative_orthant(n: usize) -> Self {
        Self::from_generators(n, (0..n).map(|i| crate::rational::unit(n, i)).collect())
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty()
    }

    /// Membership through the constraint form when present, else by conic combination.
    pub fn contains(&self, x: &[Rational]) -> bool {
        if let Some(rows) = &self.subspace_rows {
            return x.iter().all(|v| !v.is_negative())
                && rows.iter().all(|w| crate::rational::dot(w, x).is_zero());
        }
        let k = self.generators.len();
        let mut sys = LinearSystem::nonnegative(k);
        for i in 0..self.ambient_dim {
            sys.add_eq(self.generators.iter().map(|g| g[i].clone()).collect(), x[i].clone());
        }
        lp_feasible(&sys).is_feasible()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Copositivity {
    StrictlyCopositive,
    /// Minimum zero on the cone, attained at the witness.
    CopositiveOnly(Vector),
    NotCopositive(Vector),
}

/// Sign of `min xᵀQx` over the cone, decided exactly.
///
/// With `R` the generator matrix and `M = Rᵀ((Q+Qᵀ)/2)R`, the minimum of
/// `λᵀMλ` over the standard simplex is attained at a KKT point. For a fixed
/// support `J`, KKT points solve `λ_J >= 0`, `λ_{J^c} = 0`, `eᵀλ = 1`,
/// `(Mλ)_J = μe`, `(Mλ)_{J^c} >= μe`, and there `λᵀMλ = μ`. Minimizing `μ`
/// over each support therefore yields the global minimum.
pub fn copositivity_on_cone(q: &Matrix, cone: &ConeRep, cap: usize) -> Result<Copositivity> {
    let n = q.order()?;
    if cone.ambient_dim != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: cone.ambient_dim,
        });
    }
    if cone.is_trivial() {
        return Err(Error::EmptyCone);
    }
    let k = cone.generators.len();
    check_cap(k, cap)?;
    let r = Matrix::from_columns(n, &cone.generators);
    if !is_pointed(&r) {
        return Err(Error::NotPointed);
    }
    let half = crate::rational::frac(1, 2);
    let sym = (q + &q.transpose()).scale(&half);
    let m = &(&r.transpose() * &sym) * &r;

    // Variables: λ (k, nonnegative) then μ (free).
    let results: Vec<(Rational, Vector)> = (1usize..1 << k)
        .into_par_iter()
        .map(|mask| {
            let mut sys = LinearSystem::new(k + 1);
            for j in 0..k {
                sys.set_nonneg(j);
                if mask >> j & 1 == 0 {
                    sys.fix(j, zero());
                }
            }
            let mut sum = vec![one(); k];
            sum.push(zero());
            sys.add_eq(sum, one());
            for i in 0..k {
                let mut row: Vector = m.row(i).to_vec();
                row.push(int(-1));
                if mask >> i & 1 == 1 {
                    sys.add_eq(row, zero());
                } else {
                    sys.add_ge(row, zero());
                }
            }
            let mut objective = vec![zero(); k];
            objective.push(one());
            match lp_optimize(&objective, &sys, Sense::Minimize) {
                LpOutcome::OptimumBounded { value, witness } => (value, witness[..k].to_vec()),
                // Infeasible supports carry no KKT point.
                _ => (int(1), Vec::new()),
            }
        })
        .collect();
    let (value, lambda) = results
        .into_iter()
        .filter(|(_, l)| !l.is_empty())
        .min_by(|a, b| a.0.cmp(&b.0))
        .expect("the simplex minimum is a KKT point");
    let x = r.mul_vec(&lambda);
    Ok(if value.is_positive() {
        Copositivity::StrictlyCopositive
    } else if value.is_zero() {
        Copositivity::CopositiveOnly(x)
    } else {
        Copositivity::NotCopositive(x)
    })
}

/// No convex combination of the generators vanishes.
fn is_pointed(r: &Matrix) -> bool {
    let k = r.cols();
    let mut sys = LinearSystem::nonnegative(k);
    sys.add_eq(vec![one(); k], one());
    for i in 0..r.rows() {
        sys.add_eq(r.row(i).to_vec(), zero());
    }
    !lp_feasible(&sys).is_feasible()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minors::DEFAULT_CAP;
    use crate::rational::{frac, vector_from_ints};

    const CAP: usize = DEFAULT_CAP;

    fn m3() -> Matrix {
        Matrix::from_ints(&[[0, -1, -2], [0, 1, 2], [1, 1, 1]])
    }

    #[test]
    fn semipositivity_examples() {
        let i = Matrix::identity(2);
        assert!(is_semipositive(&i) && is_weakly_semipositive(&i));
        let neg = -&i;
        assert!(!is_semipositive(&neg) && !is_weakly_semipositive(&neg));
        let a = Matrix::from_ints(&[[0, 1], [0, 1]]);
        assert!(is_weakly_semipositive(&a));
        // x = (1, 1) gives Ax = (1, 1) > 0.
        assert!(is_semipositive(&a));
    }

    #[test]
    fn semimonotone_examples() {
        let a = Matrix::from_ints(&[[0, -1], [0, 1]]);
        assert!(is_semimonotone(&a, CAP).unwrap() && !is_strictly_semimonotone(&a, CAP).unwrap());
        let b = Matrix::from_ints(&[[0, 1], [-1, 1]]);
        assert!(is_semimonotone(&b, CAP).unwrap() && !is_strictly_semimonotone(&b, CAP).unwrap());
        let p = Matrix::from_ints(&[[1, 2, 3], [4, 5, 6], [7, 8, 9]]);
        assert!(is_strictly_semimonotone(&p, CAP).unwrap());
    }

    #[test]
    fn almost_semimonotone_examples() {
        assert!(!is_almost_semimonotone(&Matrix::identity(2), CAP).unwrap());
        assert!(is_almost_semimonotone(&Matrix::from_ints(&[[-1]]), CAP).unwrap());
        let a = Matrix::from_ints(&[[1, -2], [-2, 1]]);
        assert!(is_almost_semimonotone(&a, CAP).unwrap());
        let inv = crate::linalg::inverse(&a).unwrap().unwrap();
        assert!(inv.is_nonpositive());
    }

    #[test]
    fn p_hash_examples() {
        assert!(is_p_hash(&m3(), CAP).unwrap());
        assert!(!is_p_hash(&Matrix::from_ints(&[[1, 1, 0], [1, 1, 0], [0, 1, 0]]), CAP).unwrap());
        assert!(!is_p_hash(&m3().transpose(), CAP).unwrap());
        assert!(is_p_hash(&Matrix::from_ints(&[[2, 1], [-2, -1]]), CAP).unwrap());
        assert!(is_p_hash(&Matrix::from_ints(&[[1, 1, 1], [0, 1, 1], [0, 0, 0]]), CAP).unwrap());
        assert!(!is_p_hash(&Matrix::from_ints(&[[0, -1], [0, 0]]), CAP).unwrap());
    }

    #[test]
    fn strict_range_semimonotone_examples() {
        let lap = Matrix::from_ints(&[[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]).scale(&frac(1, 3));
        assert!(is_strictly_range_semimonotone(&lap, CAP).unwrap());
        let b = Matrix::from_ints(&[[1, -1, -1], [-1, 2, -1], [-1, -1, 5]]);
        assert!(is_strictly_range_semimonotone(&b, CAP).unwrap());
        assert!(!is_strictly_range_semimonotone(&-&Matrix::identity(3), CAP).unwrap());
    }

    #[test]
    fn copositivity_examples() {
        let orthant = ConeRep::nonnegative_orthant(2);
        assert_eq!(
            copositivity_on_cone(&Matrix::identity(2), &orthant, CAP).unwrap(),
            Copositivity::StrictlyCopositive
        );
        match copositivity_on_cone(&Matrix::zeros(2, 2), &orthant, CAP).unwrap() {
            Copositivity::CopositiveOnly(_) => {}
            other => panic!("{other:?}"),
        }
        let swap = Matrix::from_ints(&[[0, 1], [1, 0]]);
        match copositivity_on_cone(&swap, &orthant, CAP).unwrap() {
            Copositivity::CopositiveOnly(x) => {
                assert!(x == vector_from_ints(&[1, 0]) || x == vector_from_ints(&[0, 1]));
            }
            other => panic!("{other:?}"),
        }
        let neg = Matrix::from_ints(&[[1, -3], [-3, 1]]);
        match copositivity_on_cone(&neg, &orthant, CAP).unwrap() {
            Copositivity::NotCopositive(x) => {
                let qx = neg.mul_vec(&x);
                assert!(crate::rational::dot(&x, &qx).is_negative());
            }
            other => panic!("{other:?}"),
        }
        let line = ConeRep::from_generators(2, vec![vector_from_ints(&[1, 0]), vector_from_ints(&[-1, 0])]);
        assert_eq!(copositivity_on_cone(&swap, &line, CAP), Err(Error::NotPointed));
        let empty = ConeRep::from_generators(2, vec![]);
        assert_eq!(copositivity_on_cone(&swap, &empty, CAP), Err(Error::EmptyCone));
    }
}
