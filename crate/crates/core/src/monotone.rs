//! Monotone, range monotone, row monotone, group monotone, generalized-inverse
//! semimonotone and almost monotone matrices.

use rayon::prelude::*;

use crate::conelcp::k_generators;
use crate::error::Result;
use crate::geninv::{group_inverse, moore_penrose};
use crate::lcp_classes::add_range_constraints;
use crate::linalg::{inverse, null_space, range_membership_rows};
use crate::lp::{lp_feasible, LinearSystem, LpOutcome};
use crate::matrix::Matrix;
use crate::rational::{int, is_nonnegative, one, zero, Vector};

/// `Ax >= 0 ⟹ x >= 0`, i.e. `A⁻¹` exists and is nonnegative.
pub fn is_monotone(a: &Matrix) -> Result<bool> {
    Ok(inverse(a)?.is_some_and(|inv| inv.is_nonnegative()))
}

/// `x` in the subspace cut out by `rows` with `Ax >= 0` and some `x_i <= -1`.
fn monotone_violation(a: &Matrix, rows: &[Vector]) -> Option<Vector> {
    let n = a.cols();
    (0..n).into_par_iter().find_map_first(|i| {
        let mut sys = LinearSystem::new(n);
        add_range_constraints(&mut sys, rows, 0);
        for k in 0..a.rows() {
            sys.add_ge(a.row(k).to_vec(), zero());
        }
        let mut row = vec![zero(); n];
        row[i] = one();
        sys.add_le(row, int(-1));
        match lp_feasible(&sys) {
            LpOutcome::Feasible(x) => Some(x),
            _ => None,
        }
    })
}

/// `x ∈ R(A)` with `Ax >= 0` but `x` not nonnegative, if any.
pub fn range_monotone_violation(a: &Matrix) -> Result<Option<Vector>> {
    a.order()?;
    Ok(monotone_violation(a, &range_membership_rows(a)))
}

/// `Ax >= 0, x ∈ R(A) ⟹ x >= 0`.
pub fn is_range_monotone(a: &Matrix) -> Result<bool> {
    Ok(range_monotone_violation(a)?.is_none())
}

/// `Ax >= 0, x ∈ R(Aᵀ) ⟹ x >= 0`; `R(Aᵀ)` is cut out by a basis of `N(A)`.
pub fn is_row_monotone(a: &Matrix) -> Result<bool> {
    a.order()?;
    Ok(monotone_violation(a, null_space(a).basis()).is_none())
}

/// `A#` exists and is nonnegative.
pub fn is_group_monotone(a: &Matrix) -> Result<bool> {
    Ok(group_inverse(a)?.inverse.is_some_and(|g| g.is_nonnegative()))
}

/// `A†` is nonnegative.
pub fn is_gi_semimonotone(a: &Matrix) -> Result<bool> {
    a.order()?;
    Ok(moore_penrose(a).is_nonnegative())
}

/// `Ax >= 0 ⟹ Ax = 0`.
pub fn is_almost_monotone(a: &Matrix) -> Result<bool> {
    let n = a.order()?;
    Ok((0..n).into_par_iter().all(|i| {
        let mut sys = LinearSystem::new(n);
        for k in 0..n {
            sys.add_ge(a.row(k).to_vec(), if k == i { one() } else { zero() });
        }
        !lp_feasible(&sys).is_feasible()
    }))
}

/// `A#` exists and maps `K = R(A) ∩ R^n_+` into `R^n_+`; checked on the
/// extreme rays of `K`.
pub fn group_inverse_nonneg_on_k(a: &Matrix, cap: usize) -> Result<bool> {
    let Some(g) = group_inverse(a)?.inverse else {
        return Ok(false);
    };
    Ok(k_generators(a, cap)?.iter().all(|x| is_nonnegative(&g.mul_vec(x))))
}

/// `Ax <= 0` and `x ∈ K` force `x = 0`.
pub fn k_has_no_nonpositive_image(a: &Matrix) -> Result<bool> {
    let n = a.order()?;
    let mut sys = LinearSystem::nonnegative(n);
    add_range_constraints(&mut sys, &range_membership_rows(a), 0);
    sys.add_eq(vec![one(); n], one());
    for k in 0..n {
        sys.add_le(a.row(k).to_vec(), zero());
    }
    Ok(!lp_feasible(&sys).is_feasible())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monotone_examples() {
        assert!(is_monotone(&Matrix::identity(3)).unwrap());
        assert!(is_monotone(&Matrix::from_ints(&[[1, -1], [-1, 2]])).unwrap());
        assert!(!is_monotone(&Matrix::from_ints(&[[1, -1], [-1, 1]])).unwrap());
    }

    #[test]
    fn range_monotone_examples() {
        assert!(is_range_monotone(&Matrix::from_ints(&[[1, -1, 0], [0, 1, -1], [0, 0, 0]])).unwrap());
        assert!(!is_range_monotone(&Matrix::from_ints(&[[0, -1, 0], [-1, 0, -1], [0, -1, 0]])).unwrap());
        assert!(!is_range_monotone(&Matrix::from_ints(&[[1, -1, -1], [0, 0, -1], [0, 0, 0]])).unwrap());
    }

    #[test]
    fn row_monotone_examples() {
        assert!(is_row_monotone(&Matrix::identity(2)).unwrap());
        assert!(is_row_monotone(&Matrix::from_ints(&[[0, 0], [1, 0]])).unwrap());
        let a = Matrix::from_ints(&[[1, 2], [1, 2]]);
        assert!(is_row_monotone(&a.transpose()).unwrap());
    }

    #[test]
    fn group_and_gi_monotone_examples() {
        let ones = Matrix::from_ints(&[[1, 1, 1], [1, 1, 1], [1, 1, 1]]);
        for m in [Matrix::identity(2), ones] {
            assert!(is_group_monotone(&m).unwrap() && is_gi_semimonotone(&m).unwrap());
        }
        let a = Matrix::from_ints(&[[1, 1, 1], [0, 1, 1], [0, 0, 0]]);
        assert!(!is_group_monotone(&a).unwrap() && !is_gi_semimonotone(&a).unwrap());
    }

    #[test]
    fn k_conditions() {
        let z = Matrix::from_ints(&[[1, -1, 0], [0, 1, -1], [0, 0, 0]]);
        assert!(group_inverse_nonneg_on_k(&z, 12).unwrap());
        assert!(k_has_no_nonpositive_image(&z).unwrap());
        let nilpotent = Matrix::from_ints(&[[0, -1], [0, 0]]);
        assert!(!group_inverse_nonneg_on_k(&nilpotent, 12).unwrap());
        let bad = Matrix::from_ints(&[[1, -1, -1], [0, 0, -1], [0, 0, 0]]);
        assert!(!k_has_no_nonpositive_image(&bad).unwrap());
    }

    #[test]
    fn almost_monotone_examples() {
        assert!(is_almost_monotone(&Matrix::from_ints(&[[1, -1], [-1, 1]])).unwrap());
        assert!(!is_almost_monotone(&Matrix::identity(2)).unwrap());
        assert!(is_almost_monotone(&Matrix::zeros(2, 2)).unwrap());
    }
}
