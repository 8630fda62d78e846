//! Classes decided from principal minors and entry structure: P, P0, N,
//! adequate, Z, M, property c, H with positive diagonal, irreducibility.

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geninv::index_at_most_one;
use crate::linalg::{determinant, rank};
use crate::lp::{lp_feasible, LinearSystem};
use crate::matrix::Matrix;
use crate::rational::{int, zero, Rational};

/// Largest order accepted by the `2^n` enumerations unless overridden.
pub const DEFAULT_CAP: usize = 12;

pub(crate) fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::TooLarge { n, cap })
    } else {
        Ok(())
    }
}

/// Indices of the set bits of `mask`.
pub fn subset_of(mask: usize, n: usize) -> Vec<usize> {
    (0..n).filter(|i| mask >> i & 1 == 1).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuralFlags {
    pub nonnegative: bool,
    pub positive: bool,
    pub z_matrix: bool,
    pub symmetric: bool,
    pub irreducible: bool,
    pub has_nonpositive_row: bool,
}

pub fn structural_flags(a: &Matrix) -> Result<StructuralFlags> {
    a.order()?;
    Ok(StructuralFlags {
        nonnegative: a.is_nonnegative(),
        positive: a.is_positive(),
        z_matrix: a.is_z_matrix(),
        symmetric: a.is_symmetric(),
        irreducible: is_irreducible(a)?,
        has_nonpositive_row: has_nonpositive_row(a),
    })
}

pub fn has_nonpositive_row(a: &Matrix) -> bool {
    (0..a.rows()).any(|i| a.row(i).iter().all(|x| !x.is_positive()))
}

/// Strong connectivity of the digraph with an edge `i -> j` whenever `a_ij != 0`.
/// The `1 x 1` zero matrix counts as reducible.
pub fn is_irreducible(a: &Matrix) -> Result<bool> {
    let n = a.order()?;
    if n == 0 {
        return Ok(false);
    }
    if n == 1 {
        return Ok(!a[(0, 0)].is_zero());
    }
    let reaches_all = |forward: bool| {
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..n {
                let entry = if forward { &a[(i, j)] } else { &a[(j, i)] };
                if !seen[j] && !entry.is_zero() {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    };
    Ok(reaches_all(true) && reaches_all(false))
}

/// All `2^n - 1` principal minors, keyed by the bitmask of their index set.
pub fn principal_minors(a: &Matrix, cap: usize) -> Result<Vec<(usize, Rational)>> {
    let n = a.order()?;
    check_cap(n, cap)?;
    Ok((1usize..1 << n)
        .into_par_iter()
        .map(|mask| {
            let idx = subset_of(mask, n);
            (mask, determinant(&a.principal(&idx)).expect("principal submatrix is square"))
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorClassReport {
    pub is_p: bool,
    pub is_p0: bool,
    pub is_n: bool,
    pub n_first_category: bool,
    pub is_adequate: bool,
}

pub fn minor_class(a: &Matrix, cap: usize) -> Result<MinorClassReport> {
    let n = a.order()?;
    let minors = principal_minors(a, cap)?;
    let is_p = minors.iter().all(|(_, d)| d.is_positive());
    let is_p0 = minors.iter().all(|(_, d)| !d.is_negative());
    let is_n = minors.iter().all(|(_, d)| d.is_negative());
    let n_first_category = is_n && a.entries().iter().any(|x| x.is_positive());
    let all: Vec<usize> = (0..n).collect();
    let is_adequate = is_p0
        && minors.iter().filter(|(_, d)| d.is_zero()).all(|&(mask, _)| {
            let idx = subset_of(mask, n);
            rank(&a.submatrix(&idx, &all)) < idx.len() && rank(&a.submatrix(&all, &idx)) < idx.len()
        });
    Ok(MinorClassReport {
        is_p,
        is_p0,
        is_n,
        n_first_category,
        is_adequate,
    })
}

pub fn is_p_matrix(a: &Matrix, cap: usize) -> Result<bool> {
    Ok(minor_class(a, cap)?.is_p)
}

/// Every column of `a` has a positive entry.
pub fn positive_entry_in_each_column(a: &Matrix) -> bool {
    (0..a.cols()).all(|j| (0..a.rows()).any(|i| a[(i, j)].is_positive()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MMatrixKind {
    NotM,
    SingularM,
    NonsingularM,
}

/// Z-matrices are M-matrices exactly when P0 (nonsingular exactly when P).
pub fn is_m_matrix(a: &Matrix, cap: usize) -> Result<MMatrixKind> {
    a.order()?;
    if !a.is_z_matrix() {
        return Ok(MMatrixKind::NotM);
    }
    let report = minor_class(a, cap)?;
    Ok(if report.is_p {
        MMatrixKind::NonsingularM
    } else if report.is_p0 {
        MMatrixKind::SingularM
    } else {
        MMatrixKind::NotM
    })
}

/// M-matrix whose zero eigenvalue (if any) has index at most one.
pub fn has_property_c(a: &Matrix, cap: usize) -> Result<bool> {
    Ok(is_m_matrix(a, cap)? != MMatrixKind::NotM && index_at_most_one(a)?)
}

/// Positive diagonal and `|a_ii| d_i > sum_{j != i} |a_ij| d_j` for some `d > 0`.
pub fn is_h_matrix_positive_diag(a: &Matrix) -> Result<bool> {
    let n = a.order()?;
    if a.diagonal_entries().iter().any(|x| !x.is_positive()) {
        return Ok(false);
    }
    let mut sys = LinearSystem::new(n);
    for i in 0..n {
        let mut unit = vec![zero(); n];
        unit[i] = int(1);
        sys.add_ge(unit, int(1));
        let row = (0..n)
            .map(|j| if i == j { a[(i, j)].abs() } else { -a[(i, j)].abs() })
            .collect();
        sys.add_ge(row, int(1));
    }
    Ok(lp_feasible(&sys).is_feasible())
}
