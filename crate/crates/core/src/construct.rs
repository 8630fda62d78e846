//! Matrix constructions with per-instance self-checks.

use num_traits::Signed;

use crate::conelcp::{is_karamardian, KaramardianConfig};
use crate::error::{Error, Result};
use crate::lcp_classes::is_p_hash;
use crate::linalg::inverse;
use crate::matrix::Matrix;
use crate::minors::{has_property_c, is_irreducible, is_m_matrix, MMatrixKind, DEFAULT_CAP};
use crate::rational::{dot, is_nonnegative, is_zero_vector, one, Rational};
use crate::verdict::Status;

/// `uvᵀ`.
pub fn rank_one(u: &[Rational], v: &[Rational]) -> Result<Matrix> {
    if u.len() != v.len() {
        return Err(Error::DimensionMismatch {
            expected: u.len(),
            found: v.len(),
        });
    }
    if is_zero_vector(u) || is_zero_vector(v) {
        return Err(Error::ZeroVector);
    }
    Ok(Matrix::outer(u, v))
}

fn bordered(a: &Matrix, u: &[Rational], alpha: &Rational) -> Matrix {
    let n = a.rows();
    Matrix::from_fn(n + 1, n + 1, |i, j| match (i < n, j < n) {
        (true, true) => a[(i, j)].clone(),
        (true, false) => u[i].clone(),
        (false, true) => u[j].clone(),
        (false, false) => alpha.clone(),
    })
}

fn check_border_vector(a: &Matrix, u: &[Rational]) -> Result<usize> {
    let n = a.order()?;
    if u.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: u.len(),
        });
    }
    Ok(n)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorderedM {
    pub matrix: Matrix,
    pub alpha: Rational,
    /// Set when `A` is not symmetric irreducible, where P# is only checked per instance.
    pub warning: Option<String>,
    pub p_hash: bool,
}

/// `[[A, u], [uᵀ, α]]` with `α = uᵀA⁻¹u`, for an invertible M-matrix `A`
/// and a nonzero `u <= 0`. The Schur complement vanishes, so the result is
/// singular.
pub fn border_m_matrix(a: &Matrix, u: &[Rational], cap: usize) -> Result<BorderedM> {
    check_border_vector(a, u)?;
    if is_m_matrix(a, cap)? != MMatrixKind::NonsingularM {
        return Err(Error::NotInvertibleM);
    }
    if is_zero_vector(u) || u.iter().any(|x| x.is_positive()) {
        return Err(Error::BadU);
    }
    let inv = inverse(a)?.ok_or(Error::NotInvertibleM)?;
    let alpha = dot(u, &inv.mul_vec(u));
    let matrix = bordered(a, u, &alpha);
    let mut missing = Vec::new();
    if !a.is_symmetric() {
        missing.push("symmetric");
    }
    if !is_irreducible(a)? {
        missing.push("irreducible");
    }
    let warning = (!missing.is_empty()).then(|| format!("A is not {}; P# checked for this instance only", missing.join(" or ")));
    let p_hash = is_p_hash(&matrix, cap.max(matrix.rows()))?;
    Ok(BorderedM {
        matrix,
        alpha,
        warning,
        p_hash,
    })
}

/// `[[A, u], [uᵀ, α]]` for an invertible Karamardian `A`, `u >= 0`, `α > 0`
/// and `α != uᵀA⁻¹u`. Every violated hypothesis is named in the error.
pub fn border_karamardian(a: &Matrix, u: &[Rational], alpha: &Rational, config: &KaramardianConfig) -> Result<Matrix> {
    check_border_vector(a, u)?;
    let mut failed = Vec::new();
    let inv = inverse(a)?;
    match &inv {
        None => failed.push("A invertible".to_string()),
        Some(inv) => {
            if *alpha == dot(u, &inv.mul_vec(u)) {
                failed.push("alpha != u^T A^-1 u".to_string());
            }
            if is_karamardian(a, config)?.status != Status::Yes {
                failed.push("A Karamardian".to_string());
            }
        }
    }
    if !is_nonnegative(u) {
        failed.push("u >= 0".to_string());
    }
    if !alpha.is_positive() {
        failed.push("alpha > 0".to_string());
    }
    if !failed.is_empty() {
        return Err(Error::PreconditionFailed(failed));
    }
    Ok(bordered(a, u, alpha))
}

/// Block-diagonal `B ⊕ C`.
pub fn direct_sum(b: &Matrix, c: &Matrix) -> Result<Matrix> {
    b.order()?;
    c.order()?;
    Ok(b.direct_sum(c))
}

/// `I - uvᵀ` for `vᵀu = 1`; idempotent.
pub fn householder_like(u: &[Rational], v: &[Rational]) -> Result<Matrix> {
    if u.len() != v.len() {
        return Err(Error::DimensionMismatch {
            expected: u.len(),
            found: v.len(),
        });
    }
    if dot(u, v) != one() {
        return Err(Error::BadInnerProduct);
    }
    let h = &Matrix::identity(u.len()) - &Matrix::outer(u, v);
    debug_assert!(&h * &h == h);
    Ok(h)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyTransform {
    pub g: Matrix,
    pub i_plus_g: Matrix,
    pub i_minus_g: Matrix,
}

/// `G = (εI + A)⁻¹(εI - A)` with `I ± G`.
pub fn cayley_g_epsilon(a: &Matrix, eps: &Rational) -> Result<CayleyTransform> {
    let n = a.order()?;
    if !eps.is_positive() {
        return Err(Error::PreconditionFailed(vec!["epsilon > 0".into()]));
    }
    let shift = Matrix::identity(n).scale(eps);
    let plus_inv = inverse(&(&shift + a))?.ok_or(Error::SingularShift)?;
    let g = &plus_inv * &(&shift - a);
    let i = Matrix::identity(n);
    let i_plus_g = &i + &g;
    debug_assert!(i_plus_g == plus_inv.scale(&(eps + eps)));
    Ok(CayleyTransform {
        i_minus_g: &i - &g,
        i_plus_g,
        g,
    })
}

/// `I - B` for a symmetric irreducible row-stochastic `B >= 0`.
pub fn stochastic_shift(b: &Matrix) -> Result<Matrix> {
    let n = b.order()?;
    let rows_sum_to_one = (0..n).all(|i| b.row(i).iter().sum::<Rational>() == one());
    if !b.is_nonnegative() || !rows_sum_to_one {
        return Err(Error::NotRowStochastic);
    }
    if !b.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if !is_irreducible(b)? {
        return Err(Error::NotIrreducible);
    }
    let a = &Matrix::identity(n) - b;
    if n <= DEFAULT_CAP {
        debug_assert!(has_property_c(&a, DEFAULT_CAP)? && is_p_hash(&a, DEFAULT_CAP)?);
    }
    Ok(a)
}
