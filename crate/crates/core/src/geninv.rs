//! Moore–Penrose and group inverses from a full-rank factorization.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{full_rank_factorization, inverse, range_space, rank};
use crate::matrix::Matrix;
use crate::rational::Rational;

/// `A† = Gᵀ(GGᵀ)⁻¹(FᵀF)⁻¹Fᵀ` for `A = FG`; `0†` is the zero matrix.
pub fn moore_penrose(a: &Matrix) -> Matrix {
    let (f, g) = full_rank_factorization(a);
    if f.cols() == 0 {
        return Matrix::zeros(a.cols(), a.rows());
    }
    let gt = g.transpose();
    let ft = f.transpose();
    let ggt_inv = inverse(&(&g * &gt)).ok().flatten().expect("G has full row rank");
    let ftf_inv = inverse(&(&ft * &f)).ok().flatten().expect("F has full column rank");
    let x = &(&(&gt * &ggt_inv) * &ftf_inv) * &ft;
    debug_assert!(penrose_equations_hold(a, &x));
    x
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupInverseResult {
    pub inverse: Option<Matrix>,
}

impl GroupInverseResult {
    pub fn exists(&self) -> bool {
        self.inverse.is_some()
    }
}

/// `A# = F(GF)⁻²G`, existing exactly when `GF` is invertible.
pub fn group_inverse(a: &Matrix) -> Result<GroupInverseResult> {
    let n = a.order()?;
    let (f, g) = full_rank_factorization(a);
    if f.cols() == 0 {
        return Ok(GroupInverseResult {
            inverse: Some(Matrix::zeros(n, n)),
        });
    }
    let Some(gf_inv) = inverse(&(&g * &f))? else {
        return Ok(GroupInverseResult { inverse: None });
    };
    let x = &(&f * &(&gf_inv * &gf_inv)) * &g;
    debug_assert!(group_equations_hold(a, &x));
    Ok(GroupInverseResult { inverse: Some(x) })
}

/// Convenience wrapper returning [`Error::NoGroupInverse`] when `A#` does not exist.
pub fn require_group_inverse(a: &Matrix) -> Result<Matrix> {
    group_inverse(a)?.inverse.ok_or(Error::NoGroupInverse)
}

/// `AXA = A`, `XAX = X`, `(AX)ᵀ = AX`, `(XA)ᵀ = XA`.
pub fn penrose_equations_hold(a: &Matrix, x: &Matrix) -> bool {
    if x.rows() != a.cols() || x.cols() != a.rows() {
        return false;
    }
    let ax = a * x;
    let xa = x * a;
    &ax * a == *a && &xa * x == *x && ax.is_symmetric() && xa.is_symmetric()
}

/// `AXA = A`, `XAX = X`, `AX = XA`.
pub fn group_equations_hold(a: &Matrix, x: &Matrix) -> bool {
    if !a.is_square() || x.rows() != a.rows() || x.cols() != a.cols() {
        return false;
    }
    let ax = a * x;
    let xa = x * a;
    &ax * a == *a && &xa * x == *x && ax == xa
}

/// `rank A = rank A²`.
pub fn index_at_most_one(a: &Matrix) -> Result<bool> {
    a.order()?;
    Ok(rank(a) == rank(&(a * a)))
}

/// `R(A) = R(Aᵀ)`.
pub fn is_range_symmetric(a: &Matrix) -> Result<bool> {
    a.order()?;
    Ok(range_space(a).same_as(&range_space(&a.transpose())))
}

/// The unique `α` with `A² = αA`, if any.
pub fn generalized_idempotent_scalar(a: &Matrix) -> Result<Option<Rational>> {
    a.order()?;
    let (i, _) = a
        .entries()
        .iter()
        .enumerate()
        .find(|(_, x)| !x.is_zero())
        .ok_or(Error::ZeroMatrix)?;
    let sq = a * a;
    let alpha = &sq.entries()[i] / &a.entries()[i];
    Ok((sq == a.scale(&alpha)).then_some(alpha))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int, vector_from_ints};

    fn ones(n: usize) -> Matrix {
        Matrix::from_fn(n, n, |_, _| int(1))
    }

    #[test]
    fn moore_penrose_examples() {
        assert_eq!(moore_penrose(&Matrix::identity(3)), Matrix::identity(3));
        let x = moore_penrose(&ones(2));
        assert_eq!(x, ones(2).scale(&frac(1, 4)));
        assert!(penrose_equations_hold(&ones(2), &x));
        assert_eq!(moore_penrose(&Matrix::zeros(2, 3)), Matrix::zeros(3, 2));

        let u = vector_from_ints(&[1, -2, 3]);
        let v = vector_from_ints(&[2, 0, -1]);
        let a = Matrix::outer(&u, &v);
        let x = moore_penrose(&a);
        let at = a.transpose();
        let k = &x.entries()[0] / &at.entries()[0];
        assert!(k > int(0));
        assert_eq!(x, at.scale(&k));
    }

    #[test]
    fn group_inverse_examples() {
        for n in 2..=6 {
            let a = ones(n);
            let g = group_inverse(&a).unwrap().inverse.unwrap();
            assert_eq!(g, a.scale(&frac(1, (n * n) as i64)));
        }
        assert!(!group_inverse(&Matrix::from_ints(&[[0, 1], [0, 0]])).unwrap().exists());

        let a = Matrix::from_ints(&[[1, 1, 1], [0, 1, 1], [0, 0, 0]]);
        let g = group_inverse(&a).unwrap().inverse.unwrap();
        assert_eq!(g, Matrix::from_ints(&[[1, -1, -1], [0, 1, 1], [0, 0, 0]]));

        let a = Matrix::from_ints(&[[1, -1, 0], [-1, 1, 0], [0, 0, 3]]);
        let g = group_inverse(&a).unwrap().inverse.unwrap();
        let expected = Matrix::from_rows(vec![
            vec![int(1), int(-1), int(0)],
            vec![int(-1), int(1), int(0)],
            vec![int(0), int(0), frac(4, 3)],
        ])
        .unwrap()
        .scale(&frac(1, 4));
        assert_eq!(g, expected);
        assert!(group_equations_hold(&a, &g));
        assert!(matches!(group_inverse(&Matrix::zeros(1, 2)), Err(Error::NonSquare { .. })));
    }

    #[test]
    fn index_and_range_symmetry() {
        assert!(index_at_most_one(&Matrix::identity(2)).unwrap());
        assert!(!index_at_most_one(&Matrix::from_ints(&[[0, 1], [0, 0]])).unwrap());
        assert!(!index_at_most_one(&Matrix::from_ints(&[[0, -1], [0, 0]])).unwrap());

        assert!(is_range_symmetric(&Matrix::from_ints(&[[2, 1], [1, 0]])).unwrap());
        assert!(!is_range_symmetric(&Matrix::from_ints(&[[1, 1, 1], [0, 1, 1], [0, 0, 0]])).unwrap());
        assert!(is_range_symmetric(&ones(4)).unwrap());
    }

    #[test]
    fn generalized_idempotent_examples() {
        let a = Matrix::from_ints(&[[1, 2], [2, 4]]);
        let p = &a * &moore_penrose(&a);
        assert_eq!(generalized_idempotent_scalar(&p).unwrap(), Some(int(1)));
        assert_eq!(generalized_idempotent_scalar(&ones(3)).unwrap(), Some(int(3)));
        assert_eq!(generalized_idempotent_scalar(&Matrix::from_ints(&[[1, 1], [0, 1]])).unwrap(), None);
        assert_eq!(generalized_idempotent_scalar(&Matrix::zeros(2, 2)), Err(Error::ZeroMatrix));
    }
}
