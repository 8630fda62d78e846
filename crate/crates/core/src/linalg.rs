//! Elimination-based exact linear algebra: echelon forms, determinants,
//! fundamental subspaces, full-rank factorizations and linear solves.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rational::{one, zero, Rational, Vector};

/// Reduced row echelon form together with its rank and pivot columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

pub fn rref(m: &Matrix) -> Rref {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vector> = m.to_rows();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = one() / &a[r][c];
        for x in a[r].iter_mut().skip(c) {
            *x *= &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    Rref {
        matrix: Matrix::from_rows(a).unwrap_or_else(|_| Matrix::zeros(rows, cols)),
        rank: r,
        pivots,
    }
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).rank
}

pub fn determinant(m: &Matrix) -> Result<Rational> {
    let n = m.order()?;
    let mut a = m.to_rows();
    let mut det = one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Ok(zero());
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= &a[c][c];
        let inv = one() / &a[c][c];
        let pivot_row = a[c].clone();
        for row in a.iter_mut().skip(c + 1) {
            if row[c].is_zero() {
                continue;
            }
            let factor = &row[c] * &inv;
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
        }
    }
    Ok(det)
}

/// Determinant of the principal submatrix on `index_set` (0-based).
pub fn principal_minor(m: &Matrix, index_set: &[usize]) -> Result<Rational> {
    let n = m.order()?;
    let mut sorted = index_set.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if index_set.is_empty() || sorted.len() != index_set.len() || sorted.iter().any(|&i| i >= n) {
        return Err(Error::BadIndexSet(index_set.to_vec()));
    }
    determinant(&m.principal(&sorted))
}

pub fn inverse(m: &Matrix) -> Result<Option<Matrix>> {
    let n = m.order()?;
    let mut aug = Matrix::zeros(n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            aug[(i, j)] = m[(i, j)].clone();
        }
        aug[(i, n + i)] = one();
    }
    let r = rref(&aug);
    if r.pivots.iter().take(n).enumerate().any(|(k, &p)| p != k) || r.pivots.len() < n {
        return Ok(None);
    }
    let cols: Vec<usize> = (n..2 * n).collect();
    let rows: Vec<usize> = (0..n).collect();
    Ok(Some(r.matrix.submatrix(&rows, &cols)))
}

/// Linear subspace of `R^ambient_dim` held as an independent spanning list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    /// Span of `vectors`, pruned to an independent subset.
    pub fn span(ambient_dim: usize, vectors: &[Vector]) -> Self {
        if vectors.is_empty() {
            return Self::zero(ambient_dim);
        }
        let m = Matrix::from_columns(ambient_dim, vectors);
        let r = rref(&m);
        Self {
            ambient_dim,
            basis: r.pivots.iter().map(|&j| vectors[j].clone()).collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    /// Basis vectors as the columns of an `ambient_dim x dim` matrix.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_columns(self.ambient_dim, &self.basis)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        if v.iter().all(Zero::is_zero) {
            return true;
        }
        if self.basis.is_empty() {
            return false;
        }
        let mut vectors = self.basis.clone();
        vectors.push(v.to_vec());
        rank(&Matrix::from_columns(self.ambient_dim, &vectors)) == self.basis.len()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn same_as(&self, other: &Subspace) -> bool {
        self.dim() == other.dim() && self.contains_subspace(other)
    }
}

#[derive(Debug, Clone)]
pub struct SubspaceBases {
    /// `R(M)`
    pub range: Subspace,
    /// `N(M)`
    pub null: Subspace,
    /// `R(M^T)`
    pub row: Subspace,
    /// `N(M^T)`
    pub left_null: Subspace,
}

fn null_basis_from_rref(r: &Rref, cols: usize) -> Vec<Vector> {
    let free: Vec<usize> = (0..cols).filter(|c| !r.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![zero(); cols];
            v[f] = one();
            for (row, &p) in r.pivots.iter().enumerate() {
                v[p] = -r.matrix[(row, f)].clone();
            }
            v
        })
        .collect()
}

pub fn range_space(m: &Matrix) -> Subspace {
    let r = rref(m);
    Subspace {
        ambient_dim: m.rows(),
        basis: r.pivots.iter().map(|&j| m.col(j)).collect(),
    }
}

pub fn null_space(m: &Matrix) -> Subspace {
    let r = rref(m);
    Subspace {
        ambient_dim: m.cols(),
        basis: null_basis_from_rref(&r, m.cols()),
    }
}

pub fn subspace_bases(m: &Matrix) -> SubspaceBases {
    let r = rref(m);
    let range = Subspace {
        ambient_dim: m.rows(),
        basis: r.pivots.iter().map(|&j| m.col(j)).collect(),
    };
    let null = Subspace {
        ambient_dim: m.cols(),
        basis: null_basis_from_rref(&r, m.cols()),
    };
    let row = Subspace {
        ambient_dim: m.cols(),
        basis: (0..r.rank).map(|i| r.matrix.row(i).to_vec()).collect(),
    };
    let left_null = null_space(&m.transpose());
    SubspaceBases {
        range,
        null,
        row,
        left_null,
    }
}

/// Rows `w` of a basis of `N(M^T)`; `x` lies in `R(M)` iff `w · x = 0` for each.
pub fn range_membership_rows(m: &Matrix) -> Vec<Vector> {
    null_space(&m.transpose()).basis
}

/// `M = F G` with `F` the pivot columns of `M` and `G` the nonzero rows of its RREF.
pub fn full_rank_factorization(m: &Matrix) -> (Matrix, Matrix) {
    let r = rref(m);
    let f = Matrix::from_columns(m.rows(), &r.pivots.iter().map(|&j| m.col(j)).collect::<Vec<_>>());
    let rows: Vec<usize> = (0..r.rank).collect();
    let cols: Vec<usize> = (0..m.cols()).collect();
    let g = r.matrix.submatrix(&rows, &cols);
    (f, g)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSolution {
    pub particular: Vector,
    pub null_basis: Vec<Vector>,
}

/// Solves `M x = b`; `Ok(None)` when `b` is outside `R(M)`.
pub fn solve_linear(m: &Matrix, b: &[Rational]) -> Result<Option<LinearSolution>> {
    if b.len() != m.rows() {
        return Err(Error::DimensionMismatch {
            expected: m.rows(),
            found: b.len(),
        });
    }
    let cols = m.cols();
    let mut aug = Matrix::zeros(m.rows(), cols + 1);
    for i in 0..m.rows() {
        for j in 0..cols {
            aug[(i, j)] = m[(i, j)].clone();
        }
        aug[(i, cols)] = b[i].clone();
    }
    let r = rref(&aug);
    if r.pivots.last() == Some(&cols) {
        return Ok(None);
    }
    let mut particular = vec![zero(); cols];
    for (row, &p) in r.pivots.iter().enumerate() {
        particular[p] = r.matrix[(row, cols)].clone();
    }
    let coeff = Rref {
        matrix: r.matrix.submatrix(&(0..m.rows()).collect::<Vec<_>>(), &(0..cols).collect::<Vec<_>>()),
        rank: r.rank,
        pivots: r.pivots.clone(),
    };
    Ok(Some(LinearSolution {
        particular,
        null_basis: null_basis_from_rref(&coeff, cols),
    }))
}

pub fn is_invertible(m: &Matrix) -> bool {
    m.is_square() && rank(m) == m.rows()
}

#[cfg(test)]
pub(crate) fn is_identity_matrix(m: &Matrix) -> bool {
    m.is_square()
        && (0..m.rows()).all(|i| (0..m.cols()).all(|j| if i == j { m[(i, j)] == one() } else { m[(i, j)].is_zero() }))
}
