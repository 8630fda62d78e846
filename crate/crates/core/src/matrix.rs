//! Dense row-major matrices over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{format_rational, int, one, parse_rational, zero, Rational, Vector};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self {
            rows,
            cols,
            entries,
        }
    }

    /// Builds from nested rows; every row must have the same length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::DimensionMismatch {
                expected: c,
                found: bad.len(),
            });
        }
        Ok(Self {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Integer literal helper, mostly for tests and the embedded corpus.
    pub fn from_ints<const N: usize>(rows: &[[i64; N]]) -> Self {
        Self::from_fn(rows.len(), N, |i, j| int(rows[i][j]))
    }

    pub fn diagonal(values: &[Rational]) -> Self {
        let n = values.len();
        Self::from_fn(n, n, |i, j| if i == j { values[i].clone() } else { zero() })
    }

    /// Single column holding `v`.
    pub fn column(v: &[Rational]) -> Self {
        Self {
            rows: v.len(),
            cols: 1,
            entries: v.to_vec(),
        }
    }

    /// `u v^T`.
    pub fn outer(u: &[Rational], v: &[Rational]) -> Self {
        Self::from_fn(u.len(), v.len(), |i, j| &u[i] * &v[j])
    }

    /// Matrix whose columns are `vectors`, each of length `rows`.
    pub fn from_columns(rows: usize, vectors: &[Vector]) -> Self {
        Self::from_fn(rows, vectors.len(), |i, j| vectors[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Order of a square matrix.
    pub fn order(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vector {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn checked_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x * s).collect(),
        }
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    pub fn principal(&self, index_set: &[usize]) -> Matrix {
        self.submatrix(index_set, index_set)
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|x| !x.is_negative())
    }

    pub fn is_nonpositive(&self) -> bool {
        self.entries.iter().all(|x| !x.is_positive())
    }

    pub fn is_positive(&self) -> bool {
        self.entries.iter().all(Signed::is_positive)
    }

    /// Off-diagonal entries nonpositive.
    pub fn is_z_matrix(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || !self[(i, j)].is_positive()))
    }

    pub fn diagonal_entries(&self) -> Vector {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).collect()
    }

    /// `P A P^T` where row `i` of `P` is `e_{perm[i]}`.
    pub fn permute_similar(&self, perm: &[usize]) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| self[(perm[i], perm[j])].clone())
    }

    /// Block diagonal `self ⊕ other`.
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let (r, c) = (self.rows + other.rows, self.cols + other.cols);
        Matrix::from_fn(r, c, |i, j| {
            if i < self.rows && j < self.cols {
                self[(i, j)].clone()
            } else if i >= self.rows && j >= self.cols {
                other[(i - self.rows, j - self.cols)].clone()
            } else {
                zero()
            }
        })
    }

    pub fn powi(&self, k: u32) -> Matrix {
        let mut out = Matrix::identity(self.rows);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.entries[i * self.cols + j]
    }
}

impl Mul<&Matrix> for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.checked_mul(rhs).expect("matrix product dimension mismatch")
    }
}

impl Add<&Matrix> for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub<&Matrix> for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let cells: Vec<String> = self.row(i).iter().map(format_rational).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

/// Serializes a rational as a JSON integer when it fits in `i64`, else as `"p/q"`.
pub fn rational_to_json(r: &Rational) -> serde_json::Value {
    if r.is_integer() {
        if let Ok(v) = i64::try_from(r.numer()) {
            return serde_json::Value::from(v);
        }
    }
    serde_json::Value::String(format_rational(r))
}

pub fn rational_from_json(value: &serde_json::Value, field: &str) -> Result<Rational> {
    match value {
        serde_json::Value::Number(n) => parse_rational(&n.to_string()),
        serde_json::Value::String(s) => parse_rational(s),
        other => Err(Error::Parse(format!("expected number or string, found {other}"))),
    }
    .map_err(|e| match e {
        Error::Parse(msg) => Error::Parse(format!("{field}: {msg}")),
        e => e,
    })
}

pub fn vector_to_json(v: &[Rational]) -> serde_json::Value {
    serde_json::Value::Array(v.iter().map(rational_to_json).collect())
}

pub fn vector_from_json(value: &serde_json::Value, field: &str) -> Result<Vector> {
    let items = value
        .as_array()
        .ok_or_else(|| Error::Parse(format!("{field}: expected an array")))?;
    items
        .iter()
        .enumerate()
        .map(|(i, x)| rational_from_json(x, &format!("{field}[{i}]")))
        .collect()
}

impl Matrix {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "rows": self.rows,
            "cols": self.cols,
            "entries": self.to_rows().iter().map(|r| vector_to_json(r)).collect::<Vec<_>>(),
        })
    }

    pub fn from_json_value(value: &serde_json::Value) -> Result<Self> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Parse("matrix: expected a JSON object".into()))?;
        let dim = |key: &str| -> Result<usize> {
            obj.get(key)
                .ok_or_else(|| Error::Parse(format!("{key}: missing field")))?
                .as_u64()
                .map(|v| v as usize)
                .ok_or_else(|| Error::Parse(format!("{key}: expected a nonnegative integer")))
        };
        let rows = dim("rows")?;
        let cols = dim("cols")?;
        let entries = obj
            .get("entries")
            .ok_or_else(|| Error::Parse("entries: missing field".into()))?
            .as_array()
            .ok_or_else(|| Error::Parse("entries: expected an array of rows".into()))?;
        if entries.len() != rows {
            return Err(Error::Parse(format!(
                "entries: expected {rows} rows, found {}",
                entries.len()
            )));
        }
        let mut data = Vec::with_capacity(rows * cols);
        for (i, row) in entries.iter().enumerate() {
            let row = row
                .as_array()
                .ok_or_else(|| Error::Parse(format!("entries[{i}]: expected an array")))?;
            if row.len() != cols {
                return Err(Error::Parse(format!(
                    "entries[{i}]: expected {cols} entries, found {}",
                    row.len()
                )));
            }
            for (j, x) in row.iter().enumerate() {
                data.push(rational_from_json(x, &format!("entries[{i}][{j}]"))?);
            }
        }
        Matrix::new(rows, cols, data)
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
        Self::from_json_value(&value)
    }
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let value = serde_json::Value::deserialize(deserializer)?;
        Matrix::from_json_value(&value).map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn json_accepts_all_entry_forms() {
        let m = Matrix::from_json_str(
            r#"{"rows": 2, "cols": 2, "entries": [[1, "-2/4"], ["0.75", -3]]}"#,
        )
        .unwrap();
        assert_eq!(m[(0, 1)], frac(-1, 2));
        assert_eq!(m[(1, 0)], frac(3, 4));
        assert_eq!(m[(1, 1)], int(-3));
    }

    #[test]
    fn json_errors_name_the_field() {
        let err = Matrix::from_json_str(r#"{"rows": 1, "cols": 2, "entries": [[1, "x"]]}"#)
            .unwrap_err()
            .to_string();
        assert!(err.contains("entries[0][1]"), "{err}");
        let err = Matrix::from_json_str(r#"{"rows": 2, "cols": 1, "entries": [[1]]}"#)
            .unwrap_err()
            .to_string();
        assert!(err.contains("entries"), "{err}");
        let err = Matrix::from_json_str(r#"{"cols": 1, "entries": []}"#).unwrap_err().to_string();
        assert!(err.contains("rows"), "{err}");
    }

    #[test]
    fn json_round_trip_keeps_fractions_exact() {
        let m = Matrix::from_fn(2, 3, |i, j| frac(i as i64 - 2 * j as i64, 3));
        let text = serde_json::to_string(&m).unwrap();
        let back: Matrix = serde_json::from_str(&text).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn products_and_direct_sum() {
        let a = Matrix::from_ints(&[[1, 2], [3, 4]]);
        let b = Matrix::from_ints(&[[0, 1], [1, 0]]);
        assert_eq!(&a * &b, Matrix::from_ints(&[[2, 1], [4, 3]]));
        let s = a.direct_sum(&b);
        assert_eq!(s.rows(), 4);
        assert_eq!(s[(2, 3)], int(1));
        assert_eq!(s[(0, 3)], zero());
        assert!(Matrix::identity(2).direct_sum(&Matrix::identity(2)) == Matrix::identity(4));
    }
}
