//! Generators shared by the integration suites.
#![allow(dead_code)]

use kara_core::rational::{frac, int};
use kara_core::{Matrix, Rational, Vector};
use proptest::prelude::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn from_ints(n: usize, m: usize, xs: &[i64]) -> Matrix {
    Matrix::from_fn(n, m, |i, j| int(xs[i * m + j]))
}

pub fn square(n: usize, xs: &[i64]) -> Matrix {
    from_ints(n, n, xs)
}

/// Z-matrix from raw entries: off-diagonal entries folded to `-|x|`.
pub fn z_from(n: usize, xs: &[i64]) -> Matrix {
    Matrix::from_fn(n, n, |i, j| {
        let x = xs[i * n + j];
        if i == j {
            int(x)
        } else {
            int(-x.abs())
        }
    })
}

pub fn symmetric_z_from(n: usize, xs: &[i64]) -> Matrix {
    Matrix::from_fn(n, n, |i, j| {
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        let x = xs[a * n + b];
        if i == j {
            int(x)
        } else {
            int(-x.abs())
        }
    })
}

/// `F G` with `F` n×r and `G` r×n.
pub fn low_rank(n: usize, r: usize, f: &[i64], g: &[i64]) -> Matrix {
    &from_ints(n, r, f) * &from_ints(r, n, g)
}

pub fn vector(xs: &[i64]) -> Vector {
    xs.iter().map(|&x| int(x)).collect()
}

pub fn ints(len: usize, lo: i64, hi: i64) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(lo..=hi, len)
}

/// `(n, entries)` with `n` in `lo..=hi`.
pub fn sized_ints(lo: usize, hi: usize, bound: i64) -> impl Strategy<Value = (usize, Vec<i64>)> {
    (lo..=hi).prop_flat_map(move |n| (Just(n), ints(n * n, -bound, bound)))
}

pub fn rng_rational(rng: &mut ChaCha8Rng, p: i64, q: i64) -> Rational {
    frac(rng.gen_range(-p..=p), rng.gen_range(1..=q))
}

pub fn rng_matrix(rng: &mut ChaCha8Rng, n: usize, p: i64, q: i64) -> Matrix {
    Matrix::from_fn(n, n, |_, _| rng_rational(rng, p, q))
}

pub fn rng_z_matrix(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> Matrix {
    Matrix::from_fn(n, n, |i, j| {
        if i == j {
            int(rng.gen_range(-1..=bound))
        } else if rng.gen_bool(0.6) {
            int(-rng.gen_range(0..=bound))
        } else {
            int(0)
        }
    })
}

/// Z-matrix annihilating a positive integer vector: a singular M-matrix.
pub fn rng_singular_m(rng: &mut ChaCha8Rng, n: usize, bound: i64, dense: bool) -> Matrix {
    let x: Vec<Rational> = (0..n).map(|_| int(rng.gen_range(1..=bound))).collect();
    let off = Matrix::from_fn(n, n, |i, j| {
        if i == j || !(dense || rng.gen_bool(0.5)) {
            int(0)
        } else {
            int(-rng.gen_range(1..=bound))
        }
    });
    let ax = off.mul_vec(&x);
    Matrix::from_fn(n, n, |i, j| if i == j { -&ax[i] / &x[i] } else { off.row(i)[j].clone() })
}

pub fn rng_permutation(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}
