//! Dense exact linear algebra over a [`Field`].
//!
//! Subspaces of `F^n` are stored as the nonzero rows of their reduced row
//! echelon form, which makes equality of subspaces equality of bases.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::Field;

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mat<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Clone> Mat<S> {
    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Parse("ragged matrix rows".into()));
        }
        Ok(Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn from_entries(rows: usize, cols: usize, data: Vec<S>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Mat { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn entries(&self) -> &[S] {
        &self.data
    }
    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }
    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.cols + j] = v;
    }
    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
    pub fn col(&self, j: usize) -> Vec<S> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }
    pub fn to_rows(&self) -> Vec<Vec<S>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }
    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }
    /// Matrix whose columns are the given vectors.
    pub fn from_cols(n: usize, cols: &[Vec<S>]) -> Self {
        Mat::from_fn(n, cols.len(), |i, j| cols[j][i].clone())
    }
}

pub fn zeros<F: Field>(f: &F, r: usize, c: usize) -> Mat<F::Scalar> {
    Mat::from_fn(r, c, |_, _| f.zero())
}

pub fn identity<F: Field>(f: &F, n: usize) -> Mat<F::Scalar> {
    Mat::from_fn(n, n, |i, j| if i == j { f.one() } else { f.zero() })
}

pub fn mul<F: Field>(f: &F, a: &Mat<F::Scalar>, b: &Mat<F::Scalar>) -> Mat<F::Scalar> {
    assert_eq!(a.cols, b.rows);
    Mat::from_fn(a.rows, b.cols, |i, j| {
        let mut acc = f.zero();
        for k in 0..a.cols {
            let x = a.get(i, k);
            if f.is_zero(x) {
                continue;
            }
            acc = f.add(&acc, &f.mul(x, b.get(k, j)));
        }
        acc
    })
}

pub fn add<F: Field>(f: &F, a: &Mat<F::Scalar>, b: &Mat<F::Scalar>) -> Mat<F::Scalar> {
    Mat::from_fn(a.rows, a.cols, |i, j| f.add(a.get(i, j), b.get(i, j)))
}

pub fn neg<F: Field>(f: &F, a: &Mat<F::Scalar>) -> Mat<F::Scalar> {
    Mat::from_fn(a.rows, a.cols, |i, j| f.neg(a.get(i, j)))
}

pub fn sub<F: Field>(f: &F, a: &Mat<F::Scalar>, b: &Mat<F::Scalar>) -> Mat<F::Scalar> {
    Mat::from_fn(a.rows, a.cols, |i, j| f.sub(a.get(i, j), b.get(i, j)))
}

pub fn mat_vec<F: Field>(f: &F, a: &Mat<F::Scalar>, v: &[F::Scalar]) -> Vec<F::Scalar> {
    (0..a.rows)
        .map(|i| {
            let mut acc = f.zero();
            for (k, x) in v.iter().enumerate() {
                acc = f.add(&acc, &f.mul(a.get(i, k), x));
            }
            acc
        })
        .collect()
}

pub fn vec_mat<F: Field>(f: &F, v: &[F::Scalar], a: &Mat<F::Scalar>) -> Vec<F::Scalar> {
    (0..a.cols)
        .map(|j| {
            let mut acc = f.zero();
            for (k, x) in v.iter().enumerate() {
                acc = f.add(&acc, &f.mul(x, a.get(k, j)));
            }
            acc
        })
        .collect()
}

pub fn dot<F: Field>(f: &F, u: &[F::Scalar], v: &[F::Scalar]) -> F::Scalar {
    let mut acc = f.zero();
    for (x, y) in u.iter().zip(v) {
        acc = f.add(&acc, &f.mul(x, y));
    }
    acc
}

/// Reduced row echelon form and pivot columns.
pub fn rref<F: Field>(f: &F, a: &Mat<F::Scalar>) -> (Mat<F::Scalar>, Vec<usize>) {
    let mut m = a.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(p) = (r..m.rows).find(|&i| !f.is_zero(m.get(i, c))) else {
            continue;
        };
        if p != r {
            for j in 0..m.cols {
                m.data.swap(p * m.cols + j, r * m.cols + j);
            }
        }
        let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
        for j in 0..m.cols {
            let v = f.mul(&inv, m.get(r, j));
            m.set(r, j, v);
        }
        for i in 0..m.rows {
            if i == r || f.is_zero(m.get(i, c)) {
                continue;
            }
            let factor = m.get(i, c).clone();
            for j in 0..m.cols {
                let v = f.sub(m.get(i, j), &f.mul(&factor, m.get(r, j)));
                m.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (m, pivots)
}

pub fn rank<F: Field>(f: &F, a: &Mat<F::Scalar>) -> usize {
    rref(f, a).1.len()
}

/// Basis of `{v : a v = 0}`, one vector per free column, in column order.
pub fn nullspace<F: Field>(f: &F, a: &Mat<F::Scalar>) -> Vec<Vec<F::Scalar>> {
    let (r, pivots) = rref(f, a);
    let mut out = Vec::new();
    for free in (0..a.cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![f.zero(); a.cols];
        v[free] = f.one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = f.neg(r.get(row, free));
        }
        out.push(v);
    }
    out
}

pub fn inverse<F: Field>(f: &F, a: &Mat<F::Scalar>) -> Option<Mat<F::Scalar>> {
    let n = a.rows;
    if n != a.cols {
        return None;
    }
    let aug = Mat::from_fn(n, 2 * n, |i, j| {
        if j < n {
            a.get(i, j).clone()
        } else if j - n == i {
            f.one()
        } else {
            f.zero()
        }
    });
    let (r, pivots) = rref(f, &aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(Mat::from_fn(n, n, |i, j| r.get(i, n + j).clone()))
}

/// Some `x` with `a x = b`, or `None` when the system is inconsistent.
pub fn solve<F: Field>(f: &F, a: &Mat<F::Scalar>, b: &Mat<F::Scalar>) -> Option<Mat<F::Scalar>> {
    let (n, m, k) = (a.rows, a.cols, b.cols);
    let aug = Mat::from_fn(n, m + k, |i, j| {
        if j < m {
            a.get(i, j).clone()
        } else {
            b.get(i, j - m).clone()
        }
    });
    let (r, pivots) = rref(f, &aug);
    if pivots.iter().any(|&p| p >= m) {
        return None;
    }
    let mut x = zeros(f, m, k);
    for (row, &pc) in pivots.iter().enumerate() {
        for j in 0..k {
            x.set(pc, j, r.get(row, m + j).clone());
        }
    }
    Some(x)
}

/// `a = fc * g` with `fc` the pivot columns of `a` (full column rank) and
/// `g` the nonzero rows of `rref(a)` (full row rank). Also returns the pivots.
pub fn rank_factorization<F: Field>(
    f: &F,
    a: &Mat<F::Scalar>,
) -> (Mat<F::Scalar>, Mat<F::Scalar>, Vec<usize>) {
    let (r, pivots) = rref(f, a);
    let k = pivots.len();
    let fc = Mat::from_fn(a.rows, k, |i, j| a.get(i, pivots[j]).clone());
    let g = Mat::from_fn(k, a.cols, |i, j| r.get(i, j).clone());
    (fc, g, pivots)
}

/// Canonical basis (nonzero RREF rows) of the span of `vectors` in `F^n`.
pub fn span<F: Field>(f: &F, n: usize, vectors: &[Vec<F::Scalar>]) -> Vec<Vec<F::Scalar>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = Mat::from_fn(vectors.len(), n, |i, j| vectors[i][j].clone());
    let (r, pivots) = rref(f, &m);
    (0..pivots.len()).map(|i| r.row(i).to_vec()).collect()
}

pub fn in_span<F: Field>(f: &F, basis: &[Vec<F::Scalar>], v: &[F::Scalar]) -> bool {
    if v.iter().all(|x| f.is_zero(x)) {
        return true;
    }
    let n = v.len();
    let mut all = basis.to_vec();
    all.push(v.to_vec());
    span(f, n, &all).len() == basis.len()
}

/// `{y : y . v = 0 for all v in span(basis)}` under the plain dot pairing.
pub fn annihilator<F: Field>(f: &F, n: usize, basis: &[Vec<F::Scalar>]) -> Vec<Vec<F::Scalar>> {
    if basis.is_empty() {
        return (0..n)
            .map(|i| (0..n).map(|j| if i == j { f.one() } else { f.zero() }).collect())
            .collect();
    }
    let m = Mat::from_fn(basis.len(), n, |i, j| basis[i][j].clone());
    span(f, n, &nullspace(f, &m))
}

pub fn intersect<F: Field>(
    f: &F,
    n: usize,
    u: &[Vec<F::Scalar>],
    v: &[Vec<F::Scalar>],
) -> Vec<Vec<F::Scalar>> {
    // U ∩ V = ann(ann U + ann V)
    let mut both = annihilator(f, n, u);
    both.extend(annihilator(f, n, v));
    annihilator(f, n, &span(f, n, &both))
}
