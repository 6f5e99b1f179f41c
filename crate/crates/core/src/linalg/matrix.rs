use std::fmt;
use std::ops::{Index, IndexMut};

use super::scalar::{default_tolerance, Scalar};
use super::vector;
use crate::error::{Error, Result};

/// Dense row-major matrix over a [`Scalar`] backend.
#[derive(Clone, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<S>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must be rows * cols");
        Matrix { rows, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
            data.extend(row);
        }
        Matrix { rows: nrows, cols, data }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<S>]) -> Self {
        for c in columns {
            assert_eq!(c.len(), rows, "column length mismatch");
        }
        Matrix::from_fn(rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| S::from_i64(v)).collect())
                .collect(),
        )
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![S::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { S::one() } else { S::zero() })
    }

    /// Single column matrix.
    pub fn column_vector(v: &[S]) -> Self {
        Matrix::from_vec(v.len(), 1, v.to_vec())
    }

    /// `a bᵀ`.
    pub fn outer(a: &[S], b: &[S]) -> Self {
        Matrix::from_fn(a.len(), b.len(), |i, j| a[i].clone() * b[j].clone())
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

    pub fn entries(&self) -> &[S] {
        &self.data
    }

    pub fn into_entries(self) -> Vec<S> {
        self.data
    }

    pub fn row(&self, i: usize) -> Vec<S> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<S> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<S>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn set_column(&mut self, j: usize, v: &[S]) {
        assert_eq!(v.len(), self.rows);
        for (i, x) in v.iter().enumerate() {
            self[(i, j)] = x.clone();
        }
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Matrix::from_fn(self.rows, cols.len(), |i, j| self[(i, cols[j])].clone())
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), self.cols, |i, j| self[(rows[i], j)].clone())
    }

    pub fn delete_columns(&self, cols: &[usize]) -> Self {
        let keep: Vec<usize> = (0..self.cols).filter(|j| !cols.contains(j)).collect();
        self.select_columns(&keep)
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        Matrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        })
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matmul shape mismatch");
        Matrix::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).fold(S::zero(), |acc, k| {
                acc + self[(i, k)].clone() * other[(k, j)].clone()
            })
        })
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| vector::dot(&self.data[i * self.cols..(i + 1) * self.cols], v))
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, s: &S) -> Self {
        self.map(|a| a.clone() * s.clone())
    }

    pub fn map(&self, f: impl Fn(&S) -> S) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(S, S) -> S) -> Self {
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| f(a.clone(), b.clone()))
            .collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(Scalar::magnitude).fold(0.0, f64::max)
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.is_zero_with(default_tolerance())
    }

    /// Exact test for rationals; floats compare against `tol` in absolute
    /// terms, the caller is expected to supply a sensibly scaled value.
    pub fn is_zero_with(&self, tol: f64) -> bool {
        self.data.iter().all(|x| x.is_negligible(1.0, tol))
    }

    /// Entrywise equality: exact for rationals, relative to the larger
    /// magnitude of the two operands for floats.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return false;
        }
        let scale = self.max_abs().max(other.max_abs()).max(1.0);
        self.data
            .iter()
            .zip(&other.data)
            .all(|(a, b)| (a.clone() - b.clone()).is_negligible(scale, tol))
    }

    pub fn rank(&self) -> usize {
        self.rank_with(default_tolerance())
    }

    /// Exact row rank for rationals, count of singular values above
    /// `tol * sigma_max` for floats.
    pub fn rank_with(&self, tol: f64) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        S::rank_of(self, tol)
    }

    pub fn nullspace(&self) -> Vec<Vec<S>> {
        self.nullspace_with(default_tolerance())
    }

    pub fn nullspace_with(&self, tol: f64) -> Vec<Vec<S>> {
        if self.cols == 0 {
            return Vec::new();
        }
        if self.rows == 0 {
            return (0..self.cols).map(|j| vector::unit(self.cols, j)).collect();
        }
        S::nullspace_of(self, tol)
    }

    pub fn invert(&self) -> Result<Self> {
        self.invert_with(default_tolerance())
    }

    pub fn invert_with(&self, tol: f64) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(n));
        let ech = Echelon::reduce_limited(&aug, tol, n);
        if ech.pivots.len() < n || ech.pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return Err(Error::Singular);
        }
        Ok(Matrix::from_fn(n, n, |i, j| ech.rref[(i, n + j)].clone()))
    }

    /// Some solution `x` of `self · x = rhs`, or `None` if the system is
    /// inconsistent. Free variables are set to zero.
    pub fn solve(&self, rhs: &Self) -> Option<Self> {
        self.solve_with(rhs, default_tolerance())
    }

    pub fn solve_with(&self, rhs: &Self, tol: f64) -> Option<Self> {
        assert_eq!(self.rows, rhs.rows, "solve row mismatch");
        let n = self.cols;
        let aug = self.hstack(rhs);
        let ech = Echelon::reduce_limited(&aug, tol, n);
        // rows below the pivots must vanish on the right-hand side
        let scale = aug.max_abs().max(1.0);
        for i in ech.pivots.len()..self.rows {
            for j in 0..rhs.cols {
                if !ech.rref[(i, n + j)].is_negligible(scale, tol) {
                    return None;
                }
            }
        }
        let mut x = Matrix::zeros(n, rhs.cols);
        for (i, &p) in ech.pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x[(p, j)] = ech.rref[(i, n + j)].clone();
            }
        }
        if !S::EXACT {
            // reject least-squares style answers
            let resid = self.mul(&x).sub(rhs);
            if !resid.is_zero_with(tol.sqrt() * scale) {
                return None;
            }
        }
        Some(x)
    }

    /// Column vector of the diagonal entries.
    pub fn diag_vector(&self) -> Result<Vec<S>> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        Ok((0..self.rows).map(|i| self[(i, i)].clone()).collect())
    }

    pub fn to_f64(&self) -> Matrix<f64> {
        Matrix::from_vec(self.rows, self.cols, self.data.iter().map(Scalar::to_f64).collect())
    }
}

impl<S> Index<(usize, usize)> for Matrix<S> {
    type Output = S;
    fn index(&self, (i, j): (usize, usize)) -> &S {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<S> IndexMut<(usize, usize)> for Matrix<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<S: fmt::Display> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> =
                self.data[i * self.cols..(i + 1) * self.cols].iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Reduced row echelon form.
pub(crate) struct Echelon<S> {
    pub rref: Matrix<S>,
    /// Pivot column of each nonzero row, increasing.
    pub pivots: Vec<usize>,
}

impl<S: Scalar> Echelon<S> {
    pub fn reduce(m: &Matrix<S>, tol: f64) -> Self {
        Self::reduce_limited(m, tol, m.cols)
    }

    /// Gauss-Jordan elimination choosing pivots only among the first
    /// `pivot_cols` columns. Exact backends take the first nonzero entry,
    /// floats use partial pivoting with a threshold of `tol * max|m|`.
    pub fn reduce_limited(m: &Matrix<S>, tol: f64, pivot_cols: usize) -> Self {
        let mut a = m.clone();
        let threshold_scale = m.max_abs();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..pivot_cols {
            if row == a.rows {
                break;
            }
            let candidate = if S::EXACT {
                (row..a.rows).find(|&i| !a[(i, col)].is_zero())
            } else {
                (row..a.rows)
                    .max_by(|&x, &y| a[(x, col)].magnitude().total_cmp(&a[(y, col)].magnitude()))
                    .filter(|&i| !a[(i, col)].is_negligible(threshold_scale, tol))
            };
            let Some(piv) = candidate else {
                if !S::EXACT {
                    for i in row..a.rows {
                        a[(i, col)] = S::zero();
                    }
                }
                continue;
            };
            if piv != row {
                for j in 0..a.cols {
                    a.data.swap(piv * a.cols + j, row * a.cols + j);
                }
            }
            let inv = S::one() / a[(row, col)].clone();
            for j in col..a.cols {
                let v = a[(row, j)].clone() * inv.clone();
                a[(row, j)] = v;
            }
            for i in 0..a.rows {
                if i == row || a[(i, col)].is_zero() {
                    continue;
                }
                let factor = a[(i, col)].clone();
                for j in col..a.cols {
                    let v = a[(i, j)].clone() - factor.clone() * a[(row, j)].clone();
                    a[(i, j)] = v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        Echelon { rref: a, pivots }
    }

    pub fn nullspace(&self) -> Vec<Vec<S>> {
        let n = self.rref.cols;
        let free: Vec<usize> = (0..n).filter(|j| !self.pivots.contains(j)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![S::zero(); n];
                v[f] = S::one();
                for (i, &p) in self.pivots.iter().enumerate() {
                    v[p] = -self.rref[(i, f)].clone();
                }
                v
            })
            .collect()
    }
}
