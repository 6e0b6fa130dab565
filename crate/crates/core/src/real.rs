//! Dense real matrices.
//!
//! Used for the induced linear maps on Hermitian coordinate space and for
//! the four-component Majorana representation, where all entries are real.

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::scalar::Scalar;
use num_complex::Complex;
use std::ops::{Index, IndexMut, Mul, Sub};

/// Dense row-major real matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct RealMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> RealMatrix<T> {
    /// Zero matrix of the given shape.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    /// Identity matrix of size `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    /// Square matrix with the given diagonal.
    pub fn diagonal(entries: &[T]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = entries[i];
        }
        m
    }

    /// Builds a matrix entry by entry from `f(row, col)`.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds a matrix from row slices, rejecting ragged or non-finite data.
    pub fn from_rows(rows: &[Vec<T>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != c {
                return Err(Error::RaggedRows {
                    row: i,
                    expected: c,
                    found: row.len(),
                });
            }
            for (j, x) in row.iter().enumerate() {
                if !x.is_finite() {
                    return Err(Error::NonFinite { row: i, col: j });
                }
            }
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.iter().flatten().copied().collect(),
        })
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Flat row-major access to the entries.
    pub fn data(&self) -> &[T] {
        &self.data
    }

    /// Transposed copy.
    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols, "mul_vec length mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for j in 0..self.cols {
                    acc += self[(i, j)] * v[j];
                }
                acc
            })
            .collect()
    }

    /// Largest entry magnitude.
    pub fn max_norm(&self) -> T {
        self.data.iter().map(|x| x.abs()).fold(T::zero(), T::max)
    }

    /// Largest entrywise magnitude of the difference.
    pub fn max_diff(&self, other: &Self) -> T {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "max_diff requires equal shapes"
        );
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (*a - *b).abs())
            .fold(T::zero(), T::max)
    }

    /// Promotes to a complex matrix with zero imaginary parts.
    pub fn to_complex(&self) -> ComplexMatrix<T> {
        ComplexMatrix::from_fn(self.rows, self.cols, |i, j| {
            Complex::new(self[(i, j)], T::zero())
        })
    }

    /// Determinant, computed through the complex LU path.
    pub fn det(&self) -> Result<T> {
        Ok(self.to_complex().det()?.re)
    }
}

impl<T> Index<(usize, usize)> for RealMatrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for RealMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Scalar> Mul for &RealMatrix<T> {
    type Output = RealMatrix<T>;
    fn mul(self, rhs: Self) -> RealMatrix<T> {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in mul");
        let mut out = RealMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                for j in 0..rhs.cols {
                    let add = a * rhs[(k, j)];
                    out[(i, j)] += add;
                }
            }
        }
        out
    }
}

impl<T: Scalar> Sub for &RealMatrix<T> {
    type Output = RealMatrix<T>;
    fn sub(self, rhs: Self) -> RealMatrix<T> {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "shape mismatch in sub"
        );
        RealMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)] - rhs[(i, j)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_multiplication_and_transpose() {
        let m = RealMatrix::from_rows(&[vec![1.0, 2.0], vec![3.0, 4.0]]).unwrap();
        let id = RealMatrix::identity(2);
        assert!((&m * &id).max_diff(&m) == 0.0);
        assert_eq!(m.transpose()[(0, 1)], 3.0);
    }

    #[test]
    fn det_matches_cofactor_oracle() {
        let m = RealMatrix::from_rows(&[vec![1.0, 2.0], vec![3.0, 4.0]]).unwrap();
        let oracle = 1.0f64 * 4.0 - 2.0 * 3.0;
        assert!((m.det().unwrap() - oracle).abs() < 1e-14);
    }

    #[test]
    fn mul_vec_applies_rows() {
        let m = RealMatrix::from_rows(&[vec![1.0, -1.0], vec![2.0, 0.5]]).unwrap();
        assert_eq!(m.mul_vec(&[3.0, 1.0]), vec![2.0, 6.5]);
    }

    #[test]
    fn from_rows_rejects_non_finite() {
        assert!(RealMatrix::from_rows(&[vec![f64::INFINITY]]).is_err());
    }
}
