//! Dense complex matrices with LU-based determinant and inverse.
//!
//! The matrices here are small (spinor-space dimension N and coordinate
//! dimension N^2), so a plain row-major layout with partial-pivoting LU
//! covers everything the rest of the crate needs.

use crate::error::{Error, Result};
use crate::scalar::{Scalar, Tolerance};
use num_complex::Complex;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

/// Dense row-major complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<Complex<T>>,
}

impl<T: Scalar> ComplexMatrix<T> {
    /// Zero matrix of the given shape.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Complex::new(T::zero(), T::zero()); rows * cols],
        }
    }

    /// Identity matrix of size `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex::new(T::one(), T::zero());
        }
        m
    }

    /// `z` times the identity of size `n`.
    pub fn scalar_matrix(n: usize, z: Complex<T>) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = z;
        }
        m
    }

    /// Square matrix with the given diagonal.
    pub fn diagonal(entries: &[Complex<T>]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = entries[i];
        }
        m
    }

    /// Builds a matrix entry by entry from `f(row, col)`.
    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Complex<T>,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds a matrix from row slices, rejecting ragged or non-finite data.
    pub fn from_rows(rows: &[Vec<Complex<T>>]) -> Result<Self> {
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
        }
        let m = Self {
            rows: r,
            cols: c,
            data: rows.iter().flatten().copied().collect(),
        };
        m.check_finite()?;
        Ok(m)
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// True for square matrices.
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Flat row-major access to the entries.
    pub fn data(&self) -> &[Complex<T>] {
        &self.data
    }

    /// Errors on the first NaN or infinite entry.
    pub fn check_finite(&self) -> Result<()> {
        for i in 0..self.rows {
            for j in 0..self.cols {
                let z = self[(i, j)];
                if !z.re.is_finite() || !z.im.is_finite() {
                    return Err(Error::NonFinite { row: i, col: j });
                }
            }
        }
        Ok(())
    }

    fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// Transposed copy.
    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    /// Entrywise complex conjugate.
    pub fn conjugate(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self[(i, j)].conj())
    }

    /// Hermitian adjoint (conjugate transpose).
    pub fn hermitian_adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    /// Copy scaled by `z`.
    pub fn scaled(&self, z: Complex<T>) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self[(i, j)] * z)
    }

    /// Trace of a square matrix.
    pub fn trace(&self) -> Complex<T> {
        assert!(self.is_square(), "trace requires a square matrix");
        let mut t = Complex::new(T::zero(), T::zero());
        for i in 0..self.rows {
            t += self[(i, i)];
        }
        t
    }

    /// Trace of `self * other` without forming the product.
    pub fn trace_product(&self, other: &Self) -> Complex<T> {
        assert_eq!(self.cols, other.rows, "shape mismatch in trace_product");
        assert_eq!(self.rows, other.cols, "shape mismatch in trace_product");
        let mut t = Complex::new(T::zero(), T::zero());
        for i in 0..self.rows {
            for j in 0..self.cols {
                t += self[(i, j)] * other[(j, i)];
            }
        }
        t
    }

    /// Largest entry modulus.
    pub fn max_norm(&self) -> T {
        self.data.iter().map(|z| z.norm()).fold(T::zero(), T::max)
    }

    /// Largest entrywise modulus of the difference.
    pub fn max_diff(&self, other: &Self) -> T {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "max_diff requires equal shapes"
        );
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (*a - *b).norm())
            .fold(T::zero(), T::max)
    }

    /// Largest deviation from Hermitian symmetry, `max |a_ij - conj(a_ji)|`.
    pub fn max_asymmetry(&self) -> T {
        assert!(self.is_square(), "asymmetry check requires a square matrix");
        let mut worst = T::zero();
        for i in 0..self.rows {
            for j in 0..self.cols {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[Complex<T>]) -> Vec<Complex<T>> {
        assert_eq!(v.len(), self.cols, "mul_vec length mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Complex::new(T::zero(), T::zero());
                for j in 0..self.cols {
                    acc += self[(i, j)] * v[j];
                }
                acc
            })
            .collect()
    }

    /// Rectangular sub-block starting at `(row0, col0)`.
    pub fn block(&self, row0: usize, col0: usize, rows: usize, cols: usize) -> Self {
        assert!(
            row0 + rows <= self.rows && col0 + cols <= self.cols,
            "block out of range"
        );
        Self::from_fn(rows, cols, |i, j| self[(row0 + i, col0 + j)])
    }

    /// Writes `block` into this matrix starting at `(row0, col0)`.
    pub fn set_block(&mut self, row0: usize, col0: usize, block: &Self) {
        assert!(
            row0 + block.rows <= self.rows && col0 + block.cols <= self.cols,
            "block out of range"
        );
        for i in 0..block.rows {
            for j in 0..block.cols {
                self[(row0 + i, col0 + j)] = block[(i, j)];
            }
        }
    }

    /// Determinant via LU decomposition with partial pivoting.
    pub fn det(&self) -> Result<Complex<T>> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok(Complex::new(T::one(), T::zero()));
        }
        let lu = LuFactors::compute(self);
        Ok(lu.det(n))
    }

    /// Inverse via the same LU decomposition, solving against the identity.
    ///
    /// The determinant modulus is compared against `tol.abs`; anything at or
    /// below it reports [`Error::Singular`] carrying the observed magnitude.
    pub fn inverse(&self, tol: &Tolerance<T>) -> Result<Self> {
        let n = self.require_square()?;
        let lu = LuFactors::compute(self);
        let det_abs = lu.det(n).norm();
        // NaN determinants count as singular too.
        if det_abs.is_nan() || det_abs <= tol.abs {
            return Err(Error::Singular {
                det_abs: det_abs.to_f64().unwrap_or(0.0),
            });
        }
        let mut inv = Self::zeros(n, n);
        let mut col = vec![Complex::new(T::zero(), T::zero()); n];
        for j in 0..n {
            for x in col.iter_mut() {
                *x = Complex::new(T::zero(), T::zero());
            }
            col[j] = Complex::new(T::one(), T::zero());
            lu.solve_in_place(&mut col);
            for i in 0..n {
                inv[(i, j)] = col[i];
            }
        }
        Ok(inv)
    }
}

/// LU factors with row pivoting, stored packed in one square array.
struct LuFactors<T> {
    n: usize,
    data: Vec<Complex<T>>,
    perm: Vec<usize>,
    sign_flips: usize,
}

impl<T: Scalar> LuFactors<T> {
    fn compute(m: &ComplexMatrix<T>) -> Self {
        let n = m.rows;
        let mut data = m.data.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut sign_flips = 0usize;
        for k in 0..n {
            // pick the pivot row by largest modulus in column k
            let mut best = k;
            let mut best_norm = data[k * n + k].norm();
            for r in (k + 1)..n {
                let cand = data[r * n + k].norm();
                if cand > best_norm {
                    best = r;
                    best_norm = cand;
                }
            }
            if best != k {
                for c in 0..n {
                    data.swap(k * n + c, best * n + c);
                }
                perm.swap(k, best);
                sign_flips += 1;
            }
            let pivot = data[k * n + k];
            if pivot.norm() == T::zero() {
                continue; // exactly singular; determinant becomes zero
            }
            for r in (k + 1)..n {
                let factor = data[r * n + k] / pivot;
                data[r * n + k] = factor;
                for c in (k + 1)..n {
                    let sub = factor * data[k * n + c];
                    data[r * n + c] -= sub;
                }
            }
        }
        Self {
            n,
            data,
            perm,
            sign_flips,
        }
    }

    fn det(&self, n: usize) -> Complex<T> {
        let mut d = Complex::new(T::one(), T::zero());
        for i in 0..n {
            d *= self.data[i * n + i];
        }
        if self.sign_flips % 2 == 1 {
            d = -d;
        }
        d
    }

    /// Solves `A x = b` in place, permuting `b` first.
    fn solve_in_place(&self, b: &mut [Complex<T>]) {
        let n = self.n;
        let permuted: Vec<Complex<T>> = self.perm.iter().map(|&p| b[p]).collect();
        b.copy_from_slice(&permuted);
        // forward: L y = P b (unit lower triangle)
        for i in 1..n {
            let mut acc = b[i];
            for (j, &bj) in b.iter().enumerate().take(i) {
                acc -= self.data[i * n + j] * bj;
            }
            b[i] = acc;
        }
        // backward: U x = y
        for i in (0..n).rev() {
            let mut acc = b[i];
            for (j, &bj) in b.iter().enumerate().skip(i + 1) {
                acc -= self.data[i * n + j] * bj;
            }
            b[i] = acc / self.data[i * n + i];
        }
    }
}

impl<T> Index<(usize, usize)> for ComplexMatrix<T> {
    type Output = Complex<T>;
    fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for ComplexMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<T> {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Scalar> Add for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;
    fn add(self, rhs: Self) -> ComplexMatrix<T> {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "shape mismatch in add"
        );
        ComplexMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)] + rhs[(i, j)])
    }
}

impl<T: Scalar> Sub for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;
    fn sub(self, rhs: Self) -> ComplexMatrix<T> {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "shape mismatch in sub"
        );
        ComplexMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)] - rhs[(i, j)])
    }
}

impl<T: Scalar> Neg for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;
    fn neg(self) -> ComplexMatrix<T> {
        ComplexMatrix::from_fn(self.rows, self.cols, |i, j| -self[(i, j)])
    }
}

impl<T: Scalar> Mul for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;
    fn mul(self, rhs: Self) -> ComplexMatrix<T> {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in mul");
        let mut out = ComplexMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.norm() == T::zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let add = a * rhs[(k, j)];
                    out[(i, j)] += add;
                }
            }
        }
        out
    }
}
