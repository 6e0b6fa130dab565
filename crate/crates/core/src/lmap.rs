//! The real linear action induced on Hermitian coordinates by SL(N, C).
//!
//! A unimodular matrix c acts on a Hermitian matrix x as c x c-adjoint;
//! expressed in basis coordinates this is a real n^2 by n^2 matrix whose
//! entries are trace pairings. The assignment is a group homomorphism and
//! its kernel is the group of n-th roots of unity times the identity.

use crate::error::{Error, Result};
use crate::herm::{HermBasis, HermVector};
use crate::matrix::ComplexMatrix;
use crate::real::RealMatrix;
use crate::scalar::{Scalar, Tolerance};
use num_complex::Complex;

/// Real linear map on the n^2 coordinates of a Hermitian matrix space.
#[derive(Debug, Clone, PartialEq)]
pub struct FinsLinearMap<T> {
    n: usize,
    matrix: RealMatrix<T>,
}

impl<T: Scalar> FinsLinearMap<T> {
    /// Identity map on dimension-n coordinates.
    pub fn identity(n: usize) -> Self {
        Self {
            n,
            matrix: RealMatrix::identity(n * n),
        }
    }

    /// Wraps an explicit coordinate matrix; must be n^2 by n^2.
    pub fn from_matrix(n: usize, matrix: RealMatrix<T>) -> Result<Self> {
        if matrix.rows() != n * n || matrix.cols() != n * n {
            return Err(Error::Dimension {
                what: "coordinate map size",
                expected: n * n,
                found: matrix.rows().max(matrix.cols()),
            });
        }
        Ok(Self { n, matrix })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Underlying coordinate matrix.
    pub fn matrix(&self) -> &RealMatrix<T> {
        &self.matrix
    }

    /// Determinant of the coordinate matrix.
    pub fn det(&self) -> Result<T> {
        self.matrix.det()
    }

    /// The map acting as `self` after `first`.
    pub fn compose(&self, first: &Self) -> Result<Self> {
        if self.n != first.n {
            return Err(Error::Dimension {
                what: "coordinate map dimension",
                expected: self.n,
                found: first.n,
            });
        }
        Ok(Self {
            n: self.n,
            matrix: &self.matrix * &first.matrix,
        })
    }

    /// Applies the map to a coordinate vector.
    pub fn apply(&self, v: &HermVector<T>) -> Result<HermVector<T>> {
        if v.n() != self.n {
            return Err(Error::Dimension {
                what: "coordinate dimension vs map",
                expected: self.n,
                found: v.n(),
            });
        }
        HermVector::new(self.n, self.matrix.mul_vec(v.coords()))
    }

    /// Largest entrywise difference against another map.
    pub fn max_diff(&self, other: &Self) -> T {
        self.matrix.max_diff(&other.matrix)
    }
}

/// Coordinate matrix of x -> c x c-adjoint over a basis.
///
/// Entry (a, b) is the real part of trace(upper[a] * c * lower[b] * c-adjoint);
/// the imaginary parts vanish identically and are guarded. Requires c in
/// SL(n, C) within the tolerance.
pub fn induced_map<T: Scalar>(
    c: &ComplexMatrix<T>,
    basis: &HermBasis<T>,
    tol: &Tolerance<T>,
) -> Result<FinsLinearMap<T>> {
    let n = basis.n();
    if !c.is_square() || c.rows() != n {
        return Err(Error::Dimension {
            what: "matrix dimension vs basis",
            expected: n,
            found: c.rows(),
        });
    }
    c.check_finite()?;
    let det = c.det()?;
    if !tol.close_complex(det, Complex::new(T::one(), T::zero())) {
        return Err(Error::NotUnimodular {
            re: det.re.to_f64().unwrap_or(f64::NAN),
            im: det.im.to_f64().unwrap_or(f64::NAN),
        });
    }
    let adj = c.hermitian_adjoint();
    let moved: Vec<ComplexMatrix<T>> = basis.lower().iter().map(|e| &(c * e) * &adj).collect();
    let scale = c.max_norm();
    let guard = T::of(1e-10).max(T::consistency_floor() * scale * scale);
    let dim = n * n;
    let mut matrix = RealMatrix::zeros(dim, dim);
    for a in 0..dim {
        for b in 0..dim {
            let z = basis.upper_at(a).trace_product(&moved[b]);
            if z.im.abs() > guard {
                return Err(Error::InternalConsistency {
                    what: "imaginary residue of an induced map entry",
                    residue: z.im.to_f64().unwrap_or(f64::NAN),
                });
            }
            matrix[(a, b)] = z.re;
        }
    }
    Ok(FinsLinearMap { n, matrix })
}

/// Largest entry deviation between the map of a product and the product of
/// the maps, measuring the homomorphism property on a concrete pair.
pub fn check_homomorphism<T: Scalar>(
    b: &ComplexMatrix<T>,
    c: &ComplexMatrix<T>,
    basis: &HermBasis<T>,
    tol: &Tolerance<T>,
) -> Result<T> {
    let product = induced_map(&(b * c), basis, tol)?;
    let composed = induced_map(b, basis, tol)?.compose(&induced_map(c, basis, tol)?)?;
    Ok(product.max_diff(&composed))
}

/// The kernel of the induced action: unit scalar matrices whose phases are
/// the n-th roots of unity.
pub fn kernel_elements<T: Scalar>(n: usize) -> Vec<ComplexMatrix<T>> {
    (0..n)
        .map(|k| {
            let angle = T::of(2.0) * T::PI() * T::of(k as f64) / T::of(n as f64);
            ComplexMatrix::scalar_matrix(n, Complex::from_polar(T::one(), angle))
        })
        .collect()
}
