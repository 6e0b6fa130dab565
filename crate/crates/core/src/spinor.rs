//! N-component spinors, the antisymmetric scalar N-product, and basis changes.
//!
//! The scalar product of N spinors in an N-dimensional space is the fully
//! antisymmetric contraction of their components, which equals the
//! determinant of the matrix holding the component lists as columns. A basis
//! is canonical exactly when the product of its members is one, and the
//! transition matrices between canonical bases form SL(N, C).

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::scalar::{Scalar, Tolerance};
use num_complex::Complex;

/// Spinor: a component vector over the complex field, dimension at least two.
#[derive(Debug, Clone, PartialEq)]
pub struct Spinor<T> {
    components: Vec<Complex<T>>,
}

impl<T: Scalar> Spinor<T> {
    /// Builds a spinor, rejecting dimensions below two and non-finite entries.
    pub fn new(components: Vec<Complex<T>>) -> Result<Self> {
        if components.len() < 2 {
            return Err(Error::Dimension {
                what: "spinor dimension",
                expected: 2,
                found: components.len(),
            });
        }
        for (i, z) in components.iter().enumerate() {
            if !z.re.is_finite() || !z.im.is_finite() {
                return Err(Error::NonFinite { row: i, col: 0 });
            }
        }
        Ok(Self { components })
    }

    /// Dimension of the carrying space.
    pub fn n(&self) -> usize {
        self.components.len()
    }

    /// Component access.
    pub fn component(&self, i: usize) -> Complex<T> {
        self.components[i]
    }

    /// All components.
    pub fn components(&self) -> &[Complex<T>] {
        &self.components
    }

    /// Largest component modulus.
    pub fn max_norm(&self) -> T {
        self.components
            .iter()
            .map(|z| z.norm())
            .fold(T::zero(), T::max)
    }
}

fn component_matrix<T: Scalar>(spinors: &[Spinor<T>]) -> Result<ComplexMatrix<T>> {
    let n = spinors.len();
    if n < 2 {
        return Err(Error::Dimension {
            what: "spinor count",
            expected: 2,
            found: n,
        });
    }
    for s in spinors {
        if s.n() != n {
            return Err(Error::Dimension {
                what: "spinor dimension vs count",
                expected: n,
                found: s.n(),
            });
        }
    }
    // column j carries the components of the j-th spinor
    Ok(ComplexMatrix::from_fn(n, n, |i, j| spinors[j].component(i)))
}

/// Antisymmetric scalar N-product of N spinors in dimension N.
///
/// Equals the determinant of the matrix whose columns are the component
/// lists, i.e. the full Levi-Civita contraction of the components.
pub fn scalar_n_product<T: Scalar>(spinors: &[Spinor<T>]) -> Result<Complex<T>> {
    component_matrix(spinors)?.det()
}

/// True when the spinors form a canonical basis: their product equals one
/// within the tolerance.
pub fn is_canonical<T: Scalar>(spinors: &[Spinor<T>], tol: &Tolerance<T>) -> Result<bool> {
    let p = scalar_n_product(spinors)?;
    Ok(tol.close_complex(p, Complex::new(T::one(), T::zero())))
}

/// True when the spinors are linearly dependent: their product vanishes
/// against a scale-aware threshold built from the component magnitudes.
pub fn linearly_dependent<T: Scalar>(spinors: &[Spinor<T>], tol: &Tolerance<T>) -> Result<bool> {
    let p = scalar_n_product(spinors)?;
    let scale = spinors
        .iter()
        .map(Spinor::max_norm)
        .fold(T::one(), |acc, x| acc * x);
    Ok(p.norm() <= tol.abs + tol.rel * scale)
}

/// Transition between canonical spinor bases.
///
/// `c` maps new basis vectors to old ones (its columns are the new basis
/// members' components in the old basis) and `d = c^-1` carries component
/// vectors: a spinor with old components `xi` has new components `d * xi`.
/// Both matrices lie in SL(N, C).
#[derive(Debug, Clone)]
pub struct BasisChange<T> {
    c: ComplexMatrix<T>,
    d: ComplexMatrix<T>,
}

impl<T: Scalar> BasisChange<T> {
    /// Builds a change from the basis matrix `c`, checking unimodularity.
    pub fn from_basis_matrix(c: ComplexMatrix<T>, tol: &Tolerance<T>) -> Result<Self> {
        let d = Self::checked_inverse(&c, tol)?;
        Ok(Self { c, d })
    }

    /// Builds a change from the component matrix `d` (the matrix applied to
    /// component vectors), checking unimodularity.
    pub fn from_component_matrix(d: ComplexMatrix<T>, tol: &Tolerance<T>) -> Result<Self> {
        let c = Self::checked_inverse(&d, tol)?;
        Ok(Self { c, d })
    }

    fn checked_inverse(m: &ComplexMatrix<T>, tol: &Tolerance<T>) -> Result<ComplexMatrix<T>> {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        if m.rows() < 2 {
            return Err(Error::Dimension {
                what: "basis change dimension",
                expected: 2,
                found: m.rows(),
            });
        }
        m.check_finite()?;
        let det = m.det()?;
        if !tol.close_complex(det, Complex::new(T::one(), T::zero())) {
            return Err(Error::NotUnimodular {
                re: det.re.to_f64().unwrap_or(f64::NAN),
                im: det.im.to_f64().unwrap_or(f64::NAN),
            });
        }
        m.inverse(tol)
    }

    /// Dimension of the spinor space.
    pub fn n(&self) -> usize {
        self.c.rows()
    }

    /// Basis matrix (columns are the new basis members in the old basis).
    pub fn c(&self) -> &ComplexMatrix<T> {
        &self.c
    }

    /// Component matrix, the inverse of [`BasisChange::c`].
    pub fn d(&self) -> &ComplexMatrix<T> {
        &self.d
    }

    /// The change obtained by applying `self` first and then `second`
    /// (stated relative to the basis `self` produces).
    pub fn then(&self, second: &BasisChange<T>) -> BasisChange<T> {
        BasisChange {
            c: &self.c * &second.c,
            d: &second.d * &self.d,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::{random_sl, random_spinor, rng_from_seed};
    use crate::C64;

    fn sp(entries: &[(f64, f64)]) -> Spinor<f64> {
        Spinor::new(entries.iter().map(|&(re, im)| C64::new(re, im)).collect()).unwrap()
    }

    fn canonical_pair() -> Vec<Spinor<f64>> {
        vec![sp(&[(1.0, 0.0), (0.0, 0.0)]), sp(&[(0.0, 0.0), (1.0, 0.0)])]
    }

    #[test]
    fn canonical_two_basis_has_product_one() {
        let p = scalar_n_product(&canonical_pair()).unwrap();
        assert_eq!(p, C64::new(1.0, 0.0));
        assert!(is_canonical(&canonical_pair(), &Tolerance::default()).unwrap());
    }

    #[test]
    fn product_matches_two_dimensional_formula() {
        // xi^1 eta^2 - xi^2 eta^1
        let mut rng = rng_from_seed(11);
        for _ in 0..200 {
            let xi = random_spinor::<f64, _>(2, &mut rng).unwrap();
            let eta = random_spinor::<f64, _>(2, &mut rng).unwrap();
            let want = xi.component(0) * eta.component(1) - xi.component(1) * eta.component(0);
            let got = scalar_n_product(&[xi, eta]).unwrap();
            assert!((want - got).norm() < 1e-12);
        }
    }

    /// Independent oracle: full Levi-Civita sum over permutations.
    fn levi_civita_product(spinors: &[Spinor<f64>]) -> C64 {
        let n = spinors.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut total = C64::new(0.0, 0.0);
        loop {
            let mut sign = 1.0;
            for i in 0..n {
                for j in (i + 1)..n {
                    if perm[i] > perm[j] {
                        sign = -sign;
                    }
                }
            }
            let mut prod = C64::new(sign, 0.0);
            for (j, &i) in perm.iter().enumerate() {
                prod *= spinors[j].component(i);
            }
            total += prod;
            if !next_permutation(&mut perm) {
                break;
            }
        }
        total
    }

    fn next_permutation(p: &mut [usize]) -> bool {
        let n = p.len();
        if n < 2 {
            return false;
        }
        let mut i = n - 1;
        while i > 0 && p[i - 1] >= p[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = n - 1;
        while p[j] <= p[i - 1] {
            j -= 1;
        }
        p.swap(i - 1, j);
        p[i..].reverse();
        true
    }

    #[test]
    fn product_matches_levi_civita_oracle() {
        let mut rng = rng_from_seed(21);
        for n in 2..=4 {
            for _ in 0..50 {
                let spinors: Vec<_> = (0..n)
                    .map(|_| random_spinor::<f64, _>(n, &mut rng).unwrap())
                    .collect();
                let got = scalar_n_product(&spinors).unwrap();
                let want = levi_civita_product(&spinors);
                assert!(
                    (got - want).norm() <= 1e-12 * want.norm().max(1.0),
                    "n={n}: {got} vs {want}"
                );
            }
        }
    }

    #[test]
    fn repeated_argument_vanishes() {
        let a = sp(&[(1.0, 2.0), (0.5, -1.0), (0.0, 3.0)]);
        let b = sp(&[(2.0, 0.0), (1.0, 1.0), (-1.0, 0.0)]);
        let p = scalar_n_product(&[a.clone(), b, a]).unwrap();
        assert!(p.norm() < 1e-12);
    }

    #[test]
    fn scaled_basis_is_not_canonical() {
        let scaled = vec![sp(&[(2.0, 0.0), (0.0, 0.0)]), sp(&[(0.0, 0.0), (1.0, 0.0)])];
        assert!(!is_canonical(&scaled, &Tolerance::default()).unwrap());
    }

    #[test]
    fn columns_of_random_sl_are_canonical() {
        for seed in 0..50u64 {
            let m = random_sl::<f64>(3, seed).unwrap();
            let cols: Vec<_> = (0..3)
                .map(|j| Spinor::new((0..3).map(|i| m[(i, j)]).collect()).unwrap())
                .collect();
            assert!(is_canonical(&cols, &Tolerance::default()).unwrap());
        }
    }

    #[test]
    fn dependence_detects_proportional_and_summed_spinors() {
        let tol = Tolerance::default();
        let a = sp(&[(1.0, 0.5), (2.0, -1.0)]);
        let double = sp(&[(2.0, 1.0), (4.0, -2.0)]);
        assert!(linearly_dependent(&[a.clone(), double], &tol).unwrap());

        let e1 = sp(&[(1.0, 0.0), (0.0, 0.0)]);
        let e2 = sp(&[(0.0, 0.0), (1.0, 0.0)]);
        assert!(!linearly_dependent(&[e1, e2], &tol).unwrap());

        let u = sp(&[(1.0, 0.0), (0.5, 0.5), (0.0, -1.0)]);
        let v = sp(&[(0.0, 1.0), (1.0, 0.0), (2.0, 0.0)]);
        let w = Spinor::new(
            u.components()
                .iter()
                .zip(v.components())
                .map(|(x, y)| x + y)
                .collect(),
        )
        .unwrap();
        assert!(linearly_dependent(&[u, v, w], &tol).unwrap());
    }

    #[test]
    fn product_is_invariant_under_basis_change() {
        let tol = Tolerance::default();
        let mut rng = rng_from_seed(31);
        for _ in 0..100 {
            let n = 3;
            let spinors: Vec<_> = (0..n)
                .map(|_| random_spinor::<f64, _>(n, &mut rng).unwrap())
                .collect();
            let change = BasisChange::from_basis_matrix(
                crate::sample::random_sl_with(n, &mut rng).unwrap(),
                &tol,
            )
            .unwrap();
            let moved: Vec<_> = spinors
                .iter()
                .map(|s| Spinor::new(change.d().mul_vec(s.components())).unwrap())
                .collect();
            let before = scalar_n_product(&spinors).unwrap();
            let after = scalar_n_product(&moved).unwrap();
            assert!((before - after).norm() <= 1e-10 * before.norm().max(1.0));
        }
    }

    #[test]
    fn change_matrices_are_mutually_inverse() {
        let tol = Tolerance::default();
        let change = BasisChange::from_basis_matrix(random_sl::<f64>(4, 7).unwrap(), &tol).unwrap();
        let prod = change.c() * change.d();
        assert!(prod.max_diff(&ComplexMatrix::identity(4)) < 1e-10);
    }

    #[test]
    fn non_unimodular_matrix_is_rejected() {
        let tol = Tolerance::default();
        let m = ComplexMatrix::diagonal(&[C64::new(2.0, 0.0), C64::new(1.0, 0.0)]);
        assert!(matches!(
            BasisChange::from_basis_matrix(m, &tol),
            Err(Error::NotUnimodular { .. })
        ));
    }
}
