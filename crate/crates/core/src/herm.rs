//! Real coordinates on N x N Hermitian matrices and the degree-N norm form.
//!
//! A Hermitian matrix is expanded over a fixed basis of n^2 Hermitian
//! matrices; the dual basis recovers the real coordinates through trace
//! pairing. The determinant, expressed through those coordinates, becomes a
//! degree-n homogeneous polynomial whose symmetric coefficient tensor is
//! built here from mixed discriminants.

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::scalar::{Scalar, Tolerance};
use num_complex::Complex;
use std::collections::BTreeMap;

pub(crate) fn c<T: Scalar>(re: f64, im: f64) -> Complex<T> {
    Complex::new(T::of(re), T::of(im))
}

/// Real coordinate vector of length n^2 describing a Hermitian matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct HermVector<T> {
    n: usize,
    coords: Vec<T>,
}

impl<T: Scalar> HermVector<T> {
    /// Builds a coordinate vector, requiring length n^2 and finite entries.
    pub fn new(n: usize, coords: Vec<T>) -> Result<Self> {
        if n < 2 {
            return Err(Error::Dimension {
                what: "coordinate space dimension",
                expected: 2,
                found: n,
            });
        }
        if coords.len() != n * n {
            return Err(Error::Dimension {
                what: "coordinate count",
                expected: n * n,
                found: coords.len(),
            });
        }
        for (i, x) in coords.iter().enumerate() {
            if !x.is_finite() {
                return Err(Error::NonFinite { row: i, col: 0 });
            }
        }
        Ok(Self { n, coords })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    pub fn coord(&self, alpha: usize) -> T {
        self.coords[alpha]
    }

    /// Largest coordinate magnitude.
    pub fn max_norm(&self) -> T {
        self.coords.iter().map(|x| x.abs()).fold(T::zero(), T::max)
    }

    /// Largest coordinatewise difference against another vector.
    pub fn max_diff(&self, other: &Self) -> T {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| (*a - *b).abs())
            .fold(T::zero(), T::max)
    }
}

/// Basis of the real space of N x N Hermitian matrices plus its trace dual.
///
/// The lower family spans Hermitian matrices over the reals; the upper
/// family satisfies trace(upper[a] * lower[b]) = delta(a, b).
#[derive(Debug, Clone)]
pub struct HermBasis<T> {
    n: usize,
    lower: Vec<ComplexMatrix<T>>,
    upper: Vec<ComplexMatrix<T>>,
}

impl<T: Scalar> HermBasis<T> {
    /// The standard basis for each dimension.
    ///
    /// For n = 2 the lower family is the identity and the three Pauli
    /// matrices; for n = 3 it is the two-by-two identity block, the seven
    /// traceless Gell-Mann style matrices touching it, and the corner unit;
    /// for larger n the same pattern continues: a leading identity block,
    /// symmetric and antisymmetric off-diagonal pairs, traceless diagonals,
    /// and the final corner unit. Duals come from inverting the trace Gram
    /// matrix; the n = 2 and n = 3 duals are hardcoded and cross-checked.
    pub fn standard(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Dimension {
                what: "basis dimension",
                expected: 2,
                found: n,
            });
        }
        let (lower, upper) = match n {
            2 => (pauli_lower(), pauli_upper()),
            3 => (lambda_lower(), lambda_upper()),
            _ => {
                let lower = general_lower::<T>(n);
                let upper = dual_from_gram(&lower)?;
                (lower, upper)
            }
        };
        Ok(Self { n, lower, upper })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of basis members, n^2.
    pub fn dim(&self) -> usize {
        self.n * self.n
    }

    pub fn lower(&self) -> &[ComplexMatrix<T>] {
        &self.lower
    }

    pub fn upper(&self) -> &[ComplexMatrix<T>] {
        &self.upper
    }

    pub fn lower_at(&self, alpha: usize) -> &ComplexMatrix<T> {
        &self.lower[alpha]
    }

    pub fn upper_at(&self, alpha: usize) -> &ComplexMatrix<T> {
        &self.upper[alpha]
    }

    /// Largest deviation of trace(upper[a] * lower[b]) from delta(a, b).
    pub fn pairing_residual(&self) -> T {
        let d = self.dim();
        let mut worst = T::zero();
        for a in 0..d {
            for b in 0..d {
                let p = (&self.upper[a] * &self.lower[b]).trace();
                let want = if a == b { T::one() } else { T::zero() };
                worst = worst.max((p.re - want).abs()).max(p.im.abs());
            }
        }
        worst
    }
}

fn mat<T: Scalar>(n: usize, entries: &[(usize, usize, f64, f64)]) -> ComplexMatrix<T> {
    let mut m = ComplexMatrix::zeros(n, n);
    for &(i, j, re, im) in entries {
        m[(i, j)] = c(re, im);
    }
    m
}

fn pauli_lower<T: Scalar>() -> Vec<ComplexMatrix<T>> {
    vec![
        mat(2, &[(0, 0, 1.0, 0.0), (1, 1, 1.0, 0.0)]),
        mat(2, &[(0, 1, 1.0, 0.0), (1, 0, 1.0, 0.0)]),
        mat(2, &[(0, 1, 0.0, -1.0), (1, 0, 0.0, 1.0)]),
        mat(2, &[(0, 0, 1.0, 0.0), (1, 1, -1.0, 0.0)]),
    ]
}

fn pauli_upper<T: Scalar>() -> Vec<ComplexMatrix<T>> {
    pauli_lower()
        .into_iter()
        .map(|m| m.scaled(c(0.5, 0.0)))
        .collect()
}

fn lambda_lower<T: Scalar>() -> Vec<ComplexMatrix<T>> {
    vec![
        mat(3, &[(0, 0, 1.0, 0.0), (1, 1, 1.0, 0.0)]),
        mat(3, &[(0, 1, 1.0, 0.0), (1, 0, 1.0, 0.0)]),
        mat(3, &[(0, 1, 0.0, -1.0), (1, 0, 0.0, 1.0)]),
        mat(3, &[(0, 0, 1.0, 0.0), (1, 1, -1.0, 0.0)]),
        mat(3, &[(0, 2, 1.0, 0.0), (2, 0, 1.0, 0.0)]),
        mat(3, &[(0, 2, 0.0, -1.0), (2, 0, 0.0, 1.0)]),
        mat(3, &[(1, 2, 1.0, 0.0), (2, 1, 1.0, 0.0)]),
        mat(3, &[(1, 2, 0.0, -1.0), (2, 1, 0.0, 1.0)]),
        mat(3, &[(2, 2, 1.0, 0.0)]),
    ]
}

fn lambda_upper<T: Scalar>() -> Vec<ComplexMatrix<T>> {
    let mut v: Vec<_> = lambda_lower()
        .into_iter()
        .map(|m| m.scaled(c(0.5, 0.0)))
        .collect();
    // the corner unit is self-dual: trace pairing already gives one
    v[8] = mat(3, &[(2, 2, 1.0, 0.0)]);
    v
}

/// Lower basis for any dimension: leading identity block, symmetric and
/// antisymmetric pair matrices, traceless diagonals, corner unit.
fn general_lower<T: Scalar>(n: usize) -> Vec<ComplexMatrix<T>> {
    let mut out = Vec::with_capacity(n * n);
    let mut lead = ComplexMatrix::zeros(n, n);
    for i in 0..n - 1 {
        lead[(i, i)] = c(1.0, 0.0);
    }
    out.push(lead);
    for p in 0..n {
        for q in (p + 1)..n {
            out.push(mat(n, &[(p, q, 1.0, 0.0), (q, p, 1.0, 0.0)]));
            out.push(mat(n, &[(p, q, 0.0, -1.0), (q, p, 0.0, 1.0)]));
        }
    }
    for r in 2..n {
        let mut d = ComplexMatrix::zeros(n, n);
        for i in 0..r - 1 {
            d[(i, i)] = c(1.0, 0.0);
        }
        d[(r - 1, r - 1)] = c(-((r - 1) as f64), 0.0);
        out.push(d);
    }
    out.push(mat(n, &[(n - 1, n - 1, 1.0, 0.0)]));
    out
}

/// Duals through the trace Gram matrix: upper[a] = sum_b inv(P)[a][b] lower[b]
/// with P[a][b] = trace(lower[a] * lower[b]).
fn dual_from_gram<T: Scalar>(lower: &[ComplexMatrix<T>]) -> Result<Vec<ComplexMatrix<T>>> {
    let d = lower.len();
    let n = lower[0].rows();
    let gram = ComplexMatrix::from_fn(d, d, |a, b| {
        Complex::new((&lower[a] * &lower[b]).trace().re, T::zero())
    });
    let inv = gram.inverse(&Tolerance::default())?;
    let mut upper = Vec::with_capacity(d);
    for a in 0..d {
        let mut m = ComplexMatrix::zeros(n, n);
        for b in 0..d {
            m = &m + &lower[b].scaled(inv[(a, b)]);
        }
        upper.push(m);
    }
    Ok(upper)
}

/// Expands a Hermitian matrix into real coordinates over a basis.
///
/// Rejects matrices whose asymmetry against their adjoint exceeds the
/// tolerance; the imaginary residues dropped when taking real parts are
/// guarded internally.
pub fn pack<T: Scalar>(
    x: &ComplexMatrix<T>,
    basis: &HermBasis<T>,
    tol: &Tolerance<T>,
) -> Result<HermVector<T>> {
    pack_with_residue(x, basis, tol).map(|(v, _)| v)
}

/// As [`pack`], additionally returning the largest imaginary residue dropped
/// while projecting onto real coordinates.
pub fn pack_with_residue<T: Scalar>(
    x: &ComplexMatrix<T>,
    basis: &HermBasis<T>,
    tol: &Tolerance<T>,
) -> Result<(HermVector<T>, T)> {
    if !x.is_square() {
        return Err(Error::NotSquare {
            rows: x.rows(),
            cols: x.cols(),
        });
    }
    if x.rows() != basis.n() {
        return Err(Error::Dimension {
            what: "matrix dimension vs basis",
            expected: basis.n(),
            found: x.rows(),
        });
    }
    x.check_finite()?;
    let scale = x.max_norm();
    let asym = x.max_asymmetry();
    if asym > tol.bound(scale) {
        return Err(Error::NotHermitian {
            max_asymmetry: asym.to_f64().unwrap_or(f64::NAN),
        });
    }
    let mut coords = Vec::with_capacity(basis.dim());
    let mut residue = T::zero();
    for e in basis.upper() {
        let z = (e * x).trace();
        coords.push(z.re);
        residue = residue.max(z.im.abs());
    }
    let guard = T::of(10.0) * tol.bound(scale) + T::consistency_floor() * scale;
    if residue > guard {
        return Err(Error::InternalConsistency {
            what: "imaginary residue of coordinate projection",
            residue: residue.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok((HermVector::new(basis.n(), coords)?, residue))
}

/// Rebuilds the Hermitian matrix carried by a coordinate vector.
pub fn unpack<T: Scalar>(v: &HermVector<T>, basis: &HermBasis<T>) -> Result<ComplexMatrix<T>> {
    if v.n() != basis.n() {
        return Err(Error::Dimension {
            what: "coordinate dimension vs basis",
            expected: basis.n(),
            found: v.n(),
        });
    }
    let n = basis.n();
    let mut m = ComplexMatrix::zeros(n, n);
    for (x, e) in v.coords().iter().zip(basis.lower()) {
        m = &m + &e.scaled(Complex::new(*x, T::zero()));
    }
    Ok(m)
}

/// Determinant of the matrix carried by a coordinate vector.
///
/// The determinant of a Hermitian matrix is real; the vanishing imaginary
/// part is discarded.
pub fn det_invariant<T: Scalar>(v: &HermVector<T>, basis: &HermBasis<T>) -> Result<T> {
    Ok(unpack(v, basis)?.det()?.re)
}

/// Symmetric coefficient tensor of a degree-n homogeneous polynomial in n^2
/// real coordinates, stored sparsely by sorted index multiset.
#[derive(Debug, Clone, PartialEq)]
pub struct FormTensor<T> {
    n: usize,
    degree: usize,
    coeffs: BTreeMap<Vec<u8>, T>,
}

impl<T: Scalar> FormTensor<T> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Number of stored (nonzero) coefficients.
    pub fn nonzeros(&self) -> usize {
        self.coeffs.len()
    }

    /// Iterates over sorted index multisets and their symmetric coefficients.
    pub fn iter(&self) -> impl Iterator<Item = (&[u8], T)> {
        self.coeffs.iter().map(|(k, v)| (k.as_slice(), *v))
    }

    /// Symmetric tensor component for an index tuple in any order.
    pub fn coefficient(&self, idx: &[u8]) -> T {
        let mut key = idx.to_vec();
        key.sort_unstable();
        self.coeffs.get(&key).copied().unwrap_or_else(T::zero)
    }

    /// Coefficient of the monomial named by the index multiset in the
    /// expanded polynomial: the symmetric component times the number of
    /// distinct orderings of the multiset.
    pub fn monomial_coefficient(&self, idx: &[u8]) -> T {
        let mut key = idx.to_vec();
        key.sort_unstable();
        self.coefficient(&key) * T::of(orderings(&key) as f64)
    }

    /// Evaluates the polynomial at a coordinate vector using compensated
    /// summation over the stored terms.
    pub fn evaluate(&self, coords: &[T]) -> Result<T> {
        if coords.len() != self.n * self.n {
            return Err(Error::Dimension {
                what: "coordinate count",
                expected: self.n * self.n,
                found: coords.len(),
            });
        }
        // Each monomial is built as a compensated product (tracking the
        // rounding residue of every multiplication with fused
        // multiply-adds) and folded in with Neumaier summation. The large
        // intermediate terms that arise on strongly boosted vectors then
        // cancel without polluting the small final value.
        let mut sum = T::zero();
        let mut comp = T::zero();
        for (key, &g) in &self.coeffs {
            let mut hi = g * T::of(orderings(key) as f64);
            let mut lo = T::zero();
            for &i in key {
                let x = coords[i as usize];
                let p = hi * x;
                lo = lo * x + hi.mul_add(x, -p);
                hi = p;
            }
            neumaier_add(&mut sum, &mut comp, hi);
            neumaier_add(&mut sum, &mut comp, lo);
        }
        Ok(sum + comp)
    }
}

fn neumaier_add<T: Scalar>(sum: &mut T, comp: &mut T, value: T) {
    let t = *sum + value;
    if sum.abs() >= value.abs() {
        *comp += (*sum - t) + value;
    } else {
        *comp += (value - t) + *sum;
    }
    *sum = t;
}

fn factorial(k: u64) -> u64 {
    (2..=k).product::<u64>()
}

/// Number of distinct orderings of a sorted multiset.
fn orderings(key: &[u8]) -> u64 {
    let mut result = factorial(key.len() as u64);
    let mut run = 1u64;
    for i in 1..key.len() {
        if key[i] == key[i - 1] {
            run += 1;
        } else {
            result /= factorial(run);
            run = 1;
        }
    }
    result / factorial(run)
}

/// Advances a sorted multiset over symbols 0..base; returns false at the end.
fn next_multiset(key: &mut [u8], base: u8) -> bool {
    for i in (0..key.len()).rev() {
        if key[i] < base - 1 {
            let v = key[i] + 1;
            for slot in &mut key[i..] {
                *slot = v;
            }
            return true;
        }
    }
    false
}

/// Advances to the next distinct permutation in lexicographic order.
fn next_permutation(p: &mut [u8]) -> bool {
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

/// Builds the coefficient tensor of det expressed in basis coordinates.
///
/// Each component is the mixed discriminant of the basis members named by
/// the index multiset: the average over distinct index orderings of the
/// determinant assembled column by column from the ordered members. The
/// evaluation of the resulting polynomial at any coordinate vector equals
/// the determinant of the matrix the vector describes. Components below a
/// square-root-of-epsilon floor are structural zeros and are dropped.
pub fn form_tensor<T: Scalar>(basis: &HermBasis<T>) -> Result<FormTensor<T>> {
    let n = basis.n();
    let dim = n * n;
    if dim > 255 {
        return Err(Error::Dimension {
            what: "form index width",
            expected: 255,
            found: dim,
        });
    }
    let drop_floor = T::epsilon().sqrt();
    let inv_nfact = T::one() / T::of(factorial(n as u64) as f64);
    let mut coeffs = BTreeMap::new();
    let mut key = vec![0u8; n];
    let mut columns = ComplexMatrix::zeros(n, n);
    loop {
        let mut acc = Complex::new(T::zero(), T::zero());
        let mut perm = key.clone();
        loop {
            for j in 0..n {
                let e = basis.lower_at(perm[j] as usize);
                for i in 0..n {
                    columns[(i, j)] = e[(i, j)];
                }
            }
            acc += columns.det()?;
            if !next_permutation(&mut perm) {
                break;
            }
        }
        let repeats = T::of((factorial(n as u64) / orderings(&key)) as f64);
        let g = acc * (repeats * inv_nfact);
        if g.im.abs() > drop_floor {
            return Err(Error::InternalConsistency {
                what: "imaginary part of a form coefficient",
                residue: g.im.to_f64().unwrap_or(f64::NAN),
            });
        }
        if g.re.abs() > drop_floor {
            coeffs.insert(key.clone(), g.re);
        }
        if !next_multiset(&mut key, dim as u8) {
            break;
        }
    }
    Ok(FormTensor {
        n,
        degree: n,
        coeffs,
    })
}

/// n-th power of the Finslerian length of a coordinate vector under a form.
pub fn finsler_length_power<T: Scalar>(v: &HermVector<T>, g: &FormTensor<T>) -> Result<T> {
    if v.n() != g.n() {
        return Err(Error::Dimension {
            what: "coordinate dimension vs form",
            expected: g.n(),
            found: v.n(),
        });
    }
    g.evaluate(v.coords())
}
