//! Three-dimensional specialization: the cubic norm form, a four-factor
//! decomposition of SL(3, C), and closed-form subgroup actions.
//!
//! The nine Hermitian coordinates split into a Minkowski four-vector block,
//! a real four-spinor block, and a ninth coordinate. The cubic determinant
//! form couples the blocks through the gamma pairing, and every SL(3, C)
//! element with a usable corner pivot factors into a two-by-two block, two
//! shears, and a complex diagonal, each acting on coordinates in closed
//! form.

use crate::error::{Error, Result};
use crate::herm::HermVector;
use crate::matrix::ComplexMatrix;
use crate::n2::{explicit_l_matrix, majorana_matrix, GammaSet};
use crate::scalar::{Scalar, Tolerance};
use num_complex::Complex;

/// Coordinate vector of the three-dimensional Hermitian space.
pub type NineVector<T> = HermVector<T>;

fn check_nine<T: Scalar>(v: &NineVector<T>) -> Result<()> {
    if v.n() != 3 {
        return Err(Error::Dimension {
            what: "coordinate space dimension",
            expected: 3,
            found: v.n(),
        });
    }
    Ok(())
}

/// The cubic norm form on nine coordinates in expanded monomial form.
///
/// Equals the determinant of the Hermitian matrix the coordinates describe
/// over the standard basis.
pub fn cubic_form<T: Scalar>(v: &NineVector<T>) -> Result<T> {
    check_nine(v)?;
    let x = v.coords();
    let quad = x[0] * x[0] - x[1] * x[1] - x[2] * x[2] - x[3] * x[3];
    let s45 = x[4] * x[4] + x[5] * x[5];
    let s67 = x[6] * x[6] + x[7] * x[7];
    let two = T::of(2.0);
    Ok(quad * x[8] - x[0] * (s45 + s67)
        + two * x[1] * (x[4] * x[6] + x[5] * x[7])
        + two * x[2] * (x[5] * x[6] - x[4] * x[7])
        + x[3] * (s45 - s67))
}

fn gamma_complex_set<T: Scalar>() -> ([ComplexMatrix<T>; 4], ComplexMatrix<T>) {
    let g = GammaSet::new();
    (
        [
            g.gamma_complex::<T>(0).expect("index in range"),
            g.gamma_complex::<T>(1).expect("index in range"),
            g.gamma_complex::<T>(2).expect("index in range"),
            g.gamma_complex::<T>(3).expect("index in range"),
        ],
        g.gamma5_complex::<T>(),
    )
}

/// Row vector x-bar: component j is sum_i x_i gamma0[i][j].
fn bar4<T: Scalar>(x: &[Complex<T>; 4], g0: &ComplexMatrix<T>) -> [Complex<T>; 4] {
    let mut out = [Complex::new(T::zero(), T::zero()); 4];
    for (j, slot) in out.iter_mut().enumerate() {
        for i in 0..4 {
            *slot += x[i] * g0[(i, j)];
        }
    }
    out
}

fn matvec4<T: Scalar>(m: &ComplexMatrix<T>, x: &[Complex<T>; 4]) -> [Complex<T>; 4] {
    let mut out = [Complex::new(T::zero(), T::zero()); 4];
    for (i, slot) in out.iter_mut().enumerate() {
        for j in 0..4 {
            *slot += m[(i, j)] * x[j];
        }
    }
    out
}

fn dot4<T: Scalar>(a: &[Complex<T>; 4], b: &[Complex<T>; 4]) -> Complex<T> {
    let mut acc = Complex::new(T::zero(), T::zero());
    for i in 0..4 {
        acc += a[i] * b[i];
    }
    acc
}

fn complexify4<T: Scalar>(x: &[T]) -> [Complex<T>; 4] {
    [
        Complex::new(x[0], T::zero()),
        Complex::new(x[1], T::zero()),
        Complex::new(x[2], T::zero()),
        Complex::new(x[3], T::zero()),
    ]
}

const METRIC_SIGNS: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

/// The cubic form computed through its block split: the Minkowski square of
/// the four-vector part times the ninth coordinate, minus the metric
/// contraction of the four-vector with the gamma pairing of the spinor part.
pub fn cubic_via_gamma_split<T: Scalar>(v: &NineVector<T>) -> Result<T> {
    check_nine(v)?;
    let x = v.coords();
    let (gammas, _) = gamma_complex_set::<T>();
    let g0 = &gammas[0];
    let xi = complexify4(&x[4..8]);
    let xi_bar = bar4(&xi, g0);
    let quad = x[0] * x[0] - x[1] * x[1] - x[2] * x[2] - x[3] * x[3];
    let mut total = quad * x[8];
    let mut worst_im = T::zero();
    let mut scale = T::one();
    for a in 0..4 {
        let paired = dot4(&xi_bar, &matvec4(&gammas[a], &xi));
        worst_im = worst_im.max(paired.im.abs());
        scale = scale.max(paired.re.abs());
        total -= T::of(METRIC_SIGNS[a]) * x[a] * paired.re;
    }
    let guard = T::of(1e-10).max(T::consistency_floor() * scale);
    if worst_im > guard {
        return Err(Error::InternalConsistency {
            what: "imaginary residue of a gamma pairing",
            residue: worst_im.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(total)
}

/// Four-factor split of an SL(3, C) element: a unimodular two-by-two block,
/// an upper shear, a lower shear, and a complex unimodular diagonal, with
/// the product reconstructing the input.
#[derive(Debug, Clone)]
pub struct Sl3Decomposition<T> {
    /// Block factor: a two-by-two unimodular block bordered by a unit.
    pub d1: ComplexMatrix<T>,
    /// Upper shear: identity plus a two-entry last column.
    pub d2: ComplexMatrix<T>,
    /// Lower shear: identity plus a two-entry last row.
    pub d3: ComplexMatrix<T>,
    /// Diagonal factor diag(d, d, 1/d^2).
    pub d4: ComplexMatrix<T>,
    /// The diagonal parameter of the fourth factor.
    pub d: Complex<T>,
    /// Largest entrywise deviation of the reconstructed product.
    pub residual: T,
}

impl<T: Scalar> Sl3Decomposition<T> {
    /// Product of the four factors in order.
    pub fn reconstruct(&self) -> ComplexMatrix<T> {
        &(&(&self.d1 * &self.d2) * &self.d3) * &self.d4
    }
}

/// Splits an SL(3, C) matrix into the four standard factors.
///
/// Requires the bottom-right entry to be usable as a pivot; matrices with a
/// vanishing corner entry are outside the decomposition domain. The
/// diagonal parameter takes the principal square root branch.
pub fn decompose_sl3<T: Scalar>(
    m: &ComplexMatrix<T>,
    tol: &Tolerance<T>,
) -> Result<Sl3Decomposition<T>> {
    if !m.is_square() || m.rows() != 3 {
        return Err(Error::Dimension {
            what: "matrix dimension",
            expected: 3,
            found: m.rows().max(m.cols()),
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
    let scale = m.max_norm();
    let h = m[(2, 2)];
    if h.norm() <= tol.bound(scale) {
        return Err(Error::DecompositionDomain {
            pivot_abs: h.norm().to_f64().unwrap_or(f64::NAN),
        });
    }
    let one = Complex::new(T::one(), T::zero());
    let d = (one / h).sqrt();
    // block A1 = (A - b c / h) / d on the leading two-by-two part
    let mut a1 = ComplexMatrix::zeros(2, 2);
    for i in 0..2 {
        for j in 0..2 {
            a1[(i, j)] = (m[(i, j)] - m[(i, 2)] * m[(2, j)] / h) / d;
        }
    }
    let a1_inv = a1.inverse(tol)?;
    let b_over_h = [m[(0, 2)] / h, m[(1, 2)] / h];
    let u = [
        a1_inv[(0, 0)] * b_over_h[0] + a1_inv[(0, 1)] * b_over_h[1],
        a1_inv[(1, 0)] * b_over_h[0] + a1_inv[(1, 1)] * b_over_h[1],
    ];
    let mut d1 = ComplexMatrix::identity(3);
    for i in 0..2 {
        for j in 0..2 {
            d1[(i, j)] = a1[(i, j)];
        }
    }
    let mut d2 = ComplexMatrix::identity(3);
    d2[(0, 2)] = u[0];
    d2[(1, 2)] = u[1];
    let mut d3 = ComplexMatrix::identity(3);
    d3[(2, 0)] = m[(2, 0)] / d;
    d3[(2, 1)] = m[(2, 1)] / d;
    let d4 = ComplexMatrix::diagonal(&[d, d, one / (d * d)]);
    let split = Sl3Decomposition {
        d1,
        d2,
        d3,
        d4,
        d,
        residual: T::zero(),
    };
    let residual = split.reconstruct().max_diff(m);
    let guard = T::of(1e-6) * (T::one() + scale);
    if residual > guard {
        return Err(Error::InternalConsistency {
            what: "reconstruction residual of the four-factor split",
            residue: residual.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(Sl3Decomposition { residual, ..split })
}

/// Embeds a two-by-two block into SL(3, C) bordered by a unit.
pub fn embed_sl2<T: Scalar>(block: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>> {
    if !block.is_square() || block.rows() != 2 {
        return Err(Error::Dimension {
            what: "block dimension",
            expected: 2,
            found: block.rows().max(block.cols()),
        });
    }
    let mut m = ComplexMatrix::identity(3);
    for i in 0..2 {
        for j in 0..2 {
            m[(i, j)] = block[(i, j)];
        }
    }
    Ok(m)
}

/// Upper shear from four real parameters: identity plus a last column.
pub fn embed_shear_upper<T: Scalar>(eps: &[T; 4]) -> ComplexMatrix<T> {
    let mut m = ComplexMatrix::identity(3);
    m[(0, 2)] = Complex::new(eps[0], -eps[1]);
    m[(1, 2)] = Complex::new(eps[2], -eps[3]);
    m
}

/// Lower shear from four real parameters: identity plus a last row.
pub fn embed_shear_lower<T: Scalar>(kappa: &[T; 4]) -> ComplexMatrix<T> {
    let mut m = ComplexMatrix::identity(3);
    m[(2, 0)] = Complex::new(kappa[2], -kappa[3]);
    m[(2, 1)] = Complex::new(-kappa[0], kappa[1]);
    m
}

/// Unimodular diagonal diag(d, d, 1/d^2) with d given by modulus and phase.
pub fn embed_central_diagonal<T: Scalar>(mod_d: T, phi: T) -> Result<ComplexMatrix<T>> {
    if mod_d <= T::zero() || !mod_d.is_finite() {
        return Err(Error::Domain {
            what: "diagonal factor modulus",
            value: mod_d.to_f64().unwrap_or(f64::NAN),
        });
    }
    let d = Complex::from_polar(mod_d, phi);
    let one = Complex::new(T::one(), T::zero());
    Ok(ComplexMatrix::diagonal(&[d, d, one / (d * d)]))
}

fn realness_guard<T: Scalar>(scale: T) -> T {
    T::of(1e-10).max(T::consistency_floor() * scale.max(T::one()))
}

/// Coordinate action of an embedded two-by-two block: the Lorentz map on
/// the four-vector part, the Majorana map on the spinor part, the ninth
/// coordinate fixed.
pub fn subgroup_51<T: Scalar>(
    v: &NineVector<T>,
    block: &ComplexMatrix<T>,
) -> Result<NineVector<T>> {
    check_nine(v)?;
    let x = v.coords();
    let l = explicit_l_matrix(block)?;
    let mm = majorana_matrix(block)?;
    let four = l.mul_vec(&x[0..4]);
    let spin = mm.mul_vec(&x[4..8]);
    let mut out = Vec::with_capacity(9);
    out.extend_from_slice(&four);
    out.extend_from_slice(&spin);
    out.push(x[8]);
    NineVector::new(3, out)
}

/// Coordinate action of an upper shear with four real parameters.
pub fn subgroup_52<T: Scalar>(v: &NineVector<T>, eps: &[T; 4]) -> Result<NineVector<T>> {
    check_nine(v)?;
    let x = v.coords();
    let (gammas, _) = gamma_complex_set::<T>();
    let g0 = &gammas[0];
    let xi = complexify4(&x[4..8]);
    let e = complexify4(eps);
    let e_bar = bar4(&e, g0);
    let half = T::of(0.5);
    let mut out = Vec::with_capacity(9);
    let mut worst_im = T::zero();
    let mut scale = v.max_norm();
    for a in 0..4 {
        let ge_xi = dot4(&e_bar, &matvec4(&gammas[a], &xi));
        let ge_e = dot4(&e_bar, &matvec4(&gammas[a], &e));
        let shift = ge_xi + ge_e * Complex::new(half * x[8], T::zero());
        worst_im = worst_im.max(shift.im.abs());
        scale = scale.max(shift.re.abs());
        out.push(x[a] + shift.re);
    }
    for i in 0..4 {
        out.push(x[4 + i] + eps[i] * x[8]);
    }
    out.push(x[8]);
    if worst_im > realness_guard(scale) {
        return Err(Error::InternalConsistency {
            what: "imaginary residue in the upper shear action",
            residue: worst_im.to_f64().unwrap_or(f64::NAN),
        });
    }
    NineVector::new(3, out)
}

/// Coordinate action of a lower shear with four real parameters.
pub fn subgroup_53<T: Scalar>(v: &NineVector<T>, kappa: &[T; 4]) -> Result<NineVector<T>> {
    check_nine(v)?;
    let x = v.coords();
    let (gammas, _) = gamma_complex_set::<T>();
    let g0 = &gammas[0];
    let xi = complexify4(&x[4..8]);
    let k = complexify4(kappa);
    let k_bar = bar4(&k, g0);
    let i_unit = Complex::new(T::zero(), T::one());
    let mut worst_im = T::zero();
    let mut scale = v.max_norm();
    // spinor part: xi' = -i sum_a sign(a) (gamma_a kappa) x_a + xi
    let mut acc = [Complex::new(T::zero(), T::zero()); 4];
    for a in 0..4 {
        let gk = matvec4(&gammas[a], &k);
        let weight = Complex::new(T::of(METRIC_SIGNS[a]) * x[a], T::zero());
        for (slot, g) in acc.iter_mut().zip(&gk) {
            *slot += *g * weight;
        }
    }
    let mut spin = [T::zero(); 4];
    for (i, slot) in spin.iter_mut().enumerate() {
        let z = -i_unit * acc[i] + xi[i];
        *slot = z.re;
        worst_im = worst_im.max(z.im.abs());
        scale = scale.max(z.re.abs());
    }
    // ninth coordinate: sum_a sign(a) (kappa-bar gamma_a kappa) x_a + 2i kappa-bar xi + x8
    let mut ninth = Complex::new(x[8], T::zero());
    for a in 0..4 {
        let kk = dot4(&k_bar, &matvec4(&gammas[a], &k));
        ninth += kk * Complex::new(T::of(METRIC_SIGNS[a]) * x[a], T::zero());
    }
    ninth += i_unit * T::of(2.0) * dot4(&k_bar, &xi);
    worst_im = worst_im.max(ninth.im.abs());
    scale = scale.max(ninth.re.abs());
    if worst_im > realness_guard(scale) {
        return Err(Error::InternalConsistency {
            what: "imaginary residue in the lower shear action",
            residue: worst_im.to_f64().unwrap_or(f64::NAN),
        });
    }
    let mut out = Vec::with_capacity(9);
    out.extend_from_slice(&x[0..4]);
    out.extend_from_slice(&spin);
    out.push(ninth.re);
    NineVector::new(3, out)
}

/// Coordinate action of the unimodular diagonal: the four-vector block
/// scales by the squared modulus, the spinor pairs rotate by three times
/// the phase over the modulus, the ninth coordinate scales by the inverse
/// fourth power.
pub fn subgroup_54<T: Scalar>(v: &NineVector<T>, mod_d: T, phi: T) -> Result<NineVector<T>> {
    check_nine(v)?;
    if mod_d <= T::zero() || !mod_d.is_finite() {
        return Err(Error::Domain {
            what: "diagonal factor modulus",
            value: mod_d.to_f64().unwrap_or(f64::NAN),
        });
    }
    let x = v.coords();
    let m2 = mod_d * mod_d;
    let three = T::of(3.0);
    let c3 = (three * phi).cos() / mod_d;
    let s3 = (three * phi).sin() / mod_d;
    let mut out = Vec::with_capacity(9);
    for &xa in &x[..4] {
        out.push(m2 * xa);
    }
    out.push(c3 * x[4] + s3 * x[5]);
    out.push(-s3 * x[4] + c3 * x[5]);
    out.push(c3 * x[6] + s3 * x[7]);
    out.push(-s3 * x[6] + c3 * x[7]);
    out.push(x[8] / (m2 * m2));
    NineVector::new(3, out)
}

/// Applies an SL(3, C) element to coordinates by decomposing it and chaining
/// the four closed-form subgroup actions: diagonal, lower shear, upper
/// shear, then block.
pub fn compose_via_decomposition<T: Scalar>(
    m: &ComplexMatrix<T>,
    v: &NineVector<T>,
    tol: &Tolerance<T>,
) -> Result<NineVector<T>> {
    check_nine(v)?;
    let split = decompose_sl3(m, tol)?;
    let mut block = ComplexMatrix::zeros(2, 2);
    for i in 0..2 {
        for j in 0..2 {
            block[(i, j)] = split.d1[(i, j)];
        }
    }
    let eps = [
        split.d2[(0, 2)].re,
        -split.d2[(0, 2)].im,
        split.d2[(1, 2)].re,
        -split.d2[(1, 2)].im,
    ];
    let kappa = [
        -split.d3[(2, 1)].re,
        split.d3[(2, 1)].im,
        split.d3[(2, 0)].re,
        -split.d3[(2, 0)].im,
    ];
    let mod_d = split.d.norm();
    let phi = split.d.arg();
    let step = subgroup_54(v, mod_d, phi)?;
    let step = subgroup_53(&step, &kappa)?;
    let step = subgroup_52(&step, &eps)?;
    subgroup_51(&step, &block)
}
