//! Two-dimensional specialization: Lorentz maps, Majorana spinors, gammas.
//!
//! For n = 2 the induced coordinate action of SL(2, C) lands in the proper
//! orthochronous Lorentz group of the Minkowski form. This module carries
//! the closed-form four-by-four coordinate map, the real four-component
//! (Majorana) picture of a spinor with its own closed-form action, an exact
//! integer set of gamma matrices, and the gamma-based rewrite of the
//! antisymmetric two-spinor product.

use crate::error::{Error, Result};
use crate::herm::c;
use crate::matrix::ComplexMatrix;
use crate::real::RealMatrix;
use crate::scalar::{Scalar, Tolerance};
use crate::spinor::Spinor;
use num_complex::Complex;

/// Real four-component picture of a two-spinor.
#[derive(Debug, Clone, PartialEq)]
pub struct MajoranaSpinor<T> {
    components: [T; 4],
}

impl<T: Scalar> MajoranaSpinor<T> {
    /// Builds from four real components, rejecting non-finite values.
    pub fn new(components: [T; 4]) -> Result<Self> {
        for (i, x) in components.iter().enumerate() {
            if !x.is_finite() {
                return Err(Error::NonFinite { row: i, col: 0 });
            }
        }
        Ok(Self { components })
    }

    pub fn components(&self) -> &[T; 4] {
        &self.components
    }

    pub fn component(&self, i: usize) -> T {
        self.components[i]
    }

    /// The complex two-spinor this vector realifies.
    pub fn to_spinor(&self) -> Result<Spinor<T>> {
        let m = &self.components;
        Spinor::new(vec![Complex::new(m[0], -m[1]), Complex::new(m[2], -m[3])])
    }

    /// Largest componentwise difference against another vector.
    pub fn max_diff(&self, other: &Self) -> T {
        self.components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| (*a - *b).abs())
            .fold(T::zero(), T::max)
    }
}

/// Splits a two-spinor into real components: real part then negated
/// imaginary part of each complex component.
pub fn realify<T: Scalar>(s: &Spinor<T>) -> Result<MajoranaSpinor<T>> {
    if s.n() != 2 {
        return Err(Error::Dimension {
            what: "spinor dimension",
            expected: 2,
            found: s.n(),
        });
    }
    let a = s.component(0);
    let b = s.component(1);
    MajoranaSpinor::new([a.re, -a.im, b.re, -b.im])
}

/// The Minkowski metric on four coordinates, signature plus-minus-minus-minus.
pub fn minkowski_metric<T: Scalar>() -> RealMatrix<T> {
    RealMatrix::diagonal(&[T::one(), -T::one(), -T::one(), -T::one()])
}

fn check_sl2<T: Scalar>(m: &ComplexMatrix<T>) -> Result<()> {
    if !m.is_square() || m.rows() != 2 {
        return Err(Error::Dimension {
            what: "matrix dimension",
            expected: 2,
            found: m.rows().max(m.cols()),
        });
    }
    m.check_finite()?;
    let det = m.det()?;
    if !Tolerance::default().close_complex(det, Complex::new(T::one(), T::zero())) {
        return Err(Error::NotUnimodular {
            re: det.re.to_f64().unwrap_or(f64::NAN),
            im: det.im.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(())
}

/// Closed-form coordinate map of x -> m x m-adjoint over the Pauli basis.
///
/// The sixteen entries are bilinear in the matrix entries and their
/// conjugates; the result agrees with the trace-pairing route and lies in
/// the proper orthochronous Lorentz group. Requires m in SL(2, C).
pub fn explicit_l_matrix<T: Scalar>(m: &ComplexMatrix<T>) -> Result<RealMatrix<T>> {
    check_sl2(m)?;
    let d = |a: usize, b: usize| m[(a - 1, b - 1)];
    let cj = |a: usize, b: usize| m[(a - 1, b - 1)].conj();
    let half = c::<T>(0.5, 0.0);
    let half_i = c::<T>(0.0, 0.5);
    let mut l = RealMatrix::zeros(4, 4);
    l[(0, 0)] = (half
        * (d(1, 1) * cj(1, 1) + d(1, 2) * cj(1, 2) + d(2, 1) * cj(2, 1) + d(2, 2) * cj(2, 2)))
    .re;
    l[(0, 1)] = (half
        * (d(1, 1) * cj(1, 2) + d(2, 1) * cj(2, 2) + d(1, 2) * cj(1, 1) + d(2, 2) * cj(2, 1)))
    .re;
    l[(0, 2)] = (half_i
        * (d(1, 2) * cj(1, 1) + d(2, 2) * cj(2, 1) - d(1, 1) * cj(1, 2) - d(2, 1) * cj(2, 2)))
    .re;
    l[(0, 3)] = (half
        * (d(1, 1) * cj(1, 1) + d(2, 1) * cj(2, 1) - d(1, 2) * cj(1, 2) - d(2, 2) * cj(2, 2)))
    .re;
    l[(1, 0)] = (half
        * (d(1, 1) * cj(2, 1) + d(2, 1) * cj(1, 1) + d(1, 2) * cj(2, 2) + d(2, 2) * cj(1, 2)))
    .re;
    l[(1, 1)] = (half
        * (d(1, 1) * cj(2, 2) + d(2, 1) * cj(1, 2) + d(1, 2) * cj(2, 1) + d(2, 2) * cj(1, 1)))
    .re;
    l[(1, 2)] = (half_i
        * (d(1, 2) * cj(2, 1) + d(2, 2) * cj(1, 1) - d(1, 1) * cj(2, 2) - d(2, 1) * cj(1, 2)))
    .re;
    l[(1, 3)] = (half
        * (d(1, 1) * cj(2, 1) + d(2, 1) * cj(1, 1) - d(1, 2) * cj(2, 2) - d(2, 2) * cj(1, 2)))
    .re;
    l[(2, 0)] = (half_i
        * (d(1, 1) * cj(2, 1) - d(2, 1) * cj(1, 1) + d(1, 2) * cj(2, 2) - d(2, 2) * cj(1, 2)))
    .re;
    l[(2, 1)] = (half_i
        * (d(1, 1) * cj(2, 2) - d(2, 1) * cj(1, 2) + d(1, 2) * cj(2, 1) - d(2, 2) * cj(1, 1)))
    .re;
    l[(2, 2)] = (half
        * (d(1, 1) * cj(2, 2) + d(2, 2) * cj(1, 1) - d(1, 2) * cj(2, 1) - d(2, 1) * cj(1, 2)))
    .re;
    l[(2, 3)] = (half_i
        * (d(1, 1) * cj(2, 1) - d(2, 1) * cj(1, 1) - d(1, 2) * cj(2, 2) + d(2, 2) * cj(1, 2)))
    .re;
    l[(3, 0)] = (half
        * (d(1, 1) * cj(1, 1) - d(2, 1) * cj(2, 1) + d(1, 2) * cj(1, 2) - d(2, 2) * cj(2, 2)))
    .re;
    l[(3, 1)] = (half
        * (d(1, 1) * cj(1, 2) - d(2, 1) * cj(2, 2) + d(1, 2) * cj(1, 1) - d(2, 2) * cj(2, 1)))
    .re;
    l[(3, 2)] = (half_i
        * (d(1, 2) * cj(1, 1) - d(2, 2) * cj(2, 1) - d(1, 1) * cj(1, 2) + d(2, 1) * cj(2, 2)))
    .re;
    l[(3, 3)] = (half
        * (d(1, 1) * cj(1, 1) - d(1, 2) * cj(1, 2) - d(2, 1) * cj(2, 1) + d(2, 2) * cj(2, 2)))
    .re;
    Ok(l)
}

/// Closed-form real four-by-four action on Majorana components.
///
/// Intertwines realification with the complex action: realify(m * s) equals
/// this matrix applied to realify(s). Requires m in SL(2, C).
pub fn majorana_matrix<T: Scalar>(m: &ComplexMatrix<T>) -> Result<RealMatrix<T>> {
    check_sl2(m)?;
    let d = |a: usize, b: usize| m[(a - 1, b - 1)];
    let cb = |a: usize, b: usize| m[(a - 1, b - 1)].conj();
    let half = c::<T>(0.5, 0.0);
    let half_i = c::<T>(0.0, 0.5);
    let mut mm = RealMatrix::zeros(4, 4);
    mm[(0, 0)] = (half * (cb(1, 1) + d(1, 1))).re;
    mm[(0, 1)] = (half_i * (cb(1, 1) - d(1, 1))).re;
    mm[(0, 2)] = (half * (cb(1, 2) + d(1, 2))).re;
    mm[(0, 3)] = (half_i * (cb(1, 2) - d(1, 2))).re;
    mm[(1, 0)] = (half_i * (d(1, 1) - cb(1, 1))).re;
    mm[(1, 1)] = (half * (d(1, 1) + cb(1, 1))).re;
    mm[(1, 2)] = (half_i * (d(1, 2) - cb(1, 2))).re;
    mm[(1, 3)] = (half * (d(1, 2) + cb(1, 2))).re;
    mm[(2, 0)] = (half * (cb(2, 1) + d(2, 1))).re;
    mm[(2, 1)] = (half_i * (cb(2, 1) - d(2, 1))).re;
    mm[(2, 2)] = (half * (cb(2, 2) + d(2, 2))).re;
    mm[(2, 3)] = (half_i * (cb(2, 2) - d(2, 2))).re;
    mm[(3, 0)] = (half_i * (d(2, 1) - cb(2, 1))).re;
    mm[(3, 1)] = (half * (d(2, 1) + cb(2, 1))).re;
    mm[(3, 2)] = (half_i * (d(2, 2) - cb(2, 2))).re;
    mm[(3, 3)] = (half * (d(2, 2) + cb(2, 2))).re;
    Ok(mm)
}

type GammaData = [[Complex<i64>; 4]; 4];

const fn gi(re: i64, im: i64) -> Complex<i64> {
    Complex::new(re, im)
}

const Z: Complex<i64> = gi(0, 0);
const PI_: Complex<i64> = gi(0, 1);
const NI: Complex<i64> = gi(0, -1);
const ONE: Complex<i64> = gi(1, 0);
const NEG: Complex<i64> = gi(-1, 0);

/// Gamma matrices over the Gaussian integers.
///
/// Four purely imaginary matrices satisfying the Clifford relations of the
/// Minkowski metric exactly, plus their real product as the fifth member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaSet {
    mats: [GammaData; 4],
    five: GammaData,
}

impl Default for GammaSet {
    fn default() -> Self {
        Self::new()
    }
}

impl GammaSet {
    pub fn new() -> Self {
        let g0 = [[Z, Z, PI_, Z], [Z, Z, Z, NI], [NI, Z, Z, Z], [Z, PI_, Z, Z]];
        let g1 = [[PI_, Z, Z, Z], [Z, NI, Z, Z], [Z, Z, NI, Z], [Z, Z, Z, PI_]];
        let g2 = [
            [Z, PI_, Z, Z],
            [PI_, Z, Z, Z],
            [Z, Z, Z, PI_],
            [Z, Z, PI_, Z],
        ];
        let g3 = [[Z, Z, NI, Z], [Z, Z, Z, PI_], [NI, Z, Z, Z], [Z, PI_, Z, Z]];
        let five = [
            [Z, NEG, Z, Z],
            [ONE, Z, Z, Z],
            [Z, Z, Z, NEG],
            [Z, Z, ONE, Z],
        ];
        Self {
            mats: [g0, g1, g2, g3],
            five,
        }
    }

    /// The metric gamma with index 0 through 3.
    pub fn gamma(&self, mu: usize) -> Result<&GammaData> {
        self.mats.get(mu).ok_or(Error::Axis {
            axis: mu,
            reason: "gamma index must be 0 through 3",
        })
    }

    /// The real product of the four metric gammas.
    pub fn gamma5(&self) -> &GammaData {
        &self.five
    }

    /// Exact check of the Clifford relations: the anticommutator of gammas
    /// a and b equals twice the Minkowski metric entry times the identity.
    pub fn clifford_holds(&self) -> bool {
        let metric = [1i64, -1, -1, -1];
        for (a, ga) in self.mats.iter().enumerate() {
            for (b, gb) in self.mats.iter().enumerate() {
                let anti = add4(&mul4(ga, gb), &mul4(gb, ga));
                let want = if a == b { 2 * metric[a] } else { 0 };
                for (i, row) in anti.iter().enumerate() {
                    for (j, &z) in row.iter().enumerate() {
                        let expect = if i == j { gi(want, 0) } else { Z };
                        if z != expect {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Exact check that the fifth member is the ordered product of the four.
    pub fn gamma5_is_product(&self) -> bool {
        let p = mul4(
            &mul4(&self.mats[0], &self.mats[1]),
            &mul4(&self.mats[2], &self.mats[3]),
        );
        p == self.five
    }

    /// Floating-point copy of a metric gamma.
    pub fn gamma_complex<T: Scalar>(&self, mu: usize) -> Result<ComplexMatrix<T>> {
        Ok(to_complex(self.gamma(mu)?))
    }

    /// Floating-point copy of the fifth member.
    pub fn gamma5_complex<T: Scalar>(&self) -> ComplexMatrix<T> {
        to_complex(&self.five)
    }
}

fn mul4(a: &GammaData, b: &GammaData) -> GammaData {
    let mut out = [[Z; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            let mut acc = Z;
            for (k, bk) in b.iter().enumerate() {
                acc += a[i][k] * bk[j];
            }
            out[i][j] = acc;
        }
    }
    out
}

fn add4(a: &GammaData, b: &GammaData) -> GammaData {
    let mut out = [[Z; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = a[i][j] + b[i][j];
        }
    }
    out
}

fn to_complex<T: Scalar>(g: &GammaData) -> ComplexMatrix<T> {
    ComplexMatrix::from_fn(4, 4, |i, j| c(g[i][j].re as f64, g[i][j].im as f64))
}

/// The antisymmetric two-spinor product written through gammas on the real
/// components: xi-bar gamma5 eta minus i times xi-bar eta, with the bar the
/// gamma0 pairing.
pub fn symplectic_via_gamma<T: Scalar>(
    xi: &MajoranaSpinor<T>,
    eta: &MajoranaSpinor<T>,
) -> Complex<T> {
    let gammas = GammaSet::new();
    let g0 = gammas.gamma_complex::<T>(0).expect("index 0 is valid");
    let g5 = gammas.gamma5_complex::<T>();
    // row vector xi-bar: component j is sum_i xi_i g0[i][j]
    let mut bar = [Complex::new(T::zero(), T::zero()); 4];
    for (j, slot) in bar.iter_mut().enumerate() {
        for i in 0..4 {
            *slot += Complex::new(xi.component(i), T::zero()) * g0[(i, j)];
        }
    }
    let mut through_five = Complex::new(T::zero(), T::zero());
    let mut plain = Complex::new(T::zero(), T::zero());
    for j in 0..4 {
        let e = Complex::new(eta.component(j), T::zero());
        plain += bar[j] * e;
        for k in 0..4 {
            through_five += bar[k] * g5[(k, j)] * e;
        }
    }
    let i = Complex::new(T::zero(), T::one());
    through_five - i * plain
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::herm::HermBasis;
    use crate::lmap::induced_map;
    use crate::sample::{random_sl_with, random_spinor, rng_from_seed};
    use crate::C64;

    #[test]
    fn explicit_map_matches_trace_route() {
        let basis = HermBasis::<f64>::standard(2).unwrap();
        let tol = Tolerance::default();
        let mut rng = rng_from_seed(61);
        for _ in 0..200 {
            let m = random_sl_with::<f64, _>(2, &mut rng).unwrap();
            let explicit = explicit_l_matrix(&m).unwrap();
            let traced = induced_map(&m, &basis, &tol).unwrap();
            assert!(explicit.max_diff(traced.matrix()) < 1e-12);
        }
    }

    #[test]
    fn diagonal_boost_gives_hyperbolic_rotation() {
        let t = 0.7f64;
        let m = ComplexMatrix::diagonal(&[
            C64::new((t / 2.0).exp(), 0.0),
            C64::new((-t / 2.0).exp(), 0.0),
        ]);
        let l = explicit_l_matrix(&m).unwrap();
        let mut want = RealMatrix::identity(4);
        want[(0, 0)] = t.cosh();
        want[(3, 3)] = t.cosh();
        want[(0, 3)] = t.sinh();
        want[(3, 0)] = t.sinh();
        assert!(l.max_diff(&want) < 1e-12);
    }

    #[test]
    fn explicit_map_is_proper_orthochronous_lorentz() {
        let eta = minkowski_metric::<f64>();
        let mut rng = rng_from_seed(62);
        for _ in 0..200 {
            let m = random_sl_with::<f64, _>(2, &mut rng).unwrap();
            let l = explicit_l_matrix(&m).unwrap();
            let pulled = &(&l.transpose() * &eta) * &l;
            assert!(pulled.max_diff(&eta) < 1e-9);
            assert!((l.det().unwrap() - 1.0).abs() < 1e-9);
            assert!(l[(0, 0)] >= 1.0 - 1e-9);
        }
    }

    #[test]
    fn majorana_matrix_intertwines_realification() {
        let mut rng = rng_from_seed(63);
        for _ in 0..200 {
            let m = random_sl_with::<f64, _>(2, &mut rng).unwrap();
            let s = random_spinor::<f64, _>(2, &mut rng).unwrap();
            let mapped = Spinor::new(m.mul_vec(s.components())).unwrap();
            let lhs = realify(&mapped).unwrap();
            let mm = majorana_matrix(&m).unwrap();
            let rhs = MajoranaSpinor::new({
                let v = mm.mul_vec(realify(&s).unwrap().components());
                [v[0], v[1], v[2], v[3]]
            })
            .unwrap();
            assert!(lhs.max_diff(&rhs) < 1e-12);
        }
    }

    #[test]
    fn majorana_matrix_is_multiplicative() {
        let mut rng = rng_from_seed(64);
        for _ in 0..100 {
            let a = random_sl_with::<f64, _>(2, &mut rng).unwrap();
            let b = random_sl_with::<f64, _>(2, &mut rng).unwrap();
            let joint = majorana_matrix(&(&a * &b)).unwrap();
            let split = &majorana_matrix(&a).unwrap() * &majorana_matrix(&b).unwrap();
            assert!(joint.max_diff(&split) < 1e-12);
        }
    }

    #[test]
    fn realify_round_trips_through_to_spinor() {
        let mut rng = rng_from_seed(65);
        for _ in 0..50 {
            let s = random_spinor::<f64, _>(2, &mut rng).unwrap();
            let back = realify(&s).unwrap().to_spinor().unwrap();
            for i in 0..2 {
                assert!((s.component(i) - back.component(i)).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn clifford_relations_hold_exactly() {
        let g = GammaSet::new();
        assert!(g.clifford_holds());
        assert!(g.gamma5_is_product());
        assert!(g.gamma(4).is_err());
    }

    #[test]
    fn gammas_zero_through_three_are_purely_imaginary_and_five_is_real() {
        let g = GammaSet::new();
        for mu in 0..4 {
            for row in g.gamma(mu).unwrap() {
                for z in row {
                    assert_eq!(z.re, 0);
                }
            }
        }
        for row in g.gamma5() {
            for z in row {
                assert_eq!(z.im, 0);
            }
        }
    }

    #[test]
    fn symplectic_rewrite_matches_antisymmetric_product() {
        let mut rng = rng_from_seed(66);
        for _ in 0..200 {
            let xi = random_spinor::<f64, _>(2, &mut rng).unwrap();
            let eta = random_spinor::<f64, _>(2, &mut rng).unwrap();
            let want = xi.component(0) * eta.component(1) - xi.component(1) * eta.component(0);
            let got = symplectic_via_gamma(&realify(&xi).unwrap(), &realify(&eta).unwrap());
            assert!((want - got).norm() < 1e-12);
        }
    }

    #[test]
    fn non_unimodular_and_wrong_size_inputs_are_rejected() {
        let m = ComplexMatrix::scalar_matrix(2, C64::new(2.0, 0.0));
        assert!(matches!(
            explicit_l_matrix(&m),
            Err(Error::NotUnimodular { .. })
        ));
        let m3 = ComplexMatrix::<f64>::identity(3);
        assert!(matches!(majorana_matrix(&m3), Err(Error::Dimension { .. })));
    }
}
