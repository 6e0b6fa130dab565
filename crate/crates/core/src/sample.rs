//! Seeded random sampling.
//!
//! All randomness flows through a counter-based ChaCha8 stream so that runs
//! are reproducible from a single `u64` seed and identical across platforms.
//! Gaussian draws are made in `f64` and then converted, so every scalar
//! instantiation sees the same underlying sample sequence.

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::scalar::Scalar;
use crate::spinor::Spinor;
use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

/// Identifier of the pseudo-random generator, recorded in reports.
pub const GENERATOR_ID: &str = "chacha8";

/// The concrete generator type behind [`GENERATOR_ID`].
pub type SampleRng = ChaCha8Rng;

/// Maximum redraw attempts before sampling gives up.
const MAX_ATTEMPTS: u32 = 64;

/// Builds the deterministic generator for a seed.
pub fn rng_from_seed(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// One standard complex Gaussian draw (unit second moment).
pub fn complex_normal<T: Scalar, R: Rng>(rng: &mut R) -> Complex<T> {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex::new(
        T::of(re * std::f64::consts::FRAC_1_SQRT_2),
        T::of(im * std::f64::consts::FRAC_1_SQRT_2),
    )
}

/// One standard real Gaussian draw.
pub fn real_normal<T: Scalar, R: Rng>(rng: &mut R) -> T {
    let x: f64 = rng.sample(StandardNormal);
    T::of(x)
}

/// `n x n` matrix of independent standard complex Gaussians (a Ginibre draw).
pub fn random_ginibre<T: Scalar, R: Rng>(n: usize, rng: &mut R) -> ComplexMatrix<T> {
    ComplexMatrix::from_fn(n, n, |_, _| complex_normal(rng))
}

/// Random spinor with independent standard complex Gaussian components.
pub fn random_spinor<T: Scalar, R: Rng>(n: usize, rng: &mut R) -> Result<Spinor<T>> {
    Spinor::new((0..n).map(|_| complex_normal(rng)).collect())
}

/// Vector of independent standard real Gaussians.
pub fn random_coords<T: Scalar, R: Rng>(len: usize, rng: &mut R) -> Vec<T> {
    (0..len).map(|_| real_normal(rng)).collect()
}

/// Residual bound for `|det - 1|` after projection onto determinant one.
fn unit_det_bound<T: Scalar>() -> T {
    T::of(1e-12).max(T::consistency_floor())
}

/// Draws a random matrix in SL(n, C), reproducibly from `seed`.
///
/// A Ginibre draw is rescaled by the principal n-th root of its determinant;
/// draws with `|det| < 1e-6` are rejected and redrawn. The returned matrix
/// satisfies `|det - 1| <= 1e-12` (widened to the machine floor on `f32`).
pub fn random_sl<T: Scalar>(n: usize, seed: u64) -> Result<ComplexMatrix<T>> {
    let mut rng = rng_from_seed(seed);
    random_sl_with(n, &mut rng)
}

/// Like [`random_sl`] but advances a caller-owned generator stream.
pub fn random_sl_with<T: Scalar, R: Rng>(n: usize, rng: &mut R) -> Result<ComplexMatrix<T>> {
    if n < 2 {
        return Err(Error::Dimension {
            what: "spinor space dimension",
            expected: 2,
            found: n,
        });
    }
    for _ in 0..MAX_ATTEMPTS {
        let g = random_ginibre::<T, R>(n, rng);
        let det = g.det()?;
        if det.norm() < T::of(1e-6) {
            continue;
        }
        // principal branch n-th root: argument lands in (-pi/n, pi/n]
        let root = det.powf(T::one() / T::of(n as f64));
        let m = g.scaled(root.inv());
        let residual = (m.det()? - Complex::new(T::one(), T::zero())).norm();
        if residual <= unit_det_bound::<T>() {
            return Ok(m);
        }
    }
    Err(Error::Sampling {
        attempts: MAX_ATTEMPTS,
    })
}
