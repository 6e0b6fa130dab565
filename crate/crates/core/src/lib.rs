//! Finslerian spinor algebra for arbitrary dimension.
//!
//! The crate models spinor spaces of dimension `n` with an antisymmetric
//! n-argument scalar product, spintensors with four index classes,
//! Hermitian coordinate spaces of dimension `n^2`, the induced real linear
//! map attached to every unimodular matrix, and the degree-n invariant
//! form those maps preserve. Closed-form layers for `n = 2` (Minkowski
//! space, Majorana realification, gamma matrices) and `n = 3` (the cubic
//! invariant, the four-factor decomposition, and its subgroup actions)
//! double as independent oracles for the generic machinery.
//!
//! Everything numeric is generic over [`Scalar`] (`f32` or `f64`);
//! concrete `f64` aliases sit at the crate root. Random sampling is fully
//! deterministic given a seed.

pub mod error;
pub mod herm;
pub mod lmap;
pub mod matrix;
pub mod n2;
pub mod n3;
pub mod real;
pub mod sample;
pub mod scalar;
pub mod spinor;
pub mod tensor;
pub mod verify;

pub use error::{Error, Result};
pub use herm::{
    det_invariant, finsler_length_power, form_tensor, FormTensor, HermBasis, HermVector,
};
pub use lmap::{check_homomorphism, induced_map, kernel_elements, FinsLinearMap};
pub use matrix::ComplexMatrix;
pub use num_complex::Complex;
pub use real::RealMatrix;
pub use sample::{random_sl, rng_from_seed, SampleRng, GENERATOR_ID};
pub use scalar::{Scalar, Tolerance};
pub use spinor::{scalar_n_product, BasisChange, Spinor};
pub use tensor::{AxisClass, SpinTensor, Valency};
pub use verify::{PropertyRecord, VerificationReport, VerifyConfig, ARTIFACT_VERSION};

/// Complex scalar over `f64`.
pub type C64 = Complex<f64>;
/// Complex scalar over `f32`.
pub type C32 = Complex<f32>;
/// Complex matrix over `f64`.
pub type Matrix64 = ComplexMatrix<f64>;
/// Real matrix over `f64`.
pub type RealMatrix64 = RealMatrix<f64>;
/// Spinor over `f64`.
pub type Spinor64 = Spinor<f64>;
/// Spintensor over `f64`.
pub type SpinTensor64 = SpinTensor<f64>;
/// Hermitian coordinate vector over `f64`.
pub type HermVector64 = HermVector<f64>;
/// Hermitian basis over `f64`.
pub type HermBasis64 = HermBasis<f64>;
/// Symmetric form tensor over `f64`.
pub type FormTensor64 = FormTensor<f64>;
/// Induced real linear map over `f64`.
pub type FinsLinearMap64 = FinsLinearMap<f64>;
/// Tolerance over `f64`.
pub type Tolerance64 = Tolerance<f64>;
