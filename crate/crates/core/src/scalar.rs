//! Scalar abstraction and comparison tolerances.
//!
//! Every numerical routine in this crate is generic over a real floating
//! scalar `T: Scalar`. The two shipped instantiations are `f32` and `f64`;
//! concrete `f64` aliases live at the crate root.

use crate::error::{Error, Result};
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};
use std::fmt::{Debug, Display};

/// Real floating scalar underlying all complex and real linear algebra here.
///
/// The bound collects what the algorithms need: IEEE float behaviour,
/// float constants, and conversions from `f64` literals (used for exact
/// small-integer and half-integer coefficients).
pub trait Scalar:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + NumAssign
    + Debug
    + Display
    + Default
    + Send
    + Sync
    + 'static
{
    /// Converts a finite `f64` literal into `T`.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("finite f64 literal converts into any Scalar")
    }

    /// Machine-precision floor used by internal consistency checks so that
    /// thresholds stated for double precision do not misfire on `f32`.
    fn consistency_floor() -> Self {
        Self::epsilon() * Self::of(1e3)
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// Absolute-plus-relative comparison tolerance.
///
/// Two values `a` and `b` are considered equal when
/// `|a - b| <= abs + rel * max(|a|, |b|)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance<T> {
    /// Absolute part; must be non-negative.
    pub abs: T,
    /// Relative part; must be non-negative, and `abs + rel` must be positive.
    pub rel: T,
}

impl<T: Scalar> Default for Tolerance<T> {
    fn default() -> Self {
        Self {
            abs: Scalar::of(1e-10),
            rel: Scalar::of(1e-9),
        }
    }
}

impl<T: Scalar> Tolerance<T> {
    /// Builds a tolerance, rejecting negative, non-finite, or all-zero parts.
    pub fn new(abs: T, rel: T) -> Result<Self> {
        let bad = !abs.is_finite()
            || !rel.is_finite()
            || abs < T::zero()
            || rel < T::zero()
            || (abs + rel) <= T::zero();
        if bad {
            return Err(Error::InvalidTolerance {
                abs: abs.to_f64().unwrap_or(f64::NAN),
                rel: rel.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self { abs, rel })
    }

    /// The comparison bound for values of the given magnitude scale.
    pub fn bound(&self, scale: T) -> T {
        self.abs + self.rel * scale.abs()
    }

    /// True when `|a - b| <= abs + rel * max(|a|, |b|)`.
    pub fn close(&self, a: T, b: T) -> bool {
        (a - b).abs() <= self.bound(a.abs().max(b.abs()))
    }

    /// Complex-modulus variant of [`Tolerance::close`].
    pub fn close_complex(&self, a: num_complex::Complex<T>, b: num_complex::Complex<T>) -> bool {
        (a - b).norm() <= self.bound(a.norm().max(b.norm()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex;

    #[test]
    fn default_tolerance_matches_documented_values() {
        let tol = Tolerance::<f64>::default();
        assert_eq!(tol.abs, 1e-10);
        assert_eq!(tol.rel, 1e-9);
    }

    #[test]
    fn close_uses_absolute_plus_relative_bound() {
        let tol = Tolerance::<f64>::default();
        assert!(tol.close(1.0, 1.0 + 5e-10));
        assert!(!tol.close(1.0, 1.0 + 5e-9));
        assert!(tol.close(0.0, 5e-11));
        assert!(!tol.close(0.0, 5e-10));
        // relative part keeps large magnitudes comparable
        assert!(tol.close(1e6, 1e6 + 1e-4));
    }

    #[test]
    fn close_complex_uses_modulus() {
        let tol = Tolerance::<f64>::default();
        assert!(tol.close_complex(Complex::new(1.0, 1.0), Complex::new(1.0, 1.0 + 1e-10)));
        assert!(!tol.close_complex(Complex::new(1.0, 1.0), Complex::new(1.0, 1.01)));
    }

    #[test]
    fn invalid_tolerances_are_rejected() {
        assert!(Tolerance::<f64>::new(-1.0, 0.0).is_err());
        assert!(Tolerance::<f64>::new(0.0, 0.0).is_err());
        assert!(Tolerance::<f64>::new(f64::NAN, 1.0).is_err());
        assert!(Tolerance::<f64>::new(1e-12, 0.0).is_ok());
    }

    #[test]
    fn scalar_of_round_trips_literals() {
        assert_eq!(<f64 as Scalar>::of(0.5), 0.5);
        assert_eq!(<f32 as Scalar>::of(0.5), 0.5f32);
    }
}
