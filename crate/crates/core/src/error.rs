//! Error taxonomy shared by the whole crate.
//!
//! Domain violations surface as structured variants carrying the offending
//! magnitudes as `f64` so they render the same for every scalar instantiation.

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A square matrix was required.
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    /// A dimension or length disagreed with what the operation needs.
    #[error("dimension mismatch for {what}: expected {expected}, found {found}")]
    Dimension {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    /// Ragged row data was supplied where a rectangular matrix was expected.
    #[error("ragged rows: row {row} has {found} entries, expected {expected}")]
    RaggedRows {
        row: usize,
        expected: usize,
        found: usize,
    },

    /// A NaN or infinite entry was supplied.
    #[error("non-finite entry at ({row},{col})")]
    NonFinite { row: usize, col: usize },

    /// Inversion hit a numerically singular matrix.
    #[error("matrix is numerically singular (|det| = {det_abs:.3e})")]
    Singular { det_abs: f64 },

    /// A determinant-one matrix was required.
    #[error("matrix is not unimodular (det = {re:.12} {im:+.12}i)")]
    NotUnimodular { re: f64, im: f64 },

    /// A Hermitian matrix was required.
    #[error("matrix is not Hermitian (max asymmetry {max_asymmetry:.3e})")]
    NotHermitian { max_asymmetry: f64 },

    /// Two spintensors had incompatible valencies.
    #[error("valency mismatch: {left:?} vs {right:?} (upper, upper-dotted, lower, lower-dotted)")]
    ValencyMismatch { left: [usize; 4], right: [usize; 4] },

    /// A tensor axis argument was out of range or of the wrong index class.
    #[error("invalid axis {axis}: {reason}")]
    Axis { axis: usize, reason: &'static str },

    /// An argument fell outside the mathematical domain of the operation.
    #[error("domain error in {what}: offending value {value:.6e}")]
    Domain { what: &'static str, value: f64 },

    /// The three-spinor decomposition needs a usable (3,3) pivot.
    #[error("decomposition pivot too small: |entry(3,3)| = {pivot_abs:.3e}")]
    DecompositionDomain { pivot_abs: f64 },

    /// A quantity that must be real or otherwise structurally constrained
    /// failed its internal check; indicates an inconsistent input or a bug.
    #[error("internal consistency check failed in {what} (residue {residue:.3e})")]
    InternalConsistency { what: &'static str, residue: f64 },

    /// Random sampling exhausted its retry budget.
    #[error("sampling failed after {attempts} attempts")]
    Sampling { attempts: u32 },

    /// A tolerance had negative, non-finite, or all-zero parts.
    #[error("invalid tolerance (abs = {abs:.3e}, rel = {rel:.3e})")]
    InvalidTolerance { abs: f64, rel: f64 },
}

/// Crate-wide result alias.
pub type Result<V, E = Error> = std::result::Result<V, E>;
