//! Error type shared by all invariant computations.

use thiserror::Error;

/// Errors raised by the exact linear algebra layer and the invariant
/// computations built on top of it.
///
/// `AsymmetryDetected` and `Calibration` indicate internal inconsistencies
/// (a bug or a wrong sign convention), not bad user input; callers should
/// treat them as fatal.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A symmetric matrix was expected.
    #[error("matrix is not symmetric")]
    NotSymmetric,

    /// Incompatible shapes or sizes.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A matrix does not preserve the symplectic form.
    #[error("matrix does not preserve the symplectic form")]
    NotSymplectic,

    /// A transvection was requested along the zero class.
    #[error("transvection class must be nonzero")]
    ZeroVector,

    /// Operands live over different genera.
    #[error("genus mismatch: {0}")]
    GenusMismatch(String),

    /// A numeric argument is outside its admissible range.
    #[error("argument out of range: {0}")]
    Range(String),

    /// A generator letter index is outside 1..=2g+1.
    #[error("letter index {index} out of range 1..={max}")]
    IndexOutOfRange { index: u32, max: u32 },

    /// The pairing Gram matrix failed its exact symmetry self-check.
    #[error("pairing Gram matrix failed exact symmetry check")]
    AsymmetryDetected,

    /// No power of the matrix up to the given cap is the identity.
    #[error("not periodic: {0}")]
    NotPeriodic(String),

    /// A word that must act trivially on homology does not.
    #[error("word does not act trivially on homology")]
    NotTorelli,

    /// The genus-one normalization check failed for the chosen complex
    /// structure; the sign convention of J is wrong.
    #[error("complex-structure calibration failed: {0}")]
    Calibration(String),
}
