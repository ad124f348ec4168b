//! Shared error type.
//!
//! The library distinguishes recoverable usage errors (mismatched data,
//! malformed input) from mathematical consistency failures. The latter are
//! surfaced as [`QError::Construction`] or [`QError::IdentityFailure`] and
//! carry a human-readable witness; they are never downgraded to a silent
//! default.

use thiserror::Error;

/// Errors raised by lattice, crystal, and module computations.
#[derive(Debug, Error)]
pub enum QError {
    /// Two operands were built over different Cartan data.
    #[error("datum mismatch: {0}")]
    DatumMismatch(String),

    /// A module operation would touch a basis vector outside the certified
    /// delta-degree band.
    #[error("band exceeded: {0}")]
    BandExceeded(String),

    /// A frozen table or constructed map failed its defining identity.
    #[error("construction error: {0}")]
    Construction(String),

    /// A mathematical identity that the library asserts failed on a concrete
    /// input; the payload is the counterexample.
    #[error("identity failure: {0}")]
    IdentityFailure(String),

    /// A crystal violated a string-length or axiom requirement.
    #[error("malformed crystal: {0}")]
    MalformedCrystal(String),

    /// Polynomial operands declared over different variable shapes.
    #[error("variable shape mismatch: {0}")]
    ShapeMismatch(String),

    /// Invalid argument outside any mathematical failure (negative factorial,
    /// empty word where one is required, unknown suite name).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// Convenience alias used throughout the crate.
pub type QResult<T> = Result<T, QError>;
