//! Exact arithmetic for untwisted affine root systems of type ADE and for
//! desk-scale quantum loop modules over them.
//!
//! Everything here is exact: integers are arbitrary-precision, scalars are
//! Laurent polynomials or rational functions in `q` with integer coefficients,
//! and module computations are banded in the `delta`-degree so that any
//! operation that would leave the certified window is a hard error instead of
//! a silent truncation.
//!
//! The crate is organized as five layers, bottom up:
//!
//! - [`qsymbolic`]: scalar arithmetic (Laurent polynomials and rational
//!   functions in `q`, multivariate Laurent polynomials in spectral `z`
//!   variables), Gauss integers, partitions, Schur polynomials, Newton
//!   transitions, and the constant-term pairing.
//! - [`cartan`]: affine Cartan data for ADE, weight/root/coweight lattices,
//!   pairings, the normalized invariant form, and root enumeration.
//! - [`weyl`]: affine and extended affine Weyl groups, reduced words,
//!   inversion sets, translation factorization, and the periodic convex-order
//!   sequence.
//! - [`crystal`]: abstract crystal interface, level-zero fundamental crystals
//!   in type A, the tensor rule, Weyl-group action on regular crystals,
//!   extremal-node detection, bounded graph enumeration, and the census of
//!   extremal-vector orbits.
//! - [`qmodule`]: symbolic quantum loop modules at desk scale: Chevalley and
//!   divided-power actions, Kashiwara operators, bar involution, braid
//!   operators, Drinfeld loop generators by braid conjugation, imaginary root
//!   vectors, the contravariant form, and the verification suites.

#![forbid(unsafe_code)]
#![warn(missing_debug_implementations)]

pub mod cartan;
pub mod crystal;
pub mod error;
pub mod qmodule;
pub mod qsymbolic;
pub mod weyl;

pub use error::QError;
