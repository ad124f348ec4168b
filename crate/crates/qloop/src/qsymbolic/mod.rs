//! Exact scalar arithmetic: Laurent polynomials and rational functions in a
//! quantum parameter `q`, multivariate Laurent polynomials in loop variables
//! `z_{i,nu}`, integer partitions, Schur polynomials, and the symmetric
//! function identities used to move between power sums, elementary, and
//! complete homogeneous families.
//!
//! Everything here is exact: integer coefficients are [`num_bigint::BigInt`],
//! rational coefficients are [`num::BigRational`], and no floating point is
//! used anywhere. The layer is deliberately independent of the Lie-theoretic
//! modules; it only knows about commuting indeterminates.
//!
//! The pieces:
//!
//! * [`LaurentQ`]: dense Laurent polynomials in `q` over `BigInt`, with the
//!   bar substitution `q -> q^{-1}`, balanced quantum integers, factorials,
//!   and binomials, and an exact gcd for canonicalizing fractions.
//! * [`RatQ`]: the fraction field of [`LaurentQ`] in canonical reduced form,
//!   with order-of-vanishing queries at `q = 0` and `q = infinity`.
//! * [`ZPoly`]: Laurent polynomials in a fixed finite set of loop variables
//!   with [`RatQ`] coefficients, supporting the inversion `z -> z^{-1}` and
//!   constant-term extraction.
//! * [`Partition`] and [`PartitionTuple`]: integer partitions and tuples of
//!   them indexed by a node set, with the encoding by multiplicity maps.
//! * [`schur_polynomial`]: Schur polynomials via the Jacobi-Trudi
//!   determinant in complete homogeneous polynomials.
//! * Newton-identity conversions between power sums and the elementary or
//!   complete families ([`elementary_to_power_sums`] and friends), plus
//!   [`macdonald_pair`], the constant-term inner product under which Schur
//!   polynomials are orthonormal.

mod laurent;
mod newton;
mod partition;
mod ratq;
mod schur;
mod zpoly;

pub use laurent::{gauss_binomial, gauss_factorial, gauss_int, LaurentQ};
pub use newton::{
    elementary_to_power_sums, evaluate_power_expansion, homogeneous_to_power_sums,
    macdonald_pair, power_sums_to_elementary, power_sums_to_homogeneous, Expansion,
};
pub use partition::{Partition, PartitionTuple};
pub use ratq::{gauss_int_rat, RatQ};
pub use schur::{complete_homogeneous, elementary_polynomial, schur_polynomial};
pub use zpoly::ZPoly;
