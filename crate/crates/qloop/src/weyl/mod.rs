//! Affine and extended affine Weyl group arithmetic.
//!
//! [`WeylWord`] is a sequence of simple-reflection indices acting exactly on
//! weights and root-lattice vectors, with inversion-set enumeration and a
//! reducedness test. [`DiagramAutomorphism`] is a node permutation
//! preserving the Cartan matrix; the full automorphism group is enumerated
//! by validated brute force. [`ExtendedWeylElement`] combines the two, with
//! a canonical normal form splitting off the translation part, and
//! [`factor_translation`] peels a dominant-coweight translation into an
//! automorphism times a reduced word. [`ConvexOrderSequence`] turns the
//! translation by twice the sum of the fundamental coweights into the
//! doubly infinite root sequence used for convex orders, validated window
//! by window. [`braid_relation_check`] confirms the defining relations as
//! weight-action identities.

mod automorphism;
mod checks;
mod convex;
mod extended;
mod word;

pub use automorphism::DiagramAutomorphism;
pub use checks::{braid_relation_check, BraidReport};
pub use convex::{beta_sequence, ConvexOrderSequence};
pub use extended::{factor_translation, translation_weight_action, ExtendedWeylElement};
pub use word::WeylWord;
