//! Untwisted affine root systems of type A, D, E with exact arithmetic.
//!
//! An [`AffineCartanDatum`] is built from a finite simply-laced family and
//! rank. The finite positive roots are generated by reflection closure, the
//! highest root furnishes the affine node's row of the Cartan matrix, and
//! the marks, comarks, Coxeter and dual Coxeter numbers follow. Everything
//! is validated at construction time: the null-root and center relations,
//! the normalization of the zeroth mark, and the Coxeter number as the sum
//! of the marks.
//!
//! Weights live over the basis of fundamental weights plus the null root
//! ([`WeightVector`]), roots over the simple roots ([`RootVector`]), and
//! coweights over simple coroots plus the scaling element
//! ([`CoweightVector`]). The canonical pairing and the invariant bilinear
//! form are exact rational numbers; the form is normalized so that the
//! zeroth fundamental weight is isotropic.

mod datum;
mod roots;
mod vectors;

pub use datum::{AffineCartanDatum, FamilyADE, TypeLabel};
pub use roots::{positive_roots_up_to, verify_coxeter_identity, CoxeterReport, RootClass};
pub use vectors::{bilinear_form, bilinear_form_roots, CoweightVector, RootVector, WeightVector};
