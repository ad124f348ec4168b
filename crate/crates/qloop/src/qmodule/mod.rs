//! Symbolic quantum loop modules at desk scale.
//!
//! A [`DeskModuleSpec`] freezes a small concrete module: a tensor product
//! of type A level-zero fundamental modules, one factor per color
//! multiplicity, with exact coefficients in `q` and a hard delta-degree
//! band. Basis vectors are the crystal tensor nodes of [`crate::crystal`];
//! a [`ModuleVector`] is a finite formal sum of them over [`RatQ`].
//!
//! On top of the Chevalley and divided-power actions the module offers:
//!
//! - Kashiwara operators by exact string decomposition
//!   ([`string_decompose`], [`ftilde_power`]);
//! - the bar involution on the certified cyclic span ([`BarContext`]);
//! - braid operators, the rotation twist, and translation operators
//!   ([`braid_t`], [`diagram_twist`], [`translation_t`]);
//! - Drinfeld loop generators obtained by braid conjugation and the
//!   imaginary root vectors extracted from their commutators
//!   ([`xplus_apply`], [`drinfeld_h`], [`imaginary_p`], [`schur_minus`]);
//! - the contravariant form, its `z`-valued refinement, and the symmetric
//!   tensor pairing ([`contravariant_form`], [`z_valued_form`]);
//! - banded submodule generation with exact per-slot dimension tables
//!   ([`generate_submodule`], [`submodule_dim_table`]);
//! - named verification suites with JSON reports ([`verify_suite`]).
//!
//! Every operation is exact and banded: a step that would leave the
//! certified degree window is a hard [`crate::QError::BandExceeded`], never
//! a silent truncation.
//!
//! [`RatQ`]: crate::qsymbolic::RatQ

// mod bar;
mod braid;
mod desk;
mod drinfeld;
// mod form;
mod kashiwara;
mod operator;
// mod span;
// mod submodule;
// mod suite;
mod vector;

// pub use bar::{bar_involution, BarContext};
pub use braid::{braid_t, diagram_twist, translation_steps, translation_t};
pub use desk::DeskModuleSpec;
pub use drinfeld::{
    drinfeld_h, imaginary_p, schur_minus, schur_z_vector, xminus_apply, xminus_op, xplus_apply,
    xplus_op,
};
// pub use form::{
//     contravariant_form, factor_form_values, z_valued_form, FactorFormTable,
// };
pub use kashiwara::{etilde, ftilde, ftilde_power, string_decompose, StringPiece};
pub use operator::{ModuleOperator, OpStep};
// pub use span::{SliceSpan, SolveOutcome};
// pub use submodule::{generate_submodule, submodule_dim_table, ClosureCaps, SubmoduleClosure, SubmoduleTable};
// pub use suite::{verify_suite, SuiteReport, SuiteWitness};
pub use vector::{
    desk_weight_key, homogeneous_components, homogeneous_weight, ModuleVector, WeightKey,
};
