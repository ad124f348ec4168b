//! Composite module operators with banded guarantees.
//!
//! An [`OpStep`] is one primitive move on a desk: a Chevalley or divided
//! power, a diagonal power, a slot rotation, a braid letter, or a twist.
//! A [`ModuleOperator`] is a scalar times a chain of steps in application
//! order, together with its declared desk weight shift. Application
//! splits the input into weight-homogeneous components, runs the chain on
//! each, and re-verifies the declared shift on every nonzero image.
//!
//! The [`ModuleOperator::margin`] is a guarantee threshold, not a gate:
//! it bounds the total-degree excursion of the chain, so the operator
//! must succeed on inputs at least that far inside the band. Application
//! always tries regardless; a band exit on an input inside the guarantee
//! region is therefore reported as a construction bug, while a band exit
//! outside it propagates as the usual [`crate::QError::BandExceeded`].

use crate::error::{QError, QResult};
use crate::qmodule::braid::{braid_t, diagram_twist};
use crate::qmodule::desk::DeskModuleSpec;
use crate::qmodule::vector::{homogeneous_components, homogeneous_weight, ModuleVector};
use crate::qsymbolic::RatQ;
use std::fmt;

// ---- primitive steps ----

/// One primitive move on a desk, in the conventions of
/// [`DeskModuleSpec`]: raising and lowering route through the
/// orientation, rotations raise the module delta-degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OpStep {
    /// The raising operator `e_i`.
    E(usize),
    /// The lowering operator `f_i`.
    F(usize),
    /// The divided power `e_i^{(n)}`.
    DivE(usize, usize),
    /// The divided power `f_i^{(n)}`.
    DivF(usize, usize),
    /// The diagonal power `t_i^k`.
    TPow(usize, i64),
    /// The canonical rotation `z_slot^k` of one tensor slot.
    ZSlot(usize, i64),
    /// The canonical rotation of every slot of one color.
    ZColor(usize, i64),
    /// A braid letter or its inverse.
    Braid { i: usize, inverse: bool },
    /// A power of the rotation twist.
    Twist(i64),
}

impl OpStep {
    /// Applies the step to a vector on the given desk.
    pub fn apply(&self, spec: &DeskModuleSpec, v: &ModuleVector) -> QResult<ModuleVector> {
        match *self {
            OpStep::E(i) => spec.apply_e(i, v),
            OpStep::F(i) => spec.apply_f(i, v),
            OpStep::DivE(i, n) => spec.divided_e(i, n, v),
            OpStep::DivF(i, n) => spec.divided_f(i, n, v),
            OpStep::TPow(i, k) => spec.apply_t_pow(i, k, v),
            OpStep::ZSlot(slot, k) => spec.apply_z_slot(slot, k, v),
            OpStep::ZColor(color, k) => spec.apply_z_color(color, k, v),
            OpStep::Braid { i, inverse } => braid_t(spec, i, inverse, v),
            OpStep::Twist(p) => diagram_twist(spec, p, v),
        }
    }

    /// A bound on the total-degree excursion this step can cause.
    pub fn band_bound(&self, spec: &DeskModuleSpec) -> i64 {
        let affine = |i: usize| i64::from(i == 0);
        match *self {
            OpStep::E(i) | OpStep::F(i) => affine(i),
            OpStep::DivE(i, n) | OpStep::DivF(i, n) => n as i64 * affine(i),
            OpStep::TPow(..) => 0,
            OpStep::ZSlot(_, k) => k.abs(),
            OpStep::ZColor(color, k) => k.abs() * spec.slots_of_color(color).len() as i64,
            OpStep::Braid { i, .. } => affine(i) * spec.num_factors() as i64,
            OpStep::Twist(p) => p.abs() * spec.num_factors() as i64,
        }
    }
}

// ---- composite operators ----

/// A named scalar multiple of a chain of steps with a declared desk
/// weight shift.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleOperator {
    name: String,
    coefficient: RatQ,
    steps: Vec<OpStep>,
    classical_shift: Vec<i64>,
    degree_shift: i64,
}

impl ModuleOperator {
    /// Builds an operator from its steps in application order and the
    /// desk-label weight shift it promises: per-color pairing shifts and
    /// a total-degree shift.
    pub fn new(
        name: impl Into<String>,
        coefficient: RatQ,
        steps: Vec<OpStep>,
        classical_shift: Vec<i64>,
        degree_shift: i64,
    ) -> Self {
        ModuleOperator {
            name: name.into(),
            coefficient,
            steps,
            classical_shift,
            degree_shift,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn coefficient(&self) -> &RatQ {
        &self.coefficient
    }

    pub fn steps(&self) -> &[OpStep] {
        &self.steps
    }

    /// The declared desk shift: per-color pairings and total degree.
    pub fn desk_shift(&self) -> (&[i64], i64) {
        (&self.classical_shift, self.degree_shift)
    }

    /// The guarantee threshold: inputs whose total degree is at least
    /// this far inside the band must not exit it.
    pub fn margin(&self, spec: &DeskModuleSpec) -> i64 {
        self.steps.iter().map(|s| s.band_bound(spec)).sum()
    }

    /// Applies the operator, one weight-homogeneous component at a time,
    /// verifying the declared shift on each nonzero image.
    pub fn apply(&self, spec: &DeskModuleSpec, v: &ModuleVector) -> QResult<ModuleVector> {
        let rank = spec.datum().label().rank;
        if self.classical_shift.len() != rank {
            return Err(QError::ShapeMismatch(format!(
                "ModuleOperator::apply: {} declares {} classical shifts for rank {rank}",
                self.name,
                self.classical_shift.len()
            )));
        }
        let mut out = ModuleVector::zero();
        for (key, component) in homogeneous_components(spec.datum(), v)? {
            let mut image = component;
            let mut failed = None;
            for step in &self.steps {
                match step.apply(spec, &image) {
                    Ok(next) => image = next,
                    Err(err) => {
                        failed = Some(err);
                        break;
                    }
                }
            }
            if let Some(err) = failed {
                if let QError::BandExceeded(msg) = &err {
                    let margin = self.margin(spec);
                    let (lo, hi) = spec.band();
                    if lo + margin <= key.1 && key.1 <= hi - margin {
                        return Err(QError::Construction(format!(
                            "ModuleOperator::apply: {} exited the band from degree {} despite \
                             margin {margin}: {msg}",
                            self.name, key.1
                        )));
                    }
                }
                return Err(err);
            }
            if !image.is_zero() {
                let expected: (Vec<i64>, i64) = (
                    key.0
                        .iter()
                        .zip(&self.classical_shift)
                        .map(|(w, s)| w + s)
                        .collect(),
                    key.1 + self.degree_shift,
                );
                let got = homogeneous_weight(spec.datum(), &image).map_err(|_| {
                    QError::IdentityFailure(format!(
                        "ModuleOperator::apply: {} produced a mixed-weight image",
                        self.name
                    ))
                })?;
                if got != Some(expected.clone()) {
                    return Err(QError::IdentityFailure(format!(
                        "ModuleOperator::apply: {} shifted {key:?} to {got:?}, declared {expected:?}",
                        self.name
                    )));
                }
            }
            out = &out + &image;
        }
        Ok(out.scale(&self.coefficient))
    }
}

impl fmt::Display for ModuleOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}
