//! Kashiwara operators through exact string decomposition.
//!
//! Every vector of an integrable module splits along the color `i` as
//! `v = sum_m f_i^{(m)} u_m` with `e_i u_m = 0`. [`string_decompose`]
//! computes that splitting exactly: the highest power is recovered from
//! the largest nonvanishing raising power via
//! `e_i^{(m)} f_i^{(m)} u = binom(l, m) u` with `l = <h_i, wt(u)>`, then
//! peeled off and the loop repeated. The Kashiwara operators are the
//! power shifts on the pieces: [`ftilde`] sends `f_i^{(m)} u_m` to
//! `f_i^{(m+1)} u_m`, [`etilde`] to `f_i^{(m-1)} u_m`, and
//! [`ftilde_power`] shifts by any amount. All arithmetic is exact and
//! uses the module weights, so the operators are equally valid on
//! dualized desks.

use crate::error::{QError, QResult};
use crate::qmodule::desk::DeskModuleSpec;
use crate::qmodule::vector::{homogeneous_components, ModuleVector};
use crate::qsymbolic::{gauss_binomial, gauss_factorial, RatQ};

// ---- string pieces ----

/// One string component `f_i^{(power)} top` with `e_i top = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StringPiece {
    pub power: usize,
    pub top: ModuleVector,
}

/// Splits `v` as `sum f_i^{(m)} u_m` with every `u_m` killed by `e_i`.
///
/// The vector is first cut into weight-homogeneous components, so pieces
/// of equal power but different weight stay separate. An inconsistency
/// with the integrable string identities is an [`QError::IdentityFailure`].
pub fn string_decompose(
    spec: &DeskModuleSpec,
    i: usize,
    v: &ModuleVector,
) -> QResult<Vec<StringPiece>> {
    let mut pieces = Vec::new();
    for (_, component) in homogeneous_components(spec.datum(), v)? {
        decompose_component(spec, i, component, &mut pieces)?;
    }
    Ok(pieces)
}

fn decompose_component(
    spec: &DeskModuleSpec,
    i: usize,
    mut w: ModuleVector,
    pieces: &mut Vec<StringPiece>,
) -> QResult<()> {
    let mut previous_power: Option<usize> = None;
    while !w.is_zero() {
        // The largest m with e_i^m w nonzero.
        let mut powers = vec![w.clone()];
        loop {
            let next = spec.apply_e(i, powers.last().unwrap())?;
            if next.is_zero() {
                break;
            }
            powers.push(next);
        }
        let m = powers.len() - 1;
        if previous_power.is_some_and(|p| m >= p) {
            return Err(QError::IdentityFailure(format!(
                "string_decompose: color {i} string power did not decrease ({m})"
            )));
        }
        previous_power = Some(m);

        let top_raw = powers
            .pop()
            .unwrap()
            .scale(&RatQ::from_laurent(gauss_factorial(m as i64)).inv());
        let Some(node) = top_raw.leading_node() else { unreachable!() };
        let ell = spec.module_i_weight(node, i)?;
        let binom = RatQ::from_laurent(gauss_binomial(ell, m as i64));
        if binom.is_zero() {
            return Err(QError::IdentityFailure(format!(
                "string_decompose: vanishing binomial ({ell} choose {m}) for color {i}"
            )));
        }
        let top = top_raw.scale(&binom.inv());
        w = &w - &spec.divided_f(i, m, &top)?;
        pieces.push(StringPiece { power: m, top });
    }
    Ok(())
}

// ---- Kashiwara operators ----

/// The power shift `f_i^{(m)} u_m -> f_i^{(m+n)} u_m` on every string
/// piece; pieces shifted below power zero are dropped.
pub fn ftilde_power(
    spec: &DeskModuleSpec,
    i: usize,
    n: i64,
    v: &ModuleVector,
) -> QResult<ModuleVector> {
    let mut out = ModuleVector::zero();
    for piece in string_decompose(spec, i, v)? {
        let shifted = piece.power as i64 + n;
        if shifted < 0 {
            continue;
        }
        out = &out + &spec.divided_f(i, shifted as usize, &piece.top)?;
    }
    Ok(out)
}

/// The Kashiwara lowering operator of color `i`.
pub fn ftilde(spec: &DeskModuleSpec, i: usize, v: &ModuleVector) -> QResult<ModuleVector> {
    ftilde_power(spec, i, 1, v)
}

/// The Kashiwara raising operator of color `i`.
pub fn etilde(spec: &DeskModuleSpec, i: usize, v: &ModuleVector) -> QResult<ModuleVector> {
    ftilde_power(spec, i, -1, v)
}
