//! The doubly infinite root sequence attached to a periodic reduced word.
//!
//! A [`ConvexOrderSequence`] holds the period `i_1, ..., i_N` of a reduced
//! word for the translation by twice the sum of the fundamental coweights,
//! extended to all integers by `i_{k + N} = i_k`. The attached roots are
//!
//! ```text
//! beta_k = s_{i_0} s_{i_{-1}} ... s_{i_{k+1}} (alpha_{i_k})   for k <= 0,
//! beta_k = s_{i_1} s_{i_2} ... s_{i_{k-1}} (alpha_{i_k})      for k > 0,
//! ```
//!
//! and a valid period word enumerates each positive real root exactly
//! once: `beta_k` with `k <= 0` runs over the roots with positive finite
//! part, `beta_k` with `k > 0` over those with negative finite part.
//! [`ConvexOrderSequence::validate_window`] checks that pattern on a
//! window of indices and reports the first offending `k` on failure.

use std::collections::BTreeSet;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::cartan::{AffineCartanDatum, CoweightVector, RootClass, RootVector, TypeLabel};
use crate::error::{QError, QResult};

use super::extended::{factor_translation, ExtendedWeylElement};
use super::word::{reflect_root_coords, WeylWord};

// ---- The sequence ----

/// A period word together with the two-sided root enumeration it induces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexOrderSequence {
    label: TypeLabel,
    period: Vec<usize>,
}

impl ConvexOrderSequence {
    /// Builds the canonical sequence: the period is a reduced word for the
    /// translation by `2 rho` in the coweight lattice, obtained by
    /// multiplying the factorizations of the fundamental translations in
    /// node order and squaring. The result is validated on the window
    /// `|k| <= 2N` before it is returned.
    pub fn new(datum: &AffineCartanDatum) -> QResult<Self> {
        let mut product = ExtendedWeylElement::identity(datum);
        for i in 1..=datum.finite_rank() {
            let xi = CoweightVector::fundamental(datum, i);
            product = product.mult(datum, &factor_translation(datum, &xi)?)?;
        }
        let squared = product.mult(datum, &product)?;
        if !squared.automorphism().is_identity() {
            return Err(QError::Construction(format!(
                "ConvexOrderSequence::new: the translation by 2 rho in type {} \
                 did not reduce to a plain word",
                datum.label()
            )));
        }
        if !squared.word().is_reduced(datum)? {
            return Err(QError::Construction(format!(
                "ConvexOrderSequence::new: the period word for type {} is not reduced",
                datum.label()
            )));
        }
        let sequence = ConvexOrderSequence {
            label: datum.label(),
            period: squared.word().indices().to_vec(),
        };
        let window = 2 * sequence.period.len() as i64;
        sequence.validate_window(datum, -window, window)?;
        Ok(sequence)
    }

    /// Wraps a caller-supplied period word, validating it on the window
    /// `|k| <= 2 * len` and rejecting it with the first index whose root
    /// falls outside the required pattern.
    pub fn from_word(datum: &AffineCartanDatum, word: &WeylWord) -> QResult<Self> {
        datum.check_same(word.type_label(), "ConvexOrderSequence::from_word")?;
        if word.is_empty() {
            return Err(QError::InvalidArgument(
                "ConvexOrderSequence::from_word: the period word is empty".to_string(),
            ));
        }
        let sequence = ConvexOrderSequence {
            label: datum.label(),
            period: word.indices().to_vec(),
        };
        let window = 2 * sequence.period.len() as i64;
        sequence.validate_window(datum, -window, window)?;
        Ok(sequence)
    }

    pub fn type_label(&self) -> TypeLabel {
        self.label
    }

    /// The period `i_1, ..., i_N`.
    pub fn period(&self) -> &[usize] {
        &self.period
    }

    pub fn period_length(&self) -> usize {
        self.period.len()
    }

    /// The letter `i_k` for any integer `k`, via `i_{k + N} = i_k`.
    pub fn index(&self, k: i64) -> usize {
        let n = self.period.len() as i64;
        self.period[(k - 1).rem_euclid(n) as usize]
    }

    /// The root `beta_k`.
    pub fn beta(&self, datum: &AffineCartanDatum, k: i64) -> QResult<RootVector> {
        datum.check_same(self.label, "ConvexOrderSequence::beta")?;
        let mut coords = RootVector::simple(datum, self.index(k)).coords().to_vec();
        if k > 0 {
            let mut j = k - 1;
            while j >= 1 {
                reflect_root_coords(datum, self.index(j), &mut coords);
                j -= 1;
            }
        } else {
            let mut j = k + 1;
            while j <= 0 {
                reflect_root_coords(datum, self.index(j), &mut coords);
                j += 1;
            }
        }
        RootVector::from_coords(datum, coords)
    }

    /// The roots `beta_k` for `k_min <= k <= k_max` in index order.
    pub fn betas(
        &self,
        datum: &AffineCartanDatum,
        k_min: i64,
        k_max: i64,
    ) -> QResult<Vec<(i64, RootVector)>> {
        if k_min > k_max {
            return Err(QError::InvalidArgument(format!(
                "ConvexOrderSequence::betas: empty window {k_min} > {k_max}"
            )));
        }
        (k_min..=k_max)
            .map(|k| Ok((k, self.beta(datum, k)?)))
            .collect()
    }

    /// Checks the enumeration pattern on a window: every `beta_k` with
    /// `k <= 0` must be a positive real root with positive finite part,
    /// every `beta_k` with `k > 0` a positive real root with negative
    /// finite part and at least one copy of `delta`, and all roots in the
    /// window must be pairwise distinct. The error names the first
    /// offending `k`.
    pub fn validate_window(
        &self,
        datum: &AffineCartanDatum,
        k_min: i64,
        k_max: i64,
    ) -> QResult<()> {
        datum.check_same(self.label, "ConvexOrderSequence::validate_window")?;
        let mut seen: BTreeSet<RootVector> = BTreeSet::new();
        for k in k_min..=k_max {
            let beta = self.beta(datum, k)?;
            if beta.classify(datum)? != RootClass::RealPositive {
                return Err(QError::IdentityFailure(format!(
                    "ConvexOrderSequence: beta_{k} = {beta} is not a positive real root"
                )));
            }
            let finite = beta.finite_part(datum);
            if k > 0 {
                let negated: Vec<i64> = finite.iter().map(|&c| -c).collect();
                if beta.delta_degree() < 1 || !datum.is_finite_positive_root(&negated) {
                    return Err(QError::IdentityFailure(format!(
                        "ConvexOrderSequence: beta_{k} = {beta} does not lie in the \
                         negative-finite-part family"
                    )));
                }
            } else if !datum.is_finite_positive_root(&finite) {
                return Err(QError::IdentityFailure(format!(
                    "ConvexOrderSequence: beta_{k} = {beta} does not lie in the \
                     positive-finite-part family"
                )));
            }
            if !seen.insert(beta.clone()) {
                return Err(QError::IdentityFailure(format!(
                    "ConvexOrderSequence: beta_{k} = {beta} repeats an earlier root \
                     in the window [{k_min}, {k_max}]"
                )));
            }
        }
        Ok(())
    }
}

impl Serialize for ConvexOrderSequence {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ConvexOrderSequence", 3)?;
        s.serialize_field("type", &self.label.family.to_string())?;
        s.serialize_field("rank", &self.label.rank)?;
        s.serialize_field("period", &self.period)?;
        s.end()
    }
}

// ---- Convenience entry point ----

/// Builds the canonical sequence (validating it) and returns the roots
/// `beta_k` on the requested window.
pub fn beta_sequence(
    datum: &AffineCartanDatum,
    k_min: i64,
    k_max: i64,
) -> QResult<Vec<(i64, RootVector)>> {
    let sequence = ConvexOrderSequence::new(datum)?;
    sequence.validate_window(datum, k_min, k_max)?;
    sequence.betas(datum, k_min, k_max)
}

// ---- Tests ----
