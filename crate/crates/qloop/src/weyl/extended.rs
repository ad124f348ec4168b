//! Extended affine Weyl elements: a diagram automorphism times a word.
//!
//! An [`ExtendedWeylElement`] is stored in the normal form `tau * w` with
//! `tau` a [`DiagramAutomorphism`] and `w` a [`WeylWord`]; the element acts
//! by the word first, then the automorphism. The same group is a semidirect
//! product of the finite Weyl group with the coweight lattice, and the
//! second normal form `w_fin * t_xi` can be read off any element:
//! [`ExtendedWeylElement::translation_coords`] recovers `xi` and
//! [`ExtendedWeylElement::finite_word`] recovers `w_fin`. The translation
//! `t_xi` itself acts on a weight `lambda` of level `l` by
//!
//! ```text
//! t_xi(lambda) = lambda + l nu(xi) - (<xi, lambda> + (xi, xi) l / 2) delta
//! ```
//!
//! which on level-zero weights collapses to
//! `lambda - <xi, lambda> delta`. [`factor_translation`] produces the
//! `tau * w` form of `t_xi` for dominant `xi`, with `w` reduced.

use std::fmt;

use num::BigRational;
use num_traits::Zero;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::cartan::{
    bilinear_form, AffineCartanDatum, CoweightVector, RootVector, TypeLabel, WeightVector,
};
use crate::error::{QError, QResult};

use super::automorphism::DiagramAutomorphism;
use super::word::WeylWord;

// ---- Translation action ----

/// Applies the lattice translation `t_xi` to a weight.
///
/// Requires `xi` in the span of the simple coroots (zero `d` component).
/// The formula is exact on every level; on level-zero weights it reduces
/// to `lambda - <xi, lambda> delta`.
pub fn translation_weight_action(
    datum: &AffineCartanDatum,
    xi: &CoweightVector,
    lambda: &WeightVector,
) -> QResult<WeightVector> {
    datum.check_same(xi.type_label(), "translation_weight_action")?;
    datum.check_same(lambda.type_label(), "translation_weight_action")?;
    if !xi.d_coeff().is_zero() {
        return Err(QError::InvalidArgument(
            "translation_weight_action: xi must have no d component".to_string(),
        ));
    }
    let nu = xi.nu(datum)?;
    let norm = bilinear_form(datum, &nu, &nu)?;
    let pair = xi.pair_weight(lambda)?;
    let level = lambda.level(datum);
    let half = BigRational::new(1.into(), 2.into());
    let shift = &pair + half * &norm * &level;
    let translated = lambda + &nu.scale(&level);
    Ok(&translated - &WeightVector::null_root(datum).scale(&shift))
}

// ---- Extended elements ----

/// An element of the extended affine Weyl group in the form `tau * w`.
///
/// Equality compares the action on the affine root lattice, which is
/// faithful, so two elements with different presentations of the same
/// group element compare equal.
#[derive(Debug, Clone)]
pub struct ExtendedWeylElement {
    label: TypeLabel,
    tau: DiagramAutomorphism,
    word: WeylWord,
    /// Images of the simple roots `alpha_0, ..., alpha_n` under the
    /// element; this matrix is the canonical form used for equality.
    root_images: Vec<RootVector>,
}

impl ExtendedWeylElement {
    /// The identity element.
    pub fn identity(datum: &AffineCartanDatum) -> Self {
        ExtendedWeylElement {
            label: datum.label(),
            tau: DiagramAutomorphism::identity(datum),
            word: WeylWord::identity(datum),
            root_images: datum
                .affine_indices()
                .map(|j| RootVector::simple(datum, j))
                .collect(),
        }
    }

    /// Builds `tau * w` from its two factors.
    pub fn new(
        datum: &AffineCartanDatum,
        tau: DiagramAutomorphism,
        word: WeylWord,
    ) -> QResult<Self> {
        datum.check_same(tau.type_label(), "ExtendedWeylElement::new")?;
        datum.check_same(word.type_label(), "ExtendedWeylElement::new")?;
        let mut root_images = Vec::with_capacity(datum.num_nodes());
        for j in datum.affine_indices() {
            let via_word = word.act_root(datum, &RootVector::simple(datum, j))?;
            root_images.push(tau.act_root(datum, &via_word)?);
        }
        Ok(ExtendedWeylElement {
            label: datum.label(),
            tau,
            word,
            root_images,
        })
    }

    /// Wraps a plain word (identity automorphism).
    pub fn from_word(datum: &AffineCartanDatum, word: WeylWord) -> QResult<Self> {
        ExtendedWeylElement::new(datum, DiagramAutomorphism::identity(datum), word)
    }

    /// Wraps a plain automorphism (empty word).
    pub fn from_automorphism(
        datum: &AffineCartanDatum,
        tau: DiagramAutomorphism,
    ) -> QResult<Self> {
        ExtendedWeylElement::new(datum, tau, WeylWord::identity(datum))
    }

    pub fn type_label(&self) -> TypeLabel {
        self.label
    }

    /// The automorphism factor.
    pub fn automorphism(&self) -> &DiagramAutomorphism {
        &self.tau
    }

    /// The word factor.
    pub fn word(&self) -> &WeylWord {
        &self.word
    }

    pub fn is_identity(&self) -> bool {
        self.root_images
            .iter()
            .enumerate()
            .all(|(j, img)| img.coords().iter().enumerate().all(|(k, &c)| {
                c == i64::from(k == j)
            }))
    }

    /// Acts on a root-lattice vector, linearly through the stored images.
    pub fn act_root(&self, datum: &AffineCartanDatum, v: &RootVector) -> QResult<RootVector> {
        datum.check_same(self.label, "ExtendedWeylElement::act_root")?;
        datum.check_same(v.type_label(), "ExtendedWeylElement::act_root")?;
        let mut out = RootVector::zero(datum);
        for (j, &c) in v.coords().iter().enumerate() {
            if c != 0 {
                out = &out + &self.root_images[j].scale(c);
            }
        }
        Ok(out)
    }

    /// Acts on a weight: the word first, then the automorphism.
    pub fn act_weight(
        &self,
        datum: &AffineCartanDatum,
        lambda: &WeightVector,
    ) -> QResult<WeightVector> {
        datum.check_same(self.label, "ExtendedWeylElement::act_weight")?;
        let via_word = self.word.act_weight(datum, lambda)?;
        self.tau.act_weight(datum, &via_word)
    }

    /// Group multiplication: `(tau1, w1) (tau2, w2) =
    /// (tau1 tau2, tau2^{-1}(w1) concat w2)`.
    pub fn mult(&self, datum: &AffineCartanDatum, rhs: &ExtendedWeylElement) -> QResult<Self> {
        datum.check_same(self.label, "ExtendedWeylElement::mult")?;
        datum.check_same(rhs.label, "ExtendedWeylElement::mult")?;
        let tau = self.tau.compose(&rhs.tau);
        let tau2_inv = rhs.tau.inverse();
        let mapped: Vec<usize> = self
            .word
            .indices()
            .iter()
            .map(|&i| tau2_inv.image(i))
            .collect();
        let word = WeylWord::new(datum, mapped)?.concat(&rhs.word);
        ExtendedWeylElement::new(datum, tau, word)
    }

    /// The group inverse `(tau, w)^{-1} = (tau^{-1}, tau(w^{-1}))`.
    pub fn inverse(&self, datum: &AffineCartanDatum) -> QResult<Self> {
        datum.check_same(self.label, "ExtendedWeylElement::inverse")?;
        let mapped: Vec<usize> = self
            .word
            .inverse()
            .indices()
            .iter()
            .map(|&i| self.tau.image(i))
            .collect();
        let word = WeylWord::new(datum, mapped)?;
        ExtendedWeylElement::new(datum, self.tau.inverse(), word)
    }

    /// The coordinates `<xi, alpha_j>` (j = 1, ..., n) of the translation
    /// part in the factorization `w_fin * t_xi`.
    pub fn translation_coords(&self, datum: &AffineCartanDatum) -> QResult<Vec<i64>> {
        datum.check_same(self.label, "ExtendedWeylElement::translation_coords")?;
        Ok((1..=datum.finite_rank())
            .map(|j| -self.root_images[j].delta_degree())
            .collect())
    }

    /// The translation part as a coweight.
    pub fn translation_part(&self, datum: &AffineCartanDatum) -> QResult<CoweightVector> {
        let coords = self.translation_coords(datum)?;
        CoweightVector::from_fundamental_coords(datum, &coords)
    }

    /// A reduced word for the finite factor in `w_fin * t_xi`, recovered by
    /// peeling descents off the finite root-lattice action.
    pub fn finite_word(&self, datum: &AffineCartanDatum) -> QResult<WeylWord> {
        datum.check_same(self.label, "ExtendedWeylElement::finite_word")?;
        let n = datum.finite_rank();
        // images[j - 1] = w_fin(alpha_j) in finite simple-root coordinates.
        let mut images: Vec<Vec<i64>> = (1..=n)
            .map(|j| self.root_images[j].finite_part(datum))
            .collect();
        let mut peeled: Vec<usize> = Vec::new();
        let budget = datum.finite_positive_roots().len() + 1;
        for _ in 0..=budget {
            if images
                .iter()
                .enumerate()
                .all(|(k, img)| img.iter().enumerate().all(|(l, &c)| c == i64::from(l == k)))
            {
                peeled.reverse();
                return WeylWord::new(datum, peeled);
            }
            let descent = (1..=n).find(|&i| {
                images[i - 1].iter().all(|&c| c <= 0)
                    && images[i - 1].iter().any(|&c| c != 0)
            });
            let i = descent.ok_or_else(|| {
                QError::IdentityFailure(format!(
                    "ExtendedWeylElement::finite_word: the finite action of this {} element \
                     has no descent yet is not the identity",
                    self.label
                ))
            })?;
            let pivot = images[i - 1].clone();
            for (k, img) in images.iter_mut().enumerate() {
                let a = datum.cartan(i, k + 1);
                if a != 0 {
                    for (c, &p) in img.iter_mut().zip(pivot.iter()) {
                        *c -= a * p;
                    }
                }
            }
            peeled.push(i);
        }
        Err(QError::IdentityFailure(format!(
            "ExtendedWeylElement::finite_word: descent peeling did not terminate \
             within {budget} steps for this {} element",
            self.label
        )))
    }

    /// Acts on a weight through the second normal form `w_fin * t_xi`
    /// instead of the stored `tau * w` pair. Both give the same map; this
    /// entry point exists so the agreement can be tested.
    pub fn act_weight_via_translation(
        &self,
        datum: &AffineCartanDatum,
        lambda: &WeightVector,
    ) -> QResult<WeightVector> {
        let xi = self.translation_part(datum)?;
        let translated = translation_weight_action(datum, &xi, lambda)?;
        self.finite_word(datum)?.act_weight(datum, &translated)
    }
}

impl PartialEq for ExtendedWeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.label == other.label && self.root_images == other.root_images
    }
}

impl Eq for ExtendedWeylElement {}

impl fmt::Display for ExtendedWeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tau.is_identity() && self.word.is_empty() {
            return write!(f, "id");
        }
        if self.tau.is_identity() {
            return write!(f, "{}", self.word);
        }
        if self.word.is_empty() {
            return write!(f, "{}", self.tau);
        }
        write!(f, "{} * {}", self.tau, self.word)
    }
}

impl Serialize for ExtendedWeylElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ExtendedWeylElement", 4)?;
        s.serialize_field("type", &self.label.family.to_string())?;
        s.serialize_field("rank", &self.label.rank)?;
        s.serialize_field("tau", &self.tau)?;
        s.serialize_field("word", &self.word.indices())?;
        s.end()
    }
}

// ---- Translation factorization ----

/// Factors the translation by a dominant integral coweight `xi` into the
/// normal form `tau * w` with `w` reduced.
///
/// The root-lattice action `alpha mapsto alpha - <xi, alpha> delta` is
/// peeled by right descents until what remains permutes the simple roots;
/// that permutation must be a diagram automorphism, and the result is
/// checked against the translation formula on every fundamental weight,
/// every simple root, and `delta` before it is returned.
pub fn factor_translation(
    datum: &AffineCartanDatum,
    xi: &CoweightVector,
) -> QResult<ExtendedWeylElement> {
    datum.check_same(xi.type_label(), "factor_translation")?;
    if !xi.d_coeff().is_zero() {
        return Err(QError::InvalidArgument(
            "factor_translation: xi must have no d component".to_string(),
        ));
    }
    let n = datum.finite_rank();
    let mut pairings: Vec<i64> = Vec::with_capacity(n + 1);
    pairings.push(0);
    for j in 1..=n {
        let p = xi.pair_root(datum, &RootVector::simple(datum, j))?;
        if !p.is_integer() {
            return Err(QError::InvalidArgument(format!(
                "factor_translation: <xi, alpha_{j}> = {p} is not an integer"
            )));
        }
        let value = p.to_integer();
        let value_i64 = i64::try_from(value.clone()).map_err(|_| {
            QError::InvalidArgument(format!(
                "factor_translation: <xi, alpha_{j}> = {value} is out of range"
            ))
        })?;
        if value_i64 < 0 {
            return Err(QError::InvalidArgument(format!(
                "factor_translation: xi is not dominant, <xi, alpha_{j}> = {value_i64}"
            )));
        }
        pairings.push(value_i64);
    }
    // <xi, alpha_0> = -<xi, theta>.
    let theta = datum.highest_root();
    pairings[0] = -(1..=n)
        .map(|j| theta[j - 1] * pairings[j])
        .sum::<i64>();

    // Images of the simple roots under t_xi.
    let delta = RootVector::null_root(datum);
    let mut images: Vec<RootVector> = datum
        .affine_indices()
        .map(|j| &RootVector::simple(datum, j) - &delta.scale(pairings[j]))
        .collect();

    // ell(t_xi) = sum over positive roots beta of <xi, beta>.
    let mut budget: i64 = 0;
    for beta in datum.finite_positive_roots() {
        budget += (1..=n).map(|j| beta[j - 1] * pairings[j]).sum::<i64>();
    }

    let mut peeled: Vec<usize> = Vec::new();
    loop {
        // Done when every image is again a simple root.
        let mut perm: Vec<usize> = Vec::with_capacity(n + 1);
        let mut is_perm = true;
        'outer: for img in &images {
            for k in datum.affine_indices() {
                if *img == RootVector::simple(datum, k) {
                    perm.push(k);
                    continue 'outer;
                }
            }
            is_perm = false;
            break;
        }
        if is_perm {
            let tau = DiagramAutomorphism::new(datum, perm).map_err(|e| {
                QError::IdentityFailure(format!(
                    "factor_translation: descent peeling ended in a node permutation \
                     that is not a diagram automorphism: {e}"
                ))
            })?;
            peeled.reverse();
            let word = WeylWord::new(datum, peeled)?;
            let element = ExtendedWeylElement::new(datum, tau, word)?;
            verify_translation_factorization(datum, xi, &element)?;
            return Ok(element);
        }
        if peeled.len() as i64 > budget {
            return Err(QError::IdentityFailure(format!(
                "factor_translation: descent peeling exceeded the length bound {budget}"
            )));
        }
        let descent = datum.affine_indices().find(|&i| {
            images[i].coords().iter().all(|&c| c <= 0)
                && images[i].coords().iter().any(|&c| c != 0)
        });
        let i = descent.ok_or_else(|| {
            QError::IdentityFailure(
                "factor_translation: no descent found before reaching an automorphism"
                    .to_string(),
            )
        })?;
        let pivot = images[i].clone();
        for (k, img) in images.iter_mut().enumerate() {
            let a = datum.cartan(i, k);
            if a != 0 {
                *img = &*img - &pivot.scale(a);
            }
        }
        peeled.push(i);
    }
}

/// Checks a claimed factorization of `t_xi` on every fundamental weight,
/// every simple root, and `delta`.
fn verify_translation_factorization(
    datum: &AffineCartanDatum,
    xi: &CoweightVector,
    element: &ExtendedWeylElement,
) -> QResult<()> {
    let mut probes: Vec<WeightVector> = Vec::new();
    for i in datum.affine_indices() {
        probes.push(WeightVector::fundamental(datum, i));
        probes.push(RootVector::simple(datum, i).to_weight(datum)?);
    }
    probes.push(WeightVector::null_root(datum));
    for lambda in &probes {
        let direct = translation_weight_action(datum, xi, lambda)?;
        let via_element = element.act_weight(datum, lambda)?;
        if direct != via_element {
            return Err(QError::IdentityFailure(format!(
                "factor_translation: the factored element sends {lambda} to \
                 {via_element}, but the translation sends it to {direct}"
            )));
        }
    }
    Ok(())
}

// ---- Tests ----
