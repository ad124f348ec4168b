//! Formal sums of tensor nodes with exact `q`-rational coefficients.
//!
//! A [`ModuleVector`] is the basic value all module operators act on: a
//! finite map from [`TensorNode`] basis ids to [`RatQ`] coefficients with
//! zero coefficients stripped eagerly, so that equality of vectors is
//! equality of the maps. Weight bookkeeping lives in the free functions
//! [`desk_weight_key`], [`homogeneous_components`], and
//! [`homogeneous_weight`]; the keys are desk labels (classical pairings
//! and raw degrees of the node data), which identify weight spaces on
//! both the plain and the dualized module.

use crate::cartan::AffineCartanDatum;
use crate::crystal::{node_degree, CrystalNode, TensorNode};
use crate::error::{QError, QResult};
use crate::qsymbolic::RatQ;
use num::BigRational;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

// ---- module vectors ----

/// A finite formal sum of tensor nodes over the rational functions in `q`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ModuleVector {
    terms: BTreeMap<TensorNode, RatQ>,
}

impl ModuleVector {
    pub fn zero() -> Self {
        ModuleVector { terms: BTreeMap::new() }
    }

    /// The basis vector of a single node, with coefficient one.
    pub fn from_basis(node: TensorNode) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(node, RatQ::one());
        ModuleVector { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (TensorNode, RatQ)>>(items: I) -> Self {
        let mut v = ModuleVector::zero();
        for (node, coeff) in items {
            v.add_term(node, coeff);
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in basis-node order.
    pub fn terms(&self) -> impl Iterator<Item = (&TensorNode, &RatQ)> {
        self.terms.iter()
    }

    /// The support of the vector, in basis-node order.
    pub fn support(&self) -> impl Iterator<Item = &TensorNode> {
        self.terms.keys()
    }

    /// The first node of the support, the pivot position for elimination.
    pub fn leading_node(&self) -> Option<&TensorNode> {
        self.terms.keys().next()
    }

    pub fn coeff(&self, node: &TensorNode) -> RatQ {
        self.terms.get(node).cloned().unwrap_or_else(RatQ::zero)
    }

    /// Adds `coeff * node` in place, stripping the term if it cancels.
    pub fn add_term(&mut self, node: TensorNode, coeff: RatQ) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(node) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = &*e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    e.insert(sum);
                }
            }
        }
    }

    pub fn scale(&self, factor: &RatQ) -> Self {
        if factor.is_zero() {
            return ModuleVector::zero();
        }
        ModuleVector {
            terms: self.terms.iter().map(|(n, c)| (n.clone(), c * factor)).collect(),
        }
    }

    /// Applies `q -> q^{-1}` to every coefficient, leaving the nodes fixed.
    pub fn bar_coefficients(&self) -> Self {
        ModuleVector {
            terms: self.terms.iter().map(|(n, c)| (n.clone(), c.bar())).collect(),
        }
    }

    /// Extends a map defined on basis nodes linearly.
    pub fn apply_linear<F>(&self, mut op: F) -> QResult<ModuleVector>
    where
        F: FnMut(&TensorNode) -> QResult<ModuleVector>,
    {
        let mut out = ModuleVector::zero();
        for (node, coeff) in &self.terms {
            let image = op(node)?;
            for (n, c) in image.terms {
                out.add_term(n, &c * coeff);
            }
        }
        Ok(out)
    }

    /// Evaluates every coefficient at `q = 0`; `None` if any coefficient
    /// has a pole there.
    pub fn at_q_zero(&self) -> Option<BTreeMap<TensorNode, BigRational>> {
        let mut out = BTreeMap::new();
        for (node, coeff) in &self.terms {
            let value = coeff.value_at_zero()?;
            if !num_traits::Zero::is_zero(&value) {
                out.insert(node.clone(), value);
            }
        }
        Some(out)
    }
}

impl Add for &ModuleVector {
    type Output = ModuleVector;
    fn add(self, rhs: &ModuleVector) -> ModuleVector {
        let mut out = self.clone();
        for (node, coeff) in &rhs.terms {
            out.add_term(node.clone(), coeff.clone());
        }
        out
    }
}

impl Add for ModuleVector {
    type Output = ModuleVector;
    fn add(self, rhs: ModuleVector) -> ModuleVector {
        &self + &rhs
    }
}

impl Sub for &ModuleVector {
    type Output = ModuleVector;
    fn sub(self, rhs: &ModuleVector) -> ModuleVector {
        let mut out = self.clone();
        for (node, coeff) in &rhs.terms {
            out.add_term(node.clone(), -coeff);
        }
        out
    }
}

impl Sub for ModuleVector {
    type Output = ModuleVector;
    fn sub(self, rhs: ModuleVector) -> ModuleVector {
        &self - &rhs
    }
}

impl Neg for &ModuleVector {
    type Output = ModuleVector;
    fn neg(self) -> ModuleVector {
        ModuleVector {
            terms: self.terms.iter().map(|(n, c)| (n.clone(), -c)).collect(),
        }
    }
}

impl Neg for ModuleVector {
    type Output = ModuleVector;
    fn neg(self) -> ModuleVector {
        -&self
    }
}

impl fmt::Display for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (node, coeff)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({coeff})*[{node}]")?;
        }
        Ok(())
    }
}

impl Serialize for ModuleVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            basis: &'a TensorNode,
            coeff: String,
        }
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (node, coeff) in &self.terms {
            seq.serialize_element(&Term { basis: node, coeff: coeff.to_string() })?;
        }
        seq.end()
    }
}

// ---- weight bookkeeping ----

/// A desk weight key: the classical pairings `<h_1, wt>, ..., <h_n, wt>`
/// of the node labels together with their total degree.
pub type WeightKey = (Vec<i64>, i64);

/// The desk weight key of a single node.
pub fn desk_weight_key(datum: &AffineCartanDatum, node: &TensorNode) -> QResult<WeightKey> {
    let mut classical = Vec::with_capacity(datum.label().rank);
    for i in datum.finite_indices() {
        classical.push(node.i_weight(datum, i)?);
    }
    Ok((classical, node_degree(datum, node)?))
}

/// Splits a vector into its weight-homogeneous parts, keyed by desk weight.
pub fn homogeneous_components(
    datum: &AffineCartanDatum,
    v: &ModuleVector,
) -> QResult<BTreeMap<WeightKey, ModuleVector>> {
    let mut out: BTreeMap<WeightKey, ModuleVector> = BTreeMap::new();
    for (node, coeff) in v.terms() {
        let key = desk_weight_key(datum, node)?;
        out.entry(key).or_default().add_term(node.clone(), coeff.clone());
    }
    Ok(out)
}

/// The weight key of a homogeneous vector: `None` for zero, an error when
/// the support mixes weights.
pub fn homogeneous_weight(
    datum: &AffineCartanDatum,
    v: &ModuleVector,
) -> QResult<Option<WeightKey>> {
    let mut found: Option<WeightKey> = None;
    for node in v.support() {
        let key = desk_weight_key(datum, node)?;
        match &found {
            None => found = Some(key),
            Some(prev) if *prev == key => {}
            Some(prev) => {
                return Err(QError::InvalidArgument(format!(
                    "homogeneous_weight: support mixes weights {prev:?} and {key:?}"
                )))
            }
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::FamilyADE;

    fn a1() -> AffineCartanDatum {
        AffineCartanDatum::new(FamilyADE::A, 1).unwrap()
    }

    fn node(datum: &AffineCartanDatum, letters: &[usize], degree: i64) -> TensorNode {
        let f = crate::crystal::LevelZeroFundNode::new(datum, letters.to_vec(), degree).unwrap();
        TensorNode::new(datum, vec![f]).unwrap()
    }

    #[test]
    fn zero_terms_are_stripped() {
        let d = a1();
        let b = node(&d, &[1], 0);
        let mut v = ModuleVector::from_basis(b.clone());
        v.add_term(b.clone(), -RatQ::one());
        assert!(v.is_zero());
        assert_eq!(v, ModuleVector::zero());
        assert!(ModuleVector::from_basis(b.clone())
            .scale(&RatQ::zero())
            .is_zero());
    }

    #[test]
    fn arithmetic_is_exact() {
        let d = a1();
        let b1 = node(&d, &[1], 0);
        let b2 = node(&d, &[2], 0);
        let v = ModuleVector::from_terms(vec![
            (b1.clone(), RatQ::q_pow(1)),
            (b2.clone(), RatQ::from_int(2)),
        ]);
        let w = ModuleVector::from_terms(vec![(b1.clone(), RatQ::q_pow(1))]);
        let diff = &v - &w;
        assert_eq!(diff.coeff(&b1), RatQ::zero());
        assert_eq!(diff.coeff(&b2), RatQ::from_int(2));
        assert_eq!(&diff + &w, v);
        assert_eq!(-&diff, diff.scale(&RatQ::from_int(-1)));
    }

    #[test]
    fn bar_conjugates_coefficients_only() {
        let d = a1();
        let b = node(&d, &[2], -1);
        let v = ModuleVector::from_terms(vec![(b.clone(), RatQ::q_pow(3))]);
        let barred = v.bar_coefficients();
        assert_eq!(barred.coeff(&b), RatQ::q_pow(-3));
        assert_eq!(barred.bar_coefficients(), v);
    }

    #[test]
    fn weight_keys_split_components() {
        let d = a1();
        let b1 = node(&d, &[1], 0);
        let b2 = node(&d, &[2], 0);
        let b3 = node(&d, &[1], -1);
        assert_eq!(desk_weight_key(&d, &b1).unwrap(), (vec![1], 0));
        assert_eq!(desk_weight_key(&d, &b2).unwrap(), (vec![-1], 0));
        let v = ModuleVector::from_terms(vec![
            (b1.clone(), RatQ::one()),
            (b2.clone(), RatQ::one()),
            (b3.clone(), RatQ::one()),
        ]);
        let parts = homogeneous_components(&d, &v).unwrap();
        assert_eq!(parts.len(), 3);
        assert!(homogeneous_weight(&d, &v).is_err());
        assert_eq!(homogeneous_weight(&d, &ModuleVector::zero()).unwrap(), None);
        assert_eq!(
            homogeneous_weight(&d, &ModuleVector::from_basis(b3)).unwrap(),
            Some((vec![1], -1))
        );
    }

    #[test]
    fn q_zero_evaluation_detects_poles() {
        let d = a1();
        let b = node(&d, &[1], 0);
        let regular = ModuleVector::from_terms(vec![(b.clone(), RatQ::q_pow(2))]);
        assert!(regular.at_q_zero().unwrap().is_empty());
        let pole = ModuleVector::from_terms(vec![(b, RatQ::q_pow(-1))]);
        assert!(pole.at_q_zero().is_none());
    }

    #[test]
    fn display_and_serialization_are_readable() {
        let d = a1();
        let b = node(&d, &[1], 2);
        let v = ModuleVector::from_terms(vec![(b, -RatQ::q_pow(1))]);
        assert_eq!(v.to_string(), "(-q)*[{1}@2]");
        assert_eq!(ModuleVector::zero().to_string(), "0");
        let json = serde_json::to_string(&v).unwrap();
        assert!(json.contains("\"coeff\":\"-q\""), "json was {json}");
    }
}
