//! Nodes of the level-zero fundamental crystals in type A.
//!
//! For the type `A_n` datum the crystal of the `i`-th level-zero
//! fundamental module is realized on pairs `(S, m)` of an `i`-element
//! column `S` in the letters `1..=n+1` and an integer degree `m`. The
//! classical operators exchange adjacent letters; the affine pair wraps the
//! top letter around to the bottom and steps the degree, so the null-root
//! direction is threaded through the `0`-arrows. The degree-shift
//! [`LevelZeroFundNode::z_shift`] is a crystal automorphism of weight
//! `delta`, which the tests check directly.

use crate::cartan::{AffineCartanDatum, FamilyADE, WeightVector};
use crate::crystal::node::CrystalNode;
use crate::error::{QError, QResult};
use num::BigRational;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::fmt;

// ---- column nodes ----

/// A node `(S, m)` of a type A level-zero fundamental crystal: a sorted
/// column of distinct letters and a degree.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct LevelZeroFundNode {
    rank: usize,
    column: Vec<usize>,
    degree: i64,
}

impl LevelZeroFundNode {
    /// Builds a node from a set of letters in `1..=rank+1` and a degree.
    /// Only type A data carry these crystals.
    pub fn new(datum: &AffineCartanDatum, mut column: Vec<usize>, degree: i64) -> QResult<Self> {
        if datum.label().family != FamilyADE::A {
            return Err(QError::InvalidArgument(format!(
                "LevelZeroFundNode::new: column crystals exist only for type A, got {}",
                datum.label()
            )));
        }
        let rank = datum.label().rank;
        column.sort_unstable();
        column.dedup();
        if column.is_empty() || column.len() > rank {
            return Err(QError::InvalidArgument(format!(
                "LevelZeroFundNode::new: column size must be between 1 and {rank}, got {}",
                column.len()
            )));
        }
        if column[0] < 1 || column[column.len() - 1] > rank + 1 {
            return Err(QError::InvalidArgument(format!(
                "LevelZeroFundNode::new: letters must lie in 1..={}",
                rank + 1
            )));
        }
        Ok(LevelZeroFundNode { rank, column, degree })
    }

    /// The distinguished node `u` of the `color`-th fundamental crystal:
    /// the column `{1, ..., color}` in degree zero.
    pub fn fundamental(datum: &AffineCartanDatum, color: usize) -> QResult<Self> {
        let rank = datum.label().rank;
        if color < 1 || color > rank {
            return Err(QError::InvalidArgument(format!(
                "LevelZeroFundNode::fundamental: color must lie in 1..={rank}, got {color}"
            )));
        }
        LevelZeroFundNode::new(datum, (1..=color).collect(), 0)
    }

    /// Which fundamental crystal the node lives in.
    pub fn color(&self) -> usize {
        self.column.len()
    }

    pub fn letters(&self) -> &[usize] {
        &self.column
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    fn contains(&self, letter: usize) -> bool {
        self.column.binary_search(&letter).is_ok()
    }

    /// The degree-shift automorphism of weight `delta`, iterated `amount`
    /// times (negative amounts shift down).
    pub fn z_shift(&self, amount: i64) -> Self {
        LevelZeroFundNode {
            rank: self.rank,
            column: self.column.clone(),
            degree: self.degree + amount,
        }
    }

    fn with_swapped(&self, remove: usize, insert: usize, degree: i64) -> Self {
        let mut column: Vec<usize> =
            self.column.iter().copied().filter(|&a| a != remove).collect();
        column.push(insert);
        column.sort_unstable();
        LevelZeroFundNode { rank: self.rank, column, degree }
    }

    fn check_datum(&self, datum: &AffineCartanDatum, what: &str) -> QResult<()> {
        if datum.label().family != FamilyADE::A || datum.label().rank != self.rank {
            return Err(QError::DatumMismatch(format!(
                "{what}: node of rank {} used with datum {}",
                self.rank,
                datum.label()
            )));
        }
        Ok(())
    }
}

impl CrystalNode for LevelZeroFundNode {
    fn rank(&self) -> usize {
        self.rank
    }

    fn weight(&self, datum: &AffineCartanDatum) -> QResult<WeightVector> {
        self.check_datum(datum, "LevelZeroFundNode::weight")?;
        let n = self.rank;
        let ind = |b: bool| if b { 1i64 } else { 0 };
        let mut lambda = Vec::with_capacity(n + 1);
        lambda.push(BigRational::from_integer(
            (ind(self.contains(n + 1)) - ind(self.contains(1))).into(),
        ));
        for j in 1..=n {
            lambda.push(BigRational::from_integer(
                (ind(self.contains(j)) - ind(self.contains(j + 1))).into(),
            ));
        }
        WeightVector::from_coeffs(datum, lambda, BigRational::from_integer(self.degree.into()))
    }

    fn e_step(&self, datum: &AffineCartanDatum, i: usize) -> QResult<Option<Self>> {
        self.check_datum(datum, "LevelZeroFundNode::e_step")?;
        let n = self.rank;
        if i == 0 {
            // The affine raise moves the bottom letter to the top and
            // steps the degree up.
            if self.contains(1) && !self.contains(n + 1) {
                return Ok(Some(self.with_swapped(1, n + 1, self.degree + 1)));
            }
            return Ok(None);
        }
        if i > n {
            return Err(QError::InvalidArgument(format!(
                "LevelZeroFundNode::e_step: color {i} out of range for rank {n}"
            )));
        }
        if self.contains(i + 1) && !self.contains(i) {
            return Ok(Some(self.with_swapped(i + 1, i, self.degree)));
        }
        Ok(None)
    }

    fn f_step(&self, datum: &AffineCartanDatum, i: usize) -> QResult<Option<Self>> {
        self.check_datum(datum, "LevelZeroFundNode::f_step")?;
        let n = self.rank;
        if i == 0 {
            // The affine lowering wraps the top letter around to the
            // bottom and steps the degree down.
            if self.contains(n + 1) && !self.contains(1) {
                return Ok(Some(self.with_swapped(n + 1, 1, self.degree - 1)));
            }
            return Ok(None);
        }
        if i > n {
            return Err(QError::InvalidArgument(format!(
                "LevelZeroFundNode::f_step: color {i} out of range for rank {n}"
            )));
        }
        if self.contains(i) && !self.contains(i + 1) {
            return Ok(Some(self.with_swapped(i, i + 1, self.degree)));
        }
        Ok(None)
    }
}

impl fmt::Display for LevelZeroFundNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, letter) in self.column.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{letter}")?;
        }
        write!(f, "}}@{}", self.degree)
    }
}

impl Serialize for LevelZeroFundNode {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("LevelZeroFundNode", 3)?;
        s.serialize_field("rank", &self.rank)?;
        s.serialize_field("column", &self.column)?;
        s.serialize_field("degree", &self.degree)?;
        s.end()
    }
}

/// All columns of a given color, at one degree. The classical crystal of
/// the `color`-th fundamental module is exactly this set.
pub fn all_columns(
    datum: &AffineCartanDatum,
    color: usize,
    degree: i64,
) -> QResult<Vec<LevelZeroFundNode>> {
    let rank = datum.label().rank;
    if color < 1 || color > rank {
        return Err(QError::InvalidArgument(format!(
            "all_columns: color must lie in 1..={rank}, got {color}"
        )));
    }
    let mut out = Vec::new();
    let mut stack = vec![(Vec::<usize>::new(), 1usize)];
    while let Some((prefix, next)) = stack.pop() {
        if prefix.len() == color {
            out.push(LevelZeroFundNode::new(datum, prefix, degree)?);
            continue;
        }
        for letter in next..=(rank + 2 - (color - prefix.len())) {
            let mut with = prefix.clone();
            with.push(letter);
            stack.push((with, letter + 1));
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::RootVector;
    use crate::crystal::node::verify_node_invariants;
    use num_traits::Zero;

    fn a1() -> AffineCartanDatum {
        AffineCartanDatum::new(FamilyADE::A, 1).unwrap()
    }

    fn a3() -> AffineCartanDatum {
        AffineCartanDatum::new(FamilyADE::A, 3).unwrap()
    }

    #[test]
    fn fundamental_node_has_the_level_zero_fundamental_weight() {
        let d = a3();
        for color in 1..=3 {
            let node = LevelZeroFundNode::fundamental(&d, color).unwrap();
            assert_eq!(
                node.weight(&d).unwrap(),
                WeightVector::level_zero_fundamental(&d, color)
            );
        }
    }

    #[test]
    fn weights_are_level_zero() {
        let d = a3();
        for color in 1..=3 {
            for node in all_columns(&d, color, -2).unwrap() {
                let wt = node.weight(&d).unwrap();
                assert!(wt.level(&d).is_zero(), "nonzero level on {node}");
            }
        }
    }

    #[test]
    fn affine_pair_wraps_the_column_and_steps_the_degree() {
        let d = a1();
        let plus = LevelZeroFundNode::new(&d, vec![1], 0).unwrap();
        let minus = LevelZeroFundNode::new(&d, vec![2], 0).unwrap();
        // Lowering by 0 wraps {2} down to {1} one degree lower.
        assert_eq!(
            minus.f_step(&d, 0).unwrap().unwrap(),
            LevelZeroFundNode::new(&d, vec![1], -1).unwrap()
        );
        assert_eq!(minus.e_step(&d, 0).unwrap(), None);
        // Raising by 0 wraps {1} up to {2} one degree higher.
        assert_eq!(
            plus.e_step(&d, 0).unwrap().unwrap(),
            LevelZeroFundNode::new(&d, vec![2], 1).unwrap()
        );
        assert_eq!(plus.f_step(&d, 0).unwrap(), None);
    }

    #[test]
    fn operator_weight_shifts_match_the_simple_roots() {
        let d = a3();
        for color in 1..=3 {
            for node in all_columns(&d, color, 0).unwrap() {
                for i in d.affine_indices() {
                    if let Some(lower) = node.f_step(&d, i).unwrap() {
                        let alpha = RootVector::simple(&d, i).to_weight(&d).unwrap();
                        assert_eq!(
                            lower.weight(&d).unwrap(),
                            &node.weight(&d).unwrap() - &alpha,
                            "f_{i} weight shift wrong on {node}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn node_invariants_hold_on_all_columns() {
        let d = a3();
        for color in 1..=3 {
            for node in all_columns(&d, color, 1).unwrap() {
                verify_node_invariants(&d, &node).unwrap();
            }
        }
    }

    #[test]
    fn degree_shift_commutes_with_all_operators() {
        let d = a3();
        for color in 1..=3 {
            for node in all_columns(&d, color, 0).unwrap() {
                for i in d.affine_indices() {
                    let f_then_shift =
                        node.f_step(&d, i).unwrap().map(|b| b.z_shift(1));
                    let shift_then_f = node.z_shift(1).f_step(&d, i).unwrap();
                    assert_eq!(f_then_shift, shift_then_f, "f_{i} vs shift on {node}");
                    let e_then_shift =
                        node.e_step(&d, i).unwrap().map(|b| b.z_shift(1));
                    let shift_then_e = node.z_shift(1).e_step(&d, i).unwrap();
                    assert_eq!(e_then_shift, shift_then_e, "e_{i} vs shift on {node}");
                }
            }
        }
    }

    #[test]
    fn degree_shift_has_weight_delta() {
        let d = a3();
        let node = LevelZeroFundNode::fundamental(&d, 2).unwrap();
        let delta = WeightVector::null_root(&d);
        assert_eq!(
            node.z_shift(1).weight(&d).unwrap(),
            &node.weight(&d).unwrap() + &delta
        );
    }

    #[test]
    fn strings_are_minuscule() {
        let d = a3();
        for color in 1..=3 {
            for node in all_columns(&d, color, 0).unwrap() {
                for i in d.affine_indices() {
                    assert!(node.epsilon(&d, i).unwrap() <= 1);
                    assert!(node.phi(&d, i).unwrap() <= 1);
                }
            }
        }
    }

    #[test]
    fn malformed_columns_are_rejected() {
        let d = a3();
        assert!(LevelZeroFundNode::new(&d, vec![], 0).is_err());
        assert!(LevelZeroFundNode::new(&d, vec![1, 2, 3, 4], 0).is_err());
        assert!(LevelZeroFundNode::new(&d, vec![5], 0).is_err());
        assert!(LevelZeroFundNode::new(&d, vec![0], 0).is_err());
        let d5 = AffineCartanDatum::new(FamilyADE::D, 5).unwrap();
        assert!(matches!(
            LevelZeroFundNode::new(&d5, vec![1], 0),
            Err(QError::InvalidArgument(_))
        ));
    }

    #[test]
    fn column_enumeration_counts_binomials() {
        let d = a3();
        assert_eq!(all_columns(&d, 1, 0).unwrap().len(), 4);
        assert_eq!(all_columns(&d, 2, 0).unwrap().len(), 6);
        assert_eq!(all_columns(&d, 3, 0).unwrap().len(), 4);
    }

    #[test]
    fn serialization_is_stable() {
        let d = a1();
        let node = LevelZeroFundNode::new(&d, vec![2], -1).unwrap();
        assert_eq!(
            serde_json::to_string(&node).unwrap(),
            r#"{"rank":1,"column":[2],"degree":-1}"#
        );
    }
}
