//! Words in the simple reflections and their exact actions.

use std::fmt;

use num::BigRational;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::cartan::{AffineCartanDatum, RootClass, RootVector, TypeLabel, WeightVector};
use crate::error::{QError, QResult};

/// Applies the simple reflection `s_i` to root-lattice coordinates in
/// place: only the `alpha_i` coordinate moves, by the coroot pairing.
pub(crate) fn reflect_root_coords(datum: &AffineCartanDatum, i: usize, coords: &mut [i64]) {
    let pairing: i64 = coords
        .iter()
        .enumerate()
        .map(|(j, &c)| datum.cartan(i, j) * c)
        .sum();
    coords[i] -= pairing;
}

/// Applies `s_i` to a weight: `lambda - <h_i, lambda> alpha_i`.
pub(crate) fn reflect_weight(
    datum: &AffineCartanDatum,
    i: usize,
    lambda: &WeightVector,
) -> WeightVector {
    let pairing = lambda.lambda_coeff(i).clone();
    if pairing == BigRational::from_integer(0.into()) {
        return lambda.clone();
    }
    let alpha_i = RootVector::simple(datum, i)
        .to_weight(datum)
        .expect("reflect_weight: same datum by construction");
    lambda - &alpha_i.scale(&pairing)
}

/// A word `(i_1, ..., i_m)` over the affine node set, standing for the
/// product `s_{i_1} s_{i_2} ... s_{i_m}`; the rightmost reflection acts
/// first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylWord {
    label: TypeLabel,
    indices: Vec<usize>,
}

impl WeylWord {
    /// The empty word (identity).
    pub fn identity(datum: &AffineCartanDatum) -> Self {
        WeylWord {
            label: datum.label(),
            indices: Vec::new(),
        }
    }

    /// Builds a word, validating every index against the node set.
    pub fn new(datum: &AffineCartanDatum, indices: Vec<usize>) -> QResult<Self> {
        for &i in &indices {
            if i >= datum.num_nodes() {
                return Err(QError::InvalidArgument(format!(
                    "WeylWord::new: index {i} outside the node set of {}",
                    datum.label()
                )));
            }
        }
        Ok(WeylWord {
            label: datum.label(),
            indices,
        })
    }

    pub fn type_label(&self) -> TypeLabel {
        self.label
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// The inverse word: indices reversed.
    pub fn inverse(&self) -> Self {
        WeylWord {
            label: self.label,
            indices: self.indices.iter().rev().copied().collect(),
        }
    }

    /// Concatenation `self * rhs` (self acts after rhs).
    pub fn concat(&self, rhs: &WeylWord) -> Self {
        assert_eq!(
            self.label, rhs.label,
            "WeylWord::concat: mismatched data {} and {}",
            self.label, rhs.label
        );
        let mut indices = self.indices.clone();
        indices.extend_from_slice(&rhs.indices);
        WeylWord {
            label: self.label,
            indices,
        }
    }

    /// Acts on a weight, rightmost reflection first.
    pub fn act_weight(
        &self,
        datum: &AffineCartanDatum,
        lambda: &WeightVector,
    ) -> QResult<WeightVector> {
        datum.check_same(self.label, "WeylWord::act_weight")?;
        datum.check_same(lambda.type_label(), "WeylWord::act_weight")?;
        let mut current = lambda.clone();
        for &i in self.indices.iter().rev() {
            current = reflect_weight(datum, i, &current);
        }
        Ok(current)
    }

    /// Acts on a root-lattice vector, rightmost reflection first.
    pub fn act_root(&self, datum: &AffineCartanDatum, v: &RootVector) -> QResult<RootVector> {
        datum.check_same(self.label, "WeylWord::act_root")?;
        datum.check_same(v.type_label(), "WeylWord::act_root")?;
        let mut coords = v.coords().to_vec();
        for &i in self.indices.iter().rev() {
            reflect_root_coords(datum, i, &mut coords);
        }
        RootVector::from_coords(datum, coords)
    }

    /// The inversion-set enumeration for `w = s_{i_1} ... s_{i_m}`: the
    /// list `s_{i_m} s_{i_{m-1}} ... s_{i_{k+1}}(alpha_{i_k})` for
    /// `k = m, m-1, ..., 1`. For a reduced word these are exactly the
    /// positive roots sent negative by `w`, each listed once; a repeat or
    /// a negative entry witnesses non-reducedness.
    pub fn inversion_list(&self, datum: &AffineCartanDatum) -> QResult<Vec<RootVector>> {
        datum.check_same(self.label, "WeylWord::inversion_list")?;
        let mut out = Vec::with_capacity(self.indices.len());
        // Walk k from m down to 1, extending the applied suffix as we go.
        let mut suffix: Vec<usize> = Vec::new();
        for &i in self.indices.iter().rev() {
            let mut coords = vec![0i64; datum.num_nodes()];
            coords[i] = 1;
            for &j in suffix.iter().rev() {
                reflect_root_coords(datum, j, &mut coords);
            }
            out.push(RootVector::from_coords(datum, coords)?);
            suffix.push(i);
        }
        out.reverse();
        Ok(out)
    }

    /// A word is reduced exactly when its inversion-set enumeration lists
    /// pairwise distinct positive roots.
    pub fn is_reduced(&self, datum: &AffineCartanDatum) -> QResult<bool> {
        let list = self.inversion_list(datum)?;
        let mut seen = std::collections::BTreeSet::new();
        for root in &list {
            if root.classify(datum)? != RootClass::RealPositive {
                return Ok(false);
            }
            if !seen.insert(root.coords().to_vec()) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.indices.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self.indices.iter().map(|i| format!("s{i}")).collect();
        write!(f, "{}", parts.join("."))
    }
}

impl Serialize for WeylWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("WeylWord", 3)?;
        s.serialize_field("type", &self.label.family.to_string())?;
        s.serialize_field("rank", &self.label.rank)?;
        s.serialize_field("word", &self.indices)?;
        s.end()
    }
}

// ---- tests ----

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::FamilyADE;
    use proptest::prelude::*;

    fn a1() -> AffineCartanDatum {
        AffineCartanDatum::new(FamilyADE::A, 1).unwrap()
    }

    fn a2() -> AffineCartanDatum {
        AffineCartanDatum::new(FamilyADE::A, 2).unwrap()
    }

    #[test]
    fn simple_reflection_moves_fundamental_weight() {
        let d = a1();
        let s0 = WeylWord::new(&d, vec![0]).unwrap();
        let lambda0 = WeightVector::fundamental(&d, 0);
        let alpha0 = RootVector::simple(&d, 0).to_weight(&d).unwrap();
        assert_eq!(s0.act_weight(&d, &lambda0).unwrap(), &lambda0 - &alpha0);
    }

    #[test]
    fn null_root_is_fixed_by_every_word() {
        let d = a2();
        let delta_w = WeightVector::null_root(&d);
        let delta_r = RootVector::null_root(&d);
        for indices in [vec![], vec![0], vec![1, 2, 0], vec![0, 1, 0, 2, 1]] {
            let w = WeylWord::new(&d, indices).unwrap();
            assert_eq!(w.act_weight(&d, &delta_w).unwrap(), delta_w);
            assert_eq!(w.act_root(&d, &delta_r).unwrap(), delta_r);
        }
    }

    #[test]
    fn weight_and_root_actions_agree() {
        let d = a2();
        let w = WeylWord::new(&d, vec![0, 2, 1, 0]).unwrap();
        let v = RootVector::from_coords(&d, vec![1, -2, 3]).unwrap();
        let via_root = w.act_root(&d, &v).unwrap().to_weight(&d).unwrap();
        let via_weight = w.act_weight(&d, &v.to_weight(&d).unwrap()).unwrap();
        assert_eq!(via_root, via_weight);
    }

    /// Brute-force inversion set: banded positive roots sent negative.
    fn oracle_inversions(
        datum: &AffineCartanDatum,
        w: &WeylWord,
        k_max: i64,
    ) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        for (root, _) in crate::cartan::positive_roots_up_to(datum, k_max).unwrap() {
            let image = w.act_root(datum, &root).unwrap();
            if image.classify(datum).unwrap() == RootClass::RealNegative {
                out.push(root.coords().to_vec());
            }
        }
        out.sort();
        out
    }

    #[test]
    fn inversion_list_matches_brute_force() {
        let d1 = a1();
        for indices in [
            vec![],
            vec![0],
            vec![1],
            vec![0, 1],
            vec![1, 0],
            vec![0, 1, 0],
            vec![1, 0, 1, 0],
        ] {
            let w = WeylWord::new(&d1, indices.clone()).unwrap();
            if !w.is_reduced(&d1).unwrap() {
                continue;
            }
            let mut listed: Vec<Vec<i64>> = w
                .inversion_list(&d1)
                .unwrap()
                .iter()
                .map(|r| r.coords().to_vec())
                .collect();
            listed.sort();
            assert_eq!(listed, oracle_inversions(&d1, &w, 6), "word {indices:?}");
        }
        let d2 = a2();
        for indices in [vec![0, 1], vec![1, 2, 1], vec![0, 1, 2, 0], vec![2, 0, 1, 2, 0]] {
            let w = WeylWord::new(&d2, indices.clone()).unwrap();
            if !w.is_reduced(&d2).unwrap() {
                continue;
            }
            let mut listed: Vec<Vec<i64>> = w
                .inversion_list(&d2)
                .unwrap()
                .iter()
                .map(|r| r.coords().to_vec())
                .collect();
            listed.sort();
            assert_eq!(listed, oracle_inversions(&d2, &w, 8), "word {indices:?}");
        }
    }

    #[test]
    fn two_letter_inversion_list_by_hand() {
        let d = a1();
        let w = WeylWord::new(&d, vec![0, 1]).unwrap();
        let listed: Vec<Vec<i64>> = w
            .inversion_list(&d)
            .unwrap()
            .iter()
            .map(|r| r.coords().to_vec())
            .collect();
        // s_1(alpha_0) = delta + alpha_1 = (1, 2), then alpha_1 itself.
        assert_eq!(listed, vec![vec![1, 2], vec![0, 1]]);
        assert!(w.is_reduced(&d).unwrap());
    }

    #[test]
    fn empty_and_repeated_words() {
        let d = a1();
        let empty = WeylWord::identity(&d);
        assert!(empty.inversion_list(&d).unwrap().is_empty());
        assert!(empty.is_reduced(&d).unwrap());

        let ss = WeylWord::new(&d, vec![1, 1]).unwrap();
        assert!(!ss.is_reduced(&d).unwrap());
        assert_eq!(ss.inversion_list(&d).unwrap().len(), 2);
    }

    #[test]
    fn reduced_iff_inversion_count_is_length() {
        let d = a2();
        for indices in [
            vec![0, 1, 0, 1],
            vec![1, 2],
            vec![1, 2, 1, 2],
            vec![2, 2],
            vec![0, 1, 2],
        ] {
            let w = WeylWord::new(&d, indices).unwrap();
            let list = w.inversion_list(&d).unwrap();
            let distinct_positive = {
                let mut seen = std::collections::BTreeSet::new();
                list.iter().all(|r| {
                    r.classify(&d).unwrap() == RootClass::RealPositive
                        && seen.insert(r.coords().to_vec())
                })
            };
            assert_eq!(w.is_reduced(&d).unwrap(), distinct_positive);
        }
    }

    #[test]
    fn invalid_index_is_rejected() {
        let d = a1();
        assert!(WeylWord::new(&d, vec![2]).is_err());
    }

    #[test]
    fn serialization_shape() {
        let d = a2();
        let w = WeylWord::new(&d, vec![0, 2, 1]).unwrap();
        let json = serde_json::to_value(&w).unwrap();
        assert_eq!(json["type"], "A");
        assert_eq!(json["rank"], 2);
        assert_eq!(json["word"], serde_json::json!([0, 2, 1]));
    }

    proptest! {
        #[test]
        fn action_round_trips_through_inverse(
            indices in proptest::collection::vec(0usize..3, 0..12),
            lambda_coeffs in proptest::collection::vec(-5i64..6, 3),
            delta_coeff in -5i64..6,
        ) {
            let d = a2();
            let w = WeylWord::new(&d, indices).unwrap();
            let lambda = WeightVector::from_coeffs(
                &d,
                lambda_coeffs
                    .iter()
                    .map(|&c| BigRational::from_integer(c.into()))
                    .collect(),
                BigRational::from_integer(delta_coeff.into()),
            )
            .unwrap();
            let round = w
                .act_weight(&d, &w.inverse().act_weight(&d, &lambda).unwrap())
                .unwrap();
            prop_assert_eq!(round, lambda);
        }
    }
}
