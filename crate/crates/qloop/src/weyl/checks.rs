//! Brute-force verification of the defining relations between simple
//! reflections.
//!
//! [`braid_relation_check`] runs over every unordered pair of affine
//! nodes and compares the two sides of the applicable relation as linear
//! maps: `s_i s_j = s_j s_i` when the Cartan entry vanishes and
//! `s_i s_j s_i = s_j s_i s_j` when it is `-1`. Pairs with entry `-2`
//! (only the rank-one affine diagram has one) satisfy neither relation
//! and are reported as skipped. The maps are compared on every
//! fundamental weight, every simple root, and the null root, which
//! together span the weight space.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::cartan::{AffineCartanDatum, RootVector, TypeLabel, WeightVector};
use crate::error::QResult;

use super::word::WeylWord;

// ---- Report ----

/// The outcome of checking all pairwise relations for one datum.
#[derive(Debug, Clone)]
pub struct BraidReport {
    label: TypeLabel,
    /// Pairs with Cartan entry zero, checked for commutation.
    pub commuting_pairs: usize,
    /// Pairs with Cartan entry `-1`, checked for the length-three braid.
    pub braid_pairs: usize,
    /// Pairs with Cartan entry `-2` or lower, which satisfy no finite
    /// braid relation and are skipped.
    pub skipped_pairs: Vec<(usize, usize)>,
    /// Human-readable descriptions of any failed identities.
    pub failures: Vec<String>,
}

impl BraidReport {
    pub fn type_label(&self) -> TypeLabel {
        self.label
    }

    /// True when every checked relation held.
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

impl Serialize for BraidReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("BraidReport", 7)?;
        s.serialize_field("type", &self.label.family.to_string())?;
        s.serialize_field("rank", &self.label.rank)?;
        s.serialize_field("commuting_pairs", &self.commuting_pairs)?;
        s.serialize_field("braid_pairs", &self.braid_pairs)?;
        s.serialize_field("skipped", &self.skipped_pairs)?;
        s.serialize_field("ok", &self.ok())?;
        s.serialize_field("failures", &self.failures)?;
        s.end()
    }
}

// ---- The check ----

/// Verifies the pairwise relations between all simple reflections of the
/// affine diagram, comparing both sides on a spanning probe set.
pub fn braid_relation_check(datum: &AffineCartanDatum) -> QResult<BraidReport> {
    let mut report = BraidReport {
        label: datum.label(),
        commuting_pairs: 0,
        braid_pairs: 0,
        skipped_pairs: Vec::new(),
        failures: Vec::new(),
    };

    let mut probes: Vec<WeightVector> = Vec::new();
    for i in datum.affine_indices() {
        probes.push(WeightVector::fundamental(datum, i));
        probes.push(RootVector::simple(datum, i).to_weight(datum)?);
    }
    probes.push(WeightVector::null_root(datum));

    for i in datum.affine_indices() {
        for j in datum.affine_indices().skip(i + 1) {
            let entry = datum.cartan(i, j);
            let (lhs, rhs) = match entry {
                0 => {
                    report.commuting_pairs += 1;
                    (
                        WeylWord::new(datum, vec![i, j])?,
                        WeylWord::new(datum, vec![j, i])?,
                    )
                }
                -1 => {
                    report.braid_pairs += 1;
                    (
                        WeylWord::new(datum, vec![i, j, i])?,
                        WeylWord::new(datum, vec![j, i, j])?,
                    )
                }
                _ => {
                    report.skipped_pairs.push((i, j));
                    continue;
                }
            };
            for lambda in &probes {
                let left = lhs.act_weight(datum, lambda)?;
                let right = rhs.act_weight(datum, lambda)?;
                if left != right {
                    report.failures.push(format!(
                        "nodes ({i}, {j}): {lhs} sends {lambda} to {left} but {rhs} \
                         sends it to {right}"
                    ));
                    break;
                }
            }
        }
    }
    Ok(report)
}

// ---- Tests ----

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::FamilyADE;

    #[test]
    fn rank_one_skips_its_doubled_edge() {
        let d = AffineCartanDatum::new(FamilyADE::A, 1).unwrap();
        let report = braid_relation_check(&d).unwrap();
        assert!(report.ok());
        assert_eq!(report.commuting_pairs, 0);
        assert_eq!(report.braid_pairs, 0);
        assert_eq!(report.skipped_pairs, vec![(0, 1)]);
    }

    #[test]
    fn the_triangle_is_all_braids() {
        let d = AffineCartanDatum::new(FamilyADE::A, 2).unwrap();
        let report = braid_relation_check(&d).unwrap();
        assert!(report.ok());
        assert_eq!(report.braid_pairs, 3);
        assert_eq!(report.commuting_pairs, 0);
        assert!(report.skipped_pairs.is_empty());
    }

    #[test]
    fn the_four_pointed_star_checks_out() {
        let d = AffineCartanDatum::new(FamilyADE::D, 4).unwrap();
        let report = braid_relation_check(&d).unwrap();
        assert!(report.ok());
        assert_eq!(report.braid_pairs, 4);
        assert_eq!(report.commuting_pairs, 6);
        assert!(report.skipped_pairs.is_empty());
    }

    #[test]
    fn every_desk_scale_datum_passes() {
        for d in AffineCartanDatum::all_up_to_rank(8) {
            let report = braid_relation_check(&d).unwrap();
            assert!(report.ok(), "{}: {:?}", d.label(), report.failures);
        }
    }

    #[test]
    fn report_serialization() {
        let d = AffineCartanDatum::new(FamilyADE::A, 2).unwrap();
        let report = braid_relation_check(&d).unwrap();
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["ok"], serde_json::json!(true));
        assert_eq!(json["braid_pairs"], serde_json::json!(3));
        assert_eq!(json["failures"], serde_json::json!([]));
    }
}
