//! Diagram automorphisms: node permutations preserving the Cartan matrix.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::cartan::{AffineCartanDatum, RootVector, TypeLabel, WeightVector};
use crate::error::{QError, QResult};

/// A permutation `tau` of the affine node set with
/// `a_{tau(i), tau(j)} = a_{ij}`, acting on the root lattice by permuting
/// the simple roots and on the weight space by the unique extension that
/// fixes `delta` and preserves the invariant bilinear form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DiagramAutomorphism {
    label: TypeLabel,
    /// `perm[i]` is the image of node `i`.
    perm: Vec<usize>,
}

impl DiagramAutomorphism {
    /// The identity automorphism.
    pub fn identity(datum: &AffineCartanDatum) -> Self {
        DiagramAutomorphism {
            label: datum.label(),
            perm: (0..datum.num_nodes()).collect(),
        }
    }

    /// Builds an automorphism, rejecting maps that are not bijections of
    /// the node set or do not preserve the Cartan matrix.
    pub fn new(datum: &AffineCartanDatum, perm: Vec<usize>) -> QResult<Self> {
        let m = datum.num_nodes();
        if perm.len() != m {
            return Err(QError::ShapeMismatch(format!(
                "DiagramAutomorphism::new: expected {m} images, got {}",
                perm.len()
            )));
        }
        let mut seen = vec![false; m];
        for &image in &perm {
            if image >= m || seen[image] {
                return Err(QError::InvalidArgument(
                    "DiagramAutomorphism::new: not a permutation of the node set".to_string(),
                ));
            }
            seen[image] = true;
        }
        for i in 0..m {
            for j in 0..m {
                if datum.cartan(perm[i], perm[j]) != datum.cartan(i, j) {
                    return Err(QError::InvalidArgument(format!(
                        "DiagramAutomorphism::new: Cartan entry ({i},{j}) not preserved"
                    )));
                }
            }
        }
        Ok(DiagramAutomorphism {
            label: datum.label(),
            perm,
        })
    }

    /// Every diagram automorphism, found by backtracking over node images
    /// with Cartan-row consistency pruning. The identity comes first; the
    /// order is deterministic (lexicographic in the permutation).
    pub fn all(datum: &AffineCartanDatum) -> Vec<DiagramAutomorphism> {
        let m = datum.num_nodes();
        let mut results = Vec::new();
        let mut partial: Vec<usize> = Vec::with_capacity(m);
        let mut used = vec![false; m];
        fn extend(
            datum: &AffineCartanDatum,
            partial: &mut Vec<usize>,
            used: &mut Vec<bool>,
            results: &mut Vec<Vec<usize>>,
        ) {
            let m = datum.num_nodes();
            let i = partial.len();
            if i == m {
                results.push(partial.clone());
                return;
            }
            for image in 0..m {
                if used[image] {
                    continue;
                }
                let consistent = (0..i).all(|j| {
                    datum.cartan(image, partial[j]) == datum.cartan(i, j)
                        && datum.cartan(partial[j], image) == datum.cartan(j, i)
                }) && datum.cartan(image, image) == datum.cartan(i, i);
                if consistent {
                    partial.push(image);
                    used[image] = true;
                    extend(datum, partial, used, results);
                    used[image] = false;
                    partial.pop();
                }
            }
        }
        let mut raw = Vec::new();
        extend(datum, &mut partial, &mut used, &mut raw);
        for perm in raw {
            results.push(
                DiagramAutomorphism::new(datum, perm)
                    .expect("DiagramAutomorphism::all: search produced an invalid permutation"),
            );
        }
        results
    }

    pub fn type_label(&self) -> TypeLabel {
        self.label
    }

    /// Image of node `i`.
    pub fn image(&self, i: usize) -> usize {
        self.perm[i]
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// Composition `self * rhs` (rhs applied first).
    pub fn compose(&self, rhs: &DiagramAutomorphism) -> Self {
        assert_eq!(
            self.label, rhs.label,
            "DiagramAutomorphism::compose: mismatched data {} and {}",
            self.label, rhs.label
        );
        DiagramAutomorphism {
            label: self.label,
            perm: rhs.perm.iter().map(|&j| self.perm[j]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0usize; self.perm.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            inv[p] = i;
        }
        DiagramAutomorphism {
            label: self.label,
            perm: inv,
        }
    }

    /// Acts on a weight.
    ///
    /// On the root lattice the action permutes the simple roots; on the
    /// full weight space it is pinned by preserving the invariant form.
    /// Writing `lambda = level * Lambda_0 + beta + m delta` with `beta` in
    /// the rational span of the finite simple roots, the image is
    /// `level * tau(Lambda_0) + tau(beta) + m delta`, where
    /// `tau(Lambda_0) = Lambda_{tau(0)} - (w_{tau(0)}, w_{tau(0)})/2 delta`
    /// (the unique isotropic lift). For level-zero weights this permutes
    /// the fundamental-weight coefficients up to a `delta` shift.
    pub fn act_weight(
        &self,
        datum: &AffineCartanDatum,
        lambda: &WeightVector,
    ) -> QResult<WeightVector> {
        use num::BigRational;
        use num_traits::Zero;

        datum.check_same(self.label, "DiagramAutomorphism::act_weight")?;
        datum.check_same(lambda.type_label(), "DiagramAutomorphism::act_weight")?;
        let n = datum.finite_rank();
        let two = BigRational::from_integer(2.into());

        let level = lambda.level(datum);
        let mut out = WeightVector::null_root(datum).scale(lambda.delta_coeff());
        if !level.is_zero() {
            let zero_image = self.perm[0];
            let mut lifted = WeightVector::fundamental(datum, zero_image);
            if zero_image != 0 {
                let norm = datum.inverse_finite_cartan(zero_image, zero_image).clone();
                lifted = &lifted - &WeightVector::null_root(datum).scale(&(norm / &two));
            }
            out = &out + &lifted.scale(&level);
        }
        for j in 1..=n {
            let mut coeff = BigRational::zero();
            for k in 1..=n {
                coeff += datum.inverse_finite_cartan(j, k) * lambda.lambda_coeff(k);
            }
            if !coeff.is_zero() {
                let alpha_image = RootVector::simple(datum, self.perm[j]).to_weight(datum)?;
                out = &out + &alpha_image.scale(&coeff);
            }
        }
        Ok(out)
    }

    /// Acts on a root-lattice vector by permuting the simple roots.
    pub fn act_root(&self, datum: &AffineCartanDatum, v: &RootVector) -> QResult<RootVector> {
        datum.check_same(self.label, "DiagramAutomorphism::act_root")?;
        datum.check_same(v.type_label(), "DiagramAutomorphism::act_root")?;
        let m = datum.num_nodes();
        let mut coords = vec![0i64; m];
        for i in 0..m {
            coords[self.perm[i]] = v.coord(i);
        }
        RootVector::from_coords(datum, coords)
    }
}

impl fmt::Display for DiagramAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "id");
        }
        let parts: Vec<String> = self
            .perm
            .iter()
            .enumerate()
            .filter(|(i, &p)| *i != p)
            .map(|(i, &p)| format!("{i}>{p}"))
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for DiagramAutomorphism {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("DiagramAutomorphism", 3)?;
        s.serialize_field("type", &self.label.family.to_string())?;
        s.serialize_field("rank", &self.label.rank)?;
        s.serialize_field("perm", &self.perm)?;
        s.end()
    }
}

// ---- tests ----

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::FamilyADE;
    use num::BigRational;
    use num_traits::Zero;

    #[test]
    fn automorphism_group_sizes() {
        // Affine A_1: the node swap. Affine A_n (n >= 2): the dihedral
        // group of the (n+1)-cycle. Affine D_5: two swappable end forks
        // plus the flip exchanging them. Affine E_6: three arms of length
        // two permuted freely. Affine E_7: one flip. Affine E_8: rigid.
        let expectations = [
            (FamilyADE::A, 1usize, 2usize),
            (FamilyADE::A, 2, 6),
            (FamilyADE::A, 3, 8),
            (FamilyADE::A, 4, 10),
            (FamilyADE::D, 5, 8),
            (FamilyADE::E, 6, 6),
            (FamilyADE::E, 7, 2),
            (FamilyADE::E, 8, 1),
        ];
        for (family, rank, order) in expectations {
            let d = AffineCartanDatum::new(family, rank).unwrap();
            let all = DiagramAutomorphism::all(&d);
            assert_eq!(all.len(), order, "{}", d.label());
            assert!(all[0].is_identity() || all.iter().any(|t| t.is_identity()));
        }
        // Affine D_4 is the star with four outer nodes: S_4 on the legs.
        let d4 = AffineCartanDatum::new(FamilyADE::D, 4).unwrap();
        assert_eq!(DiagramAutomorphism::all(&d4).len(), 24);
    }

    #[test]
    fn rotation_of_the_affine_cycle() {
        let d = AffineCartanDatum::new(FamilyADE::A, 2).unwrap();
        let rot = DiagramAutomorphism::new(&d, vec![1, 2, 0]).unwrap();
        assert!(!rot.is_identity());
        let cube = rot.compose(&rot).compose(&rot);
        assert!(cube.is_identity());
        assert!(rot.compose(&rot.inverse()).is_identity());
    }

    #[test]
    fn non_preserving_permutation_is_rejected() {
        let d = AffineCartanDatum::new(FamilyADE::A, 3).unwrap();
        // Swapping adjacent and non-adjacent nodes breaks the cycle.
        assert!(DiagramAutomorphism::new(&d, vec![0, 2, 1, 3]).is_err());
        assert!(DiagramAutomorphism::new(&d, vec![0, 0, 1, 2]).is_err());
    }

    #[test]
    fn action_permutes_basis_vectors() {
        let d = AffineCartanDatum::new(FamilyADE::A, 2).unwrap();
        let rot = DiagramAutomorphism::new(&d, vec![1, 2, 0]).unwrap();

        // Lambda_0 goes to the isotropic lift of Lambda_1: subtracting
        // (w_1, w_1)/2 = 1/3 of delta keeps the self-pairing at zero.
        let lambda0 = WeightVector::fundamental(&d, 0);
        let image = rot.act_weight(&d, &lambda0).unwrap();
        let expected = &WeightVector::fundamental(&d, 1)
            - &WeightVector::null_root(&d).scale(&BigRational::new(1.into(), 3.into()));
        assert_eq!(image, expected);
        assert!(crate::cartan::bilinear_form(&d, &image, &image)
            .unwrap()
            .is_zero());

        let alpha2 = RootVector::simple(&d, 2);
        assert_eq!(
            rot.act_root(&d, &alpha2).unwrap(),
            RootVector::simple(&d, 0)
        );
        // Simple roots map to simple roots as weights too.
        let alpha2_wt = alpha2.to_weight(&d).unwrap();
        assert_eq!(
            rot.act_weight(&d, &alpha2_wt).unwrap(),
            RootVector::simple(&d, 0).to_weight(&d).unwrap()
        );
        let delta = WeightVector::null_root(&d);
        assert_eq!(rot.act_weight(&d, &delta).unwrap(), delta);
    }

    #[test]
    fn action_preserves_the_invariant_form() {
        use crate::cartan::bilinear_form;
        let d = AffineCartanDatum::new(FamilyADE::A, 3).unwrap();
        for auto in DiagramAutomorphism::all(&d) {
            let mut basis = Vec::new();
            for i in d.affine_indices() {
                basis.push(WeightVector::fundamental(&d, i));
                basis.push(RootVector::simple(&d, i).to_weight(&d).unwrap());
            }
            for x in &basis {
                for y in &basis {
                    let lhs = bilinear_form(&d, x, y).unwrap();
                    let rhs = bilinear_form(
                        &d,
                        &auto.act_weight(&d, x).unwrap(),
                        &auto.act_weight(&d, y).unwrap(),
                    )
                    .unwrap();
                    assert_eq!(lhs, rhs, "form broken by {auto}");
                }
            }
        }
    }

    #[test]
    fn action_composes_like_the_permutations() {
        let d = AffineCartanDatum::new(FamilyADE::A, 2).unwrap();
        let rot = DiagramAutomorphism::new(&d, vec![1, 2, 0]).unwrap();
        let rot2 = rot.compose(&rot);
        let lambda = WeightVector::fundamental(&d, 0);
        let via_steps = rot
            .act_weight(&d, &rot.act_weight(&d, &lambda).unwrap())
            .unwrap();
        let via_product = rot2.act_weight(&d, &lambda).unwrap();
        assert_eq!(via_steps, via_product);
        let triple = rot2.compose(&rot);
        assert!(triple.is_identity());
        assert_eq!(triple.act_weight(&d, &lambda).unwrap(), lambda);
    }
}
