//! Root classification, bounded enumeration of positive roots, and the
//! Coxeter-number identity for translation inversion sets.

use std::fmt;

use num_bigint::BigInt;
use num::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::cartan::datum::AffineCartanDatum;
use crate::cartan::vectors::{bilinear_form, CoweightVector, RootVector, WeightVector};
use crate::error::{QError, QResult};

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

// ---- classification ----

/// The four classes a vector of the affine root lattice can fall into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootClass {
    RealPositive,
    RealNegative,
    Imaginary,
    NonRoot,
}

impl fmt::Display for RootClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootClass::RealPositive => write!(f, "real-positive"),
            RootClass::RealNegative => write!(f, "real-negative"),
            RootClass::Imaginary => write!(f, "imaginary"),
            RootClass::NonRoot => write!(f, "non-root"),
        }
    }
}

impl RootVector {
    /// Classifies this lattice vector as a real root (with sign), an
    /// imaginary root, or a non-root. The zero vector is a non-root.
    pub fn classify(&self, datum: &AffineCartanDatum) -> QResult<RootClass> {
        datum.check_same(self.type_label(), "RootVector::classify")?;
        let k = self.delta_degree();
        let beta = self.finite_part(datum);
        if beta.iter().all(|&c| c == 0) {
            return Ok(if k == 0 {
                RootClass::NonRoot
            } else {
                RootClass::Imaginary
            });
        }
        if datum.is_finite_positive_root(&beta) {
            // k delta + beta with beta finite positive: positive iff k >= 0.
            Ok(if k >= 0 {
                RootClass::RealPositive
            } else {
                RootClass::RealNegative
            })
        } else {
            let minus: Vec<i64> = beta.iter().map(|&c| -c).collect();
            if datum.is_finite_positive_root(&minus) {
                Ok(if k >= 1 {
                    RootClass::RealPositive
                } else {
                    RootClass::RealNegative
                })
            } else {
                Ok(RootClass::NonRoot)
            }
        }
    }
}

// ---- bounded enumeration ----

/// All positive roots of δ-degree at most `k_max`, each with its
/// multiplicity: `k delta + alpha` for `0 <= k <= k_max`, `k delta` for
/// `1 <= k <= k_max` with multiplicity equal to the finite rank, and
/// `k delta - alpha` for `1 <= k <= k_max`, with `alpha` ranging over the
/// finite positive roots. Sorted by height, then lexicographically.
pub fn positive_roots_up_to(
    datum: &AffineCartanDatum,
    k_max: i64,
) -> QResult<Vec<(RootVector, usize)>> {
    if k_max < 0 {
        return Err(QError::InvalidArgument(format!(
            "positive_roots_up_to: k_max must be nonnegative, got {k_max}"
        )));
    }
    let n = datum.finite_rank();
    let mut out: Vec<(RootVector, usize)> = Vec::new();
    for k in 0..=k_max {
        for beta in datum.finite_positive_roots() {
            out.push((RootVector::from_finite_and_delta(datum, beta, k)?, 1));
        }
    }
    for k in 1..=k_max {
        out.push((RootVector::null_root(datum).scale(k), n));
        for beta in datum.finite_positive_roots() {
            let minus: Vec<i64> = beta.iter().map(|&c| -c).collect();
            out.push((RootVector::from_finite_and_delta(datum, &minus, k)?, 1));
        }
    }
    out.sort_by(|(a, _), (b, _)| {
        a.height()
            .cmp(&b.height())
            .then_with(|| a.coords().cmp(b.coords()))
    });
    Ok(out)
}

// ---- the Coxeter-number identity ----

/// Outcome of checking the weighted inversion-set identity for the
/// translation by a fundamental coweight.
///
/// The inversion set of that translation is
/// `{beta + n delta : beta finite positive, 0 <= n < <varpi_i^v, beta>}`;
/// summing `(alpha, xi)` over it must give the dual Coxeter number times
/// `<varpi_i^v, xi>`, and summing the coroot pairings `<alpha^v, xi>` must
/// give the Coxeter number times the same factor.
#[derive(Debug, Clone)]
pub struct CoxeterReport {
    pub node: usize,
    pub xi: WeightVector,
    pub inversion_set_size: usize,
    pub form_sum: BigRational,
    pub coroot_sum: BigRational,
    pub expected_form_sum: BigRational,
    pub expected_coroot_sum: BigRational,
    pub ok: bool,
    /// Human-readable description of the first failed equality, if any.
    pub failure: Option<String>,
}

impl Serialize for CoxeterReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("CoxeterReport", 8)?;
        s.serialize_field("node", &self.node)?;
        s.serialize_field("xi", &self.xi)?;
        s.serialize_field("inversion_set_size", &self.inversion_set_size)?;
        s.serialize_field("form_sum", &self.form_sum.to_string())?;
        s.serialize_field("coroot_sum", &self.coroot_sum.to_string())?;
        s.serialize_field("expected", &self.expected_form_sum.to_string())?;
        s.serialize_field("ok", &self.ok)?;
        s.serialize_field("failure", &self.failure)?;
        s.end()
    }
}

/// Enumerates the inversion set of the translation by the `i`-th
/// fundamental coweight and checks the two weighted identities against the
/// Coxeter numbers. Failures are reported, never panicked over.
pub fn verify_coxeter_identity(
    datum: &AffineCartanDatum,
    i: usize,
    xi: &WeightVector,
) -> QResult<CoxeterReport> {
    datum.check_same(xi.type_label(), "verify_coxeter_identity")?;
    if !(1..=datum.finite_rank()).contains(&i) {
        return Err(QError::InvalidArgument(format!(
            "verify_coxeter_identity: node {i} is not a finite node"
        )));
    }
    let coweight = CoweightVector::fundamental(datum, i);

    let mut form_sum = BigRational::zero();
    let mut coroot_sum = BigRational::zero();
    let mut size = 0usize;
    for beta in datum.finite_positive_roots() {
        let beta_root = RootVector::from_finite_and_delta(datum, beta, 0)?;
        let bound = coweight
            .pair_root(datum, &beta_root)?
            .to_integer()
            .to_i64()
            .expect("verify_coxeter_identity: pairing out of i64 range");
        for n in 0..bound {
            let alpha = RootVector::from_finite_and_delta(datum, beta, n)?;
            let alpha_weight = alpha.to_weight(datum)?;
            form_sum += bilinear_form(datum, &alpha_weight, xi)?;
            // Simply-laced: the coroot of a real root has the same
            // simple-coroot coordinates as the root has simple-root ones.
            let mut coroot = CoweightVector::zero(datum);
            for j in datum.affine_indices() {
                if alpha.coord(j) != 0 {
                    coroot = &coroot
                        + &CoweightVector::simple_coroot(datum, j).scale(&rat(alpha.coord(j)));
                }
            }
            coroot_sum += coroot.pair_weight(xi)?;
            size += 1;
        }
    }

    let factor = coweight.pair_weight(xi)?;
    let expected_form_sum = rat(datum.dual_coxeter_number()) * &factor;
    let expected_coroot_sum = rat(datum.coxeter_number()) * &factor;

    let mut failure = None;
    if form_sum != expected_form_sum {
        failure = Some(format!(
            "form sum {} differs from h_dual * pairing = {} for node {} and xi = {}",
            form_sum, expected_form_sum, i, xi
        ));
    } else if coroot_sum != expected_coroot_sum {
        failure = Some(format!(
            "coroot sum {} differs from h * pairing = {} for node {} and xi = {}",
            coroot_sum, expected_coroot_sum, i, xi
        ));
    }

    Ok(CoxeterReport {
        node: i,
        xi: xi.clone(),
        inversion_set_size: size,
        form_sum,
        coroot_sum,
        expected_form_sum,
        expected_coroot_sum,
        ok: failure.is_none(),
        failure,
    })
}

// ---- tests ----

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::datum::FamilyADE;
    use std::collections::BTreeSet;

    fn a1() -> AffineCartanDatum {
        AffineCartanDatum::new(FamilyADE::A, 1).unwrap()
    }

    fn a2() -> AffineCartanDatum {
        AffineCartanDatum::new(FamilyADE::A, 2).unwrap()
    }

    #[test]
    fn classification_of_small_vectors() {
        let d = a2();
        let cases: Vec<(Vec<i64>, RootClass)> = vec![
            (vec![0, 1, 0], RootClass::RealPositive),
            (vec![0, -1, 0], RootClass::RealNegative),
            (vec![0, 1, 1], RootClass::RealPositive),
            (vec![1, 1, 1], RootClass::Imaginary),
            (vec![2, 2, 2], RootClass::Imaginary),
            (vec![-1, -1, -1], RootClass::Imaginary),
            (vec![0, 0, 0], RootClass::NonRoot),
            (vec![0, 2, 1], RootClass::NonRoot),
            (vec![1, 0, 0], RootClass::RealPositive),
            (vec![1, 0, 1], RootClass::RealPositive),
            (vec![1, 2, 2], RootClass::RealPositive),
            (vec![-1, 0, 0], RootClass::RealNegative),
        ];
        for (coords, expected) in cases {
            let r = RootVector::from_coords(&d, coords.clone()).unwrap();
            assert_eq!(r.classify(&d).unwrap(), expected, "coords {coords:?}");
        }
    }

    #[test]
    fn rank_one_band_enumeration() {
        let d = a1();
        let roots = positive_roots_up_to(&d, 1).unwrap();
        let listed: Vec<(Vec<i64>, usize)> = roots
            .iter()
            .map(|(r, m)| (r.coords().to_vec(), *m))
            .collect();
        assert_eq!(
            listed,
            vec![
                (vec![0, 1], 1), // alpha_1
                (vec![1, 0], 1), // delta - alpha_1
                (vec![1, 1], 1), // delta
                (vec![1, 2], 1), // delta + alpha_1
            ]
        );
    }

    #[test]
    fn finite_band_matches_finite_system() {
        let d = a2();
        let roots = positive_roots_up_to(&d, 0).unwrap();
        assert_eq!(roots.len(), 3);
        for (r, m) in &roots {
            assert_eq!(*m, 1);
            assert_eq!(r.delta_degree(), 0);
            assert_eq!(r.classify(&d).unwrap(), RootClass::RealPositive);
        }
    }

    #[test]
    fn imaginary_roots_carry_rank_multiplicity() {
        let d = AffineCartanDatum::new(FamilyADE::D, 4).unwrap();
        let roots = positive_roots_up_to(&d, 2).unwrap();
        let imaginary: Vec<usize> = roots
            .iter()
            .filter(|(r, _)| r.classify(&d).unwrap() == RootClass::Imaginary)
            .map(|(_, m)| *m)
            .collect();
        assert_eq!(imaginary, vec![4, 4]);
    }

    #[test]
    fn negative_band_is_rejected() {
        let d = a1();
        assert!(positive_roots_up_to(&d, -1).is_err());
    }

    /// Independent generator: real roots as the Weyl orbit of the simple
    /// roots, grown by simple reflections. The walk is allowed two extra
    /// δ-degrees of slack so that in-band roots are reached even when a
    /// shortest path briefly leaves the band; only in-band roots are kept.
    fn orbit_real_roots(datum: &AffineCartanDatum, k_max: i64) -> BTreeSet<Vec<i64>> {
        let m = datum.num_nodes();
        let slack = k_max + 2;
        let mut found: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: Vec<Vec<i64>> = Vec::new();
        for i in 0..m {
            let mut v = vec![0i64; m];
            v[i] = 1;
            found.insert(v.clone());
            queue.push(v.clone());
            let neg: Vec<i64> = v.iter().map(|&c| -c).collect();
            found.insert(neg.clone());
            queue.push(neg);
        }
        while let Some(v) = queue.pop() {
            for j in 0..m {
                let pairing: i64 = (0..m).map(|k| datum.cartan(j, k) * v[k]).sum();
                let mut image = v.clone();
                image[j] -= pairing;
                if image[0].abs() <= slack && found.insert(image.clone()) {
                    queue.push(image);
                }
            }
        }
        found
            .into_iter()
            .filter(|coords| coords[0].abs() <= k_max)
            .collect()
    }

    #[test]
    fn classification_agrees_with_orbit_generation() {
        for datum in [a1(), a2(), AffineCartanDatum::new(FamilyADE::A, 3).unwrap()] {
            let k_max = 3i64;
            let orbit = orbit_real_roots(&datum, k_max);
            // Every orbit element in band must classify as a real root with
            // the sign read off from its coordinates.
            for coords in &orbit {
                let r = RootVector::from_coords(&datum, coords.clone()).unwrap();
                if r.delta_degree().abs() > k_max {
                    continue;
                }
                let class = r.classify(&datum).unwrap();
                let expected = if coords.iter().all(|&c| c >= 0) {
                    RootClass::RealPositive
                } else if coords.iter().all(|&c| c <= 0) {
                    RootClass::RealNegative
                } else {
                    panic!("orbit produced mixed-sign coordinates {coords:?}");
                };
                assert_eq!(class, expected, "{} coords {coords:?}", datum.label());
            }
            // Conversely, everything classified real in a coordinate box
            // must lie in the orbit, and the box partitions cleanly.
            let n = datum.num_nodes();
            let bound = 2i64;
            let mut stack = vec![Vec::<i64>::new()];
            let mut all: Vec<Vec<i64>> = Vec::new();
            while let Some(prefix) = stack.pop() {
                if prefix.len() == n {
                    all.push(prefix);
                    continue;
                }
                for c in -bound..=bound {
                    let mut next = prefix.clone();
                    next.push(c);
                    stack.push(next);
                }
            }
            for coords in all {
                let r = RootVector::from_coords(&datum, coords.clone()).unwrap();
                if r.delta_degree().abs() > k_max {
                    continue;
                }
                let class = r.classify(&datum).unwrap();
                let in_orbit = orbit.contains(&coords);
                let is_real =
                    class == RootClass::RealPositive || class == RootClass::RealNegative;
                // The orbit is complete for finite parts within the box.
                if is_real {
                    assert!(
                        in_orbit,
                        "{} classified {coords:?} real but orbit missed it",
                        datum.label()
                    );
                } else {
                    assert!(
                        !in_orbit,
                        "{} classified {coords:?} as {class} but it is in the orbit",
                        datum.label()
                    );
                }
            }
        }
    }

    #[test]
    fn band_enumeration_matches_classification() {
        for datum in [a1(), a2(), AffineCartanDatum::new(FamilyADE::D, 4).unwrap()] {
            for k_max in 0..=3 {
                let roots = positive_roots_up_to(&datum, k_max).unwrap();
                let mut seen = BTreeSet::new();
                for (r, mult) in &roots {
                    assert!(r.delta_degree() <= k_max && r.delta_degree() >= 0);
                    let class = r.classify(&datum).unwrap();
                    match class {
                        RootClass::RealPositive => assert_eq!(*mult, 1),
                        RootClass::Imaginary => {
                            assert_eq!(*mult, datum.finite_rank());
                        }
                        other => panic!("unexpected class {other} in band"),
                    }
                    assert!(seen.insert(r.coords().to_vec()), "duplicate {r}");
                }
            }
        }
    }

    #[test]
    fn coxeter_identity_examples() {
        let d1 = a1();
        let alpha1 = RootVector::simple(&d1, 1).to_weight(&d1).unwrap();
        let report = verify_coxeter_identity(&d1, 1, &alpha1).unwrap();
        assert!(report.ok, "{:?}", report.failure);
        assert_eq!(report.inversion_set_size, 1);
        assert_eq!(report.form_sum, rat(2));
        assert_eq!(report.coroot_sum, rat(2));

        let zero = WeightVector::zero(&d1);
        let report = verify_coxeter_identity(&d1, 1, &zero).unwrap();
        assert!(report.ok);
        assert_eq!(report.form_sum, rat(0));

        let d2 = a2();
        let xi = RootVector::from_coords(&d2, vec![0, 1, 1])
            .unwrap()
            .to_weight(&d2)
            .unwrap();
        let report = verify_coxeter_identity(&d2, 1, &xi).unwrap();
        assert!(report.ok, "{:?}", report.failure);
    }

    #[test]
    fn coxeter_identity_all_simple_roots_rank_up_to_eight() {
        for datum in AffineCartanDatum::all_up_to_rank(8) {
            for i in 1..=datum.finite_rank() {
                for j in 1..=datum.finite_rank() {
                    let xi = RootVector::simple(&datum, j).to_weight(&datum).unwrap();
                    let report = verify_coxeter_identity(&datum, i, &xi).unwrap();
                    assert!(
                        report.ok,
                        "{} node {i} xi alpha_{j}: {:?}",
                        datum.label(),
                        report.failure
                    );
                }
            }
        }
    }

    #[test]
    fn coxeter_report_serializes() {
        let d = a1();
        let xi = RootVector::simple(&d, 1).to_weight(&d).unwrap();
        let report = verify_coxeter_identity(&d, 1, &xi).unwrap();
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["ok"], true);
        assert_eq!(json["node"], 1);
        assert_eq!(json["form_sum"], "2");
    }
}
