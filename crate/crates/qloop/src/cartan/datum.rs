//! Construction and validation of the affine Cartan datum.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num::BigRational;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{QError, QResult};

// ---- type labels ----

/// The three simply-laced families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyADE {
    A,
    D,
    E,
}

impl fmt::Display for FamilyADE {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyADE::A => write!(f, "A"),
            FamilyADE::D => write!(f, "D"),
            FamilyADE::E => write!(f, "E"),
        }
    }
}

impl FromStr for FamilyADE {
    type Err = QError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "A" | "a" => Ok(FamilyADE::A),
            "D" | "d" => Ok(FamilyADE::D),
            "E" | "e" => Ok(FamilyADE::E),
            other => Err(QError::InvalidArgument(format!(
                "unknown family `{other}`, expected A, D, or E"
            ))),
        }
    }
}

/// A family together with its finite rank, e.g. `A2` or `E8`.
///
/// Two vectors may be combined only when their labels agree; the label is
/// the cheap identity token carried by every vector type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TypeLabel {
    pub family: FamilyADE,
    pub rank: usize,
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

// ---- the datum ----

/// An untwisted affine Cartan datum of simply-laced type.
///
/// Node `0` is the affine node; nodes `1..=rank` carry the finite
/// subdiagram in Bourbaki numbering. All derived data (Cartan matrix,
/// marks, comarks, Coxeter numbers, finite positive roots, inverse finite
/// Cartan matrix) is computed and validated at construction time.
#[derive(Debug, Clone)]
pub struct AffineCartanDatum {
    label: TypeLabel,
    /// Full `(n+1) x (n+1)` affine Cartan matrix, indices `0..=n`.
    cartan: Vec<Vec<i64>>,
    /// Marks `a_i` for `i in 0..=n`.
    marks: Vec<i64>,
    /// Comarks `a_i^\vee` for `i in 0..=n`.
    comarks: Vec<i64>,
    coxeter_number: i64,
    dual_coxeter_number: i64,
    /// Finite positive roots as coordinate vectors over the simple roots
    /// `alpha_1..alpha_n`, sorted by height then lexicographically.
    finite_positive_roots: Vec<Vec<i64>>,
    /// Same set, for membership queries.
    finite_positive_set: BTreeSet<Vec<i64>>,
    /// Inverse of the finite Cartan matrix, row/column indices `0..n-1`
    /// standing for nodes `1..=n`.
    inverse_finite_cartan: Vec<Vec<BigRational>>,
}

impl AffineCartanDatum {
    /// Builds and validates the datum for the given family and finite rank.
    ///
    /// Admissible ranks: `A_n` for `n >= 1`, `D_n` for `n >= 4`, `E_n` for
    /// `n in {6, 7, 8}`.
    pub fn new(family: FamilyADE, rank: usize) -> QResult<Self> {
        let finite = finite_cartan_matrix(family, rank)?;
        let n = rank;

        let finite_positive_roots = positive_root_closure(&finite);
        let highest = finite_positive_roots
            .last()
            .expect("AffineCartanDatum::new: empty positive root system")
            .clone();

        // Affine matrix: the zeroth row and column pair the affine node
        // against the finite nodes through the highest root.
        let mut cartan = vec![vec![0i64; n + 1]; n + 1];
        cartan[0][0] = 2;
        for j in 1..=n {
            let mut pairing = 0i64;
            for (k, &theta_k) in highest.iter().enumerate() {
                pairing += theta_k * finite[k][j - 1];
            }
            cartan[0][j] = -pairing;
            cartan[j][0] = -pairing;
        }
        for i in 1..=n {
            for j in 1..=n {
                cartan[i][j] = finite[i - 1][j - 1];
            }
        }

        let mut marks = Vec::with_capacity(n + 1);
        marks.push(1i64);
        marks.extend(highest.iter().copied());
        // Simply-laced: every root has the same length, so comarks equal marks.
        let comarks = marks.clone();

        let coxeter_number: i64 = marks.iter().sum();
        let dual_coxeter_number: i64 = comarks.iter().sum();

        let inverse_finite_cartan = invert_integer_matrix(&finite)?;

        let finite_positive_set = finite_positive_roots.iter().cloned().collect();

        let datum = AffineCartanDatum {
            label: TypeLabel { family, rank },
            cartan,
            marks,
            comarks,
            coxeter_number,
            dual_coxeter_number,
            finite_positive_roots,
            finite_positive_set,
            inverse_finite_cartan,
        };
        datum.validate()?;
        Ok(datum)
    }

    /// Checks the defining relations of an affine Cartan datum and the
    /// normalization conventions used throughout the crate.
    fn validate(&self) -> QResult<()> {
        let m = self.num_nodes();
        for i in 0..m {
            if self.cartan[i][i] != 2 {
                return Err(QError::Construction(format!(
                    "diagonal Cartan entry at node {i} is {}, expected 2",
                    self.cartan[i][i]
                )));
            }
            for j in 0..m {
                if i != j {
                    let a = self.cartan[i][j];
                    if a > 0 {
                        return Err(QError::Construction(format!(
                            "off-diagonal Cartan entry ({i},{j}) is {a}, expected <= 0"
                        )));
                    }
                    if (a == 0) != (self.cartan[j][i] == 0) {
                        return Err(QError::Construction(format!(
                            "Cartan entries ({i},{j}) and ({j},{i}) disagree on vanishing"
                        )));
                    }
                }
            }
        }
        for i in 0..m {
            let row: i64 = (0..m).map(|j| self.cartan[i][j] * self.marks[j]).sum();
            if row != 0 {
                return Err(QError::Construction(format!(
                    "marks fail the null relation in row {i}: sum {row}"
                )));
            }
            let col: i64 = (0..m).map(|j| self.comarks[j] * self.cartan[j][i]).sum();
            if col != 0 {
                return Err(QError::Construction(format!(
                    "comarks fail the null relation in column {i}: sum {col}"
                )));
            }
        }
        if self.marks[0] != 1 || self.comarks[0] != 1 {
            return Err(QError::Construction(
                "zeroth mark and comark must both be 1".to_string(),
            ));
        }
        if self.coxeter_number != self.marks.iter().sum::<i64>()
            || self.dual_coxeter_number != self.comarks.iter().sum::<i64>()
        {
            return Err(QError::Construction(
                "Coxeter numbers must equal the mark sums".to_string(),
            ));
        }
        if self.coxeter_number != self.dual_coxeter_number {
            return Err(QError::Construction(format!(
                "simply-laced datum must have equal Coxeter numbers, got {} and {}",
                self.coxeter_number, self.dual_coxeter_number
            )));
        }
        Ok(())
    }

    /// The identity token shared with every vector built over this datum.
    pub fn label(&self) -> TypeLabel {
        self.label
    }

    /// The finite rank `n`.
    pub fn finite_rank(&self) -> usize {
        self.label.rank
    }

    /// Number of nodes of the affine diagram, `n + 1`.
    pub fn num_nodes(&self) -> usize {
        self.label.rank + 1
    }

    /// Affine node indices `0..=n`.
    pub fn affine_indices(&self) -> impl Iterator<Item = usize> {
        0..self.num_nodes()
    }

    /// Finite node indices `1..=n`.
    pub fn finite_indices(&self) -> impl Iterator<Item = usize> {
        1..self.num_nodes()
    }

    /// Affine Cartan matrix entry `a_{ij}`, indices in `0..=n`.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        self.cartan[i][j]
    }

    /// Mark `a_i` of node `i`.
    pub fn mark(&self, i: usize) -> i64 {
        self.marks[i]
    }

    /// Comark `a_i^\vee` of node `i`.
    pub fn comark(&self, i: usize) -> i64 {
        self.comarks[i]
    }

    /// The Coxeter number `h`.
    pub fn coxeter_number(&self) -> i64 {
        self.coxeter_number
    }

    /// The dual Coxeter number `h^\vee`.
    pub fn dual_coxeter_number(&self) -> i64 {
        self.dual_coxeter_number
    }

    /// Finite positive roots in coordinates over `alpha_1..alpha_n`,
    /// sorted by height and then lexicographically.
    pub fn finite_positive_roots(&self) -> &[Vec<i64>] {
        &self.finite_positive_roots
    }

    /// The highest root of the finite subsystem.
    pub fn highest_root(&self) -> &[i64] {
        self.finite_positive_roots
            .last()
            .expect("AffineCartanDatum::highest_root: empty positive root system")
    }

    /// Membership test for the finite positive root system; `coords` are
    /// coordinates over `alpha_1..alpha_n`.
    pub fn is_finite_positive_root(&self, coords: &[i64]) -> bool {
        coords.len() == self.finite_rank() && self.finite_positive_set.contains(coords)
    }

    /// Entry `(i, j)` of the inverse finite Cartan matrix, nodes in `1..=n`.
    pub fn inverse_finite_cartan(&self, i: usize, j: usize) -> &BigRational {
        &self.inverse_finite_cartan[i - 1][j - 1]
    }

    /// Errors unless `other` is the same datum.
    pub fn check_same(&self, other: TypeLabel, context: &str) -> QResult<()> {
        if self.label == other {
            Ok(())
        } else {
            Err(QError::DatumMismatch(format!(
                "{context}: datum {} does not match {}",
                self.label, other
            )))
        }
    }

    /// All valid data with finite rank at most `max_rank`.
    pub fn all_up_to_rank(max_rank: usize) -> Vec<AffineCartanDatum> {
        let mut out = Vec::new();
        for n in 1..=max_rank {
            out.push(AffineCartanDatum::new(FamilyADE::A, n).expect("A_n datum"));
        }
        for n in 4..=max_rank.max(3) {
            if n >= 4 {
                out.push(AffineCartanDatum::new(FamilyADE::D, n).expect("D_n datum"));
            }
        }
        for n in 6..=max_rank.max(5) {
            if (6..=8).contains(&n) {
                out.push(AffineCartanDatum::new(FamilyADE::E, n).expect("E_n datum"));
            }
        }
        out
    }
}

impl PartialEq for AffineCartanDatum {
    fn eq(&self, other: &Self) -> bool {
        self.label == other.label
    }
}

impl Eq for AffineCartanDatum {}

impl Serialize for AffineCartanDatum {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("AffineCartanDatum", 7)?;
        s.serialize_field("type", &self.label.family.to_string())?;
        s.serialize_field("rank", &self.label.rank)?;
        s.serialize_field("cartan_matrix", &self.cartan)?;
        s.serialize_field("marks", &self.marks)?;
        s.serialize_field("comarks", &self.comarks)?;
        s.serialize_field("coxeter_number", &self.coxeter_number)?;
        s.serialize_field("dual_coxeter_number", &self.dual_coxeter_number)?;
        s.end()
    }
}

// ---- finite diagram tables ----

/// The finite Cartan matrix for the given family and rank, nodes `1..=n`
/// mapped to indices `0..n` (Bourbaki numbering for D and E).
fn finite_cartan_matrix(family: FamilyADE, rank: usize) -> QResult<Vec<Vec<i64>>> {
    let edges: Vec<(usize, usize)> = match family {
        FamilyADE::A => {
            if rank < 1 {
                return Err(QError::InvalidArgument(
                    "type A requires rank >= 1".to_string(),
                ));
            }
            (1..rank).map(|i| (i, i + 1)).collect()
        }
        FamilyADE::D => {
            if rank < 4 {
                return Err(QError::InvalidArgument(
                    "type D requires rank >= 4".to_string(),
                ));
            }
            // Chain 1 - 2 - ... - (n-2), fork to n-1 and n.
            let mut e: Vec<(usize, usize)> = (1..rank - 2).map(|i| (i, i + 1)).collect();
            e.push((rank - 2, rank - 1));
            e.push((rank - 2, rank));
            e
        }
        FamilyADE::E => {
            if !(6..=8).contains(&rank) {
                return Err(QError::InvalidArgument(
                    "type E requires rank in {6, 7, 8}".to_string(),
                ));
            }
            // Chain 1 - 3 - 4 - 5 - ... - n, with node 2 attached to node 4.
            let mut e = vec![(1, 3), (2, 4)];
            for i in 3..rank {
                e.push((i, i + 1));
            }
            e
        }
    };

    let mut m = vec![vec![0i64; rank]; rank];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (i, j) in edges {
        m[i - 1][j - 1] = -1;
        m[j - 1][i - 1] = -1;
    }
    Ok(m)
}

/// Generates the finite positive roots by reflection closure from the
/// simple roots, returned sorted by height and then lexicographically.
fn positive_root_closure(finite: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = finite.len();
    let mut found: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue: Vec<Vec<i64>> = Vec::new();
    for i in 0..n {
        let mut alpha = vec![0i64; n];
        alpha[i] = 1;
        found.insert(alpha.clone());
        queue.push(alpha);
    }
    while let Some(beta) = queue.pop() {
        for j in 0..n {
            let pairing: i64 = (0..n).map(|k| finite[j][k] * beta[k]).sum();
            let mut image = beta.clone();
            image[j] -= pairing;
            if image.iter().all(|&c| c >= 0) && found.insert(image.clone()) {
                queue.push(image);
            }
        }
    }
    let mut roots: Vec<Vec<i64>> = found.into_iter().collect();
    roots.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
    roots
}

/// Inverts an integer matrix over the rationals by Gaussian elimination.
fn invert_integer_matrix(m: &[Vec<i64>]) -> QResult<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut work: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> = m[i]
                .iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect();
            for j in 0..n {
                row.push(if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                });
            }
            row
        })
        .collect();

    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !work[r][col].is_zero())
            .ok_or_else(|| QError::Construction("singular finite Cartan matrix".to_string()))?;
        work.swap(col, pivot);
        let inv = work[col][col].clone();
        for entry in work[col].iter_mut() {
            *entry /= &inv;
        }
        for r in 0..n {
            if r != col && !work[r][col].is_zero() {
                let factor = work[r][col].clone();
                for c in 0..2 * n {
                    let delta = &factor * &work[col][c];
                    work[r][c] -= delta;
                }
            }
        }
    }
    Ok(work
        .into_iter()
        .map(|row| row[n..].to_vec())
        .collect())
}

// ---- tests ----
