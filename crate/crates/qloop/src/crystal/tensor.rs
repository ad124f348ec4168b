//! Tensor products of crystal nodes and the signature rule.
//!
//! The operators on a tensor product route into a single factor. With
//! factors written left to right, the rule used here sends `f_i` into the
//! leftmost factor `t` whose lowering reserve beats the raising demand of
//! everything to its right, and `e_i` into the leftmost factor whose
//! reserve at least meets that demand; the demand is accumulated by the
//! suffix recurrence `E_t = max(eps_t, E_{t+1} - w_t)` with
//! `w_t = <h_i, wt(b_t)>`. This orientation matches the module-level
//! coproduct, which the module tests pin down at `q = 0`; it is frozen
//! here as the golden convention checked by `distinguished_factor_rule`.
//!
//! [`TensorNode`] instantiates the rule for tensors of type A column
//! nodes, ordered by color; [`TensorNode::extremal_seed`] builds the
//! distinguished tensor of fundamental nodes whose weight is
//! `sum_i m_i * fundamental_i`.

use crate::cartan::{AffineCartanDatum, WeightVector};
use crate::crystal::column::LevelZeroFundNode;
use crate::crystal::node::CrystalNode;
use crate::error::{QError, QResult};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::fmt;

// ---- the signature rule ----

/// Where `f_i` acts on a tensor of factors, if anywhere: the leftmost
/// position `t` with `phi_t > E_{t+1}`.
pub fn tensor_f_position<B: CrystalNode>(
    datum: &AffineCartanDatum,
    factors: &[B],
    i: usize,
) -> QResult<Option<usize>> {
    let (eps, phi, w) = factor_strings(datum, factors, i)?;
    let suffix = suffix_demand(&eps, &w);
    for t in 0..factors.len() {
        if phi[t] > suffix[t + 1] {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

/// Where `e_i` acts on a tensor of factors: the leftmost position `t` with
/// `phi_t >= E_{t+1}`. A position always exists on a nonempty tensor; the
/// whole operator vanishes exactly when the chosen factor's raising string
/// is exhausted.
pub fn tensor_e_position<B: CrystalNode>(
    datum: &AffineCartanDatum,
    factors: &[B],
    i: usize,
) -> QResult<Option<usize>> {
    let (eps, phi, w) = factor_strings(datum, factors, i)?;
    let suffix = suffix_demand(&eps, &w);
    for t in 0..factors.len() {
        if phi[t] >= suffix[t + 1] {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

fn factor_strings<B: CrystalNode>(
    datum: &AffineCartanDatum,
    factors: &[B],
    i: usize,
) -> QResult<(Vec<i64>, Vec<i64>, Vec<i64>)> {
    let mut eps = Vec::with_capacity(factors.len());
    let mut phi = Vec::with_capacity(factors.len());
    let mut w = Vec::with_capacity(factors.len());
    for factor in factors {
        eps.push(factor.epsilon(datum, i)?);
        phi.push(factor.phi(datum, i)?);
        w.push(factor.i_weight(datum, i)?);
    }
    Ok((eps, phi, w))
}

/// `suffix[t] = E_{t+1}` in math indexing: the raising demand of factors
/// `t..` against anything placed to their left.
fn suffix_demand(eps: &[i64], w: &[i64]) -> Vec<i64> {
    let k = eps.len();
    let mut suffix = vec![0i64; k + 1];
    for t in (0..k).rev() {
        suffix[t] = eps[t].max(suffix[t + 1] - w[t]);
    }
    suffix
}

// ---- tensor nodes over column factors ----

/// An ordered tensor of type A column nodes. Factors are kept in the order
/// given at construction; the crystal operators never reorder them.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct TensorNode {
    factors: Vec<LevelZeroFundNode>,
}

impl TensorNode {
    pub fn new(datum: &AffineCartanDatum, factors: Vec<LevelZeroFundNode>) -> QResult<Self> {
        if factors.is_empty() {
            return Err(QError::InvalidArgument(
                "TensorNode::new: a tensor needs at least one factor".to_string(),
            ));
        }
        let rank = datum.label().rank;
        for factor in &factors {
            if factor.rank() != rank {
                return Err(QError::DatumMismatch(format!(
                    "TensorNode::new: factor {factor} has rank {}, datum has rank {rank}",
                    factor.rank()
                )));
            }
        }
        Ok(TensorNode { factors })
    }

    /// The distinguished extremal tensor for the dominant level-zero weight
    /// with the given fundamental multiplicities `m_1..m_n`: for each color
    /// in increasing order, `m_color` copies of the fundamental node.
    pub fn extremal_seed(datum: &AffineCartanDatum, multiplicities: &[usize]) -> QResult<Self> {
        let rank = datum.label().rank;
        if multiplicities.len() != rank {
            return Err(QError::ShapeMismatch(format!(
                "TensorNode::extremal_seed: expected {rank} multiplicities, got {}",
                multiplicities.len()
            )));
        }
        let mut factors = Vec::new();
        for (idx, &m) in multiplicities.iter().enumerate() {
            let color = idx + 1;
            for _ in 0..m {
                factors.push(LevelZeroFundNode::fundamental(datum, color)?);
            }
        }
        TensorNode::new(datum, factors)
    }

    pub fn factors(&self) -> &[LevelZeroFundNode] {
        &self.factors
    }

    pub fn factor(&self, idx: usize) -> &LevelZeroFundNode {
        &self.factors[idx]
    }

    pub fn num_factors(&self) -> usize {
        self.factors.len()
    }

    /// Counts factors of each color `1..=rank`.
    pub fn color_multiplicities(&self, datum: &AffineCartanDatum) -> Vec<usize> {
        let mut counts = vec![0usize; datum.label().rank];
        for factor in &self.factors {
            counts[factor.color() - 1] += 1;
        }
        counts
    }

    /// Factor positions grouped by color in increasing color order; the
    /// groups concatenate to a permutation of all positions.
    pub fn slots_by_color(&self, datum: &AffineCartanDatum) -> Vec<Vec<usize>> {
        let mut slots = vec![Vec::new(); datum.label().rank];
        for (idx, factor) in self.factors.iter().enumerate() {
            slots[factor.color() - 1].push(idx);
        }
        slots
    }

    /// Shifts the degree of one factor; the census applies Schur-monomial
    /// degree shifts through this.
    pub fn shift_factor(&self, idx: usize, amount: i64) -> QResult<Self> {
        if idx >= self.factors.len() {
            return Err(QError::InvalidArgument(format!(
                "TensorNode::shift_factor: factor {idx} out of range for {} factors",
                self.factors.len()
            )));
        }
        let mut factors = self.factors.clone();
        factors[idx] = factors[idx].z_shift(amount);
        Ok(TensorNode { factors })
    }

    /// Shifts every factor at once; this is the diagonal automorphism of
    /// weight `(number of factors) * delta`.
    pub fn z_shift_all(&self, amount: i64) -> Self {
        TensorNode {
            factors: self.factors.iter().map(|f| f.z_shift(amount)).collect(),
        }
    }

    fn step(
        &self,
        datum: &AffineCartanDatum,
        i: usize,
        raise: bool,
    ) -> QResult<Option<Self>> {
        let pos = if raise {
            tensor_e_position(datum, &self.factors, i)?
        } else {
            tensor_f_position(datum, &self.factors, i)?
        };
        let Some(pos) = pos else {
            return Ok(None);
        };
        let stepped = if raise {
            self.factors[pos].e_step(datum, i)?
        } else {
            self.factors[pos].f_step(datum, i)?
        };
        match stepped {
            Some(factor) => {
                let mut factors = self.factors.clone();
                factors[pos] = factor;
                Ok(Some(TensorNode { factors }))
            }
            None if raise => Ok(None),
            None => Err(QError::MalformedCrystal(format!(
                "TensorNode: the signature rule chose factor {pos} of {self} for f_{i}, but its lowering string is exhausted"
            ))),
        }
    }
}

impl CrystalNode for TensorNode {
    fn rank(&self) -> usize {
        self.factors[0].rank()
    }

    fn weight(&self, datum: &AffineCartanDatum) -> QResult<WeightVector> {
        let mut total = WeightVector::zero(datum);
        for factor in &self.factors {
            total = &total + &factor.weight(datum)?;
        }
        Ok(total)
    }

    fn e_step(&self, datum: &AffineCartanDatum, i: usize) -> QResult<Option<Self>> {
        self.step(datum, i, true)
    }

    fn f_step(&self, datum: &AffineCartanDatum, i: usize) -> QResult<Option<Self>> {
        self.step(datum, i, false)
    }
}

impl fmt::Display for TensorNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, factor) in self.factors.iter().enumerate() {
            if k > 0 {
                write!(f, " * ")?;
            }
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}

impl Serialize for TensorNode {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("TensorNode", 1)?;
        s.serialize_field("factors", &self.factors)?;
        s.end()
    }
}
