//! The abstract crystal-node interface and the Weyl group action on
//! regular crystals.
//!
//! A crystal node knows its affine weight and its Kashiwara operators
//! `e_step` (raising) and `f_step` (lowering), one pair per node of the
//! affine diagram. String lengths [`CrystalNode::epsilon`] and
//! [`CrystalNode::phi`] are derived by walking the operators, so the
//! bookkeeping identity `phi - epsilon = <h_i, wt>` is a genuine check on
//! implementations rather than a definition.
//!
//! [`weyl_action`] implements the simple-reflection action
//! `S_i b = f_i^t b` (for `t = <h_i, wt(b)> >= 0`, else `e_i^{-t} b`) and
//! extends it along reduced words; on regular crystals the result depends
//! only on the Weyl group element. [`is_extremal`] checks the extremal-node
//! condition on a finite ball of Weyl group elements.

use crate::cartan::{AffineCartanDatum, CoweightVector, WeightVector};
use crate::error::{QError, QResult};
use crate::weyl::WeylWord;
use num::BigRational;
use std::collections::BTreeSet;
use std::fmt;

// ---- the node interface ----

/// Hard cap on string walks; a longer string indicates a malformed
/// implementation rather than a long but legitimate string.
pub(crate) const STRING_CAP: usize = 10_000;

/// A node of a normal crystal for an affine Cartan datum.
///
/// Implementations must be immutable values; `e_step`/`f_step` return fresh
/// nodes. `None` means the operator kills the node.
pub trait CrystalNode: Clone + Eq + Ord + fmt::Debug + fmt::Display {
    /// Rank of the datum the node belongs to, used for mismatch checks.
    fn rank(&self) -> usize;

    /// The affine weight of the node.
    fn weight(&self, datum: &AffineCartanDatum) -> QResult<WeightVector>;

    /// The raising operator for color `i`.
    fn e_step(&self, datum: &AffineCartanDatum, i: usize) -> QResult<Option<Self>>;

    /// The lowering operator for color `i`.
    fn f_step(&self, datum: &AffineCartanDatum, i: usize) -> QResult<Option<Self>>;

    /// Length of the raising string through the node: the largest `k` with
    /// `e_i^k` nonzero.
    fn epsilon(&self, datum: &AffineCartanDatum, i: usize) -> QResult<i64> {
        let mut cur = self.clone();
        for steps in 0..STRING_CAP {
            match cur.e_step(datum, i)? {
                Some(next) => cur = next,
                None => return Ok(steps as i64),
            }
        }
        Err(QError::MalformedCrystal(format!(
            "CrystalNode::epsilon: raising string through {self} for color {i} exceeds {STRING_CAP}"
        )))
    }

    /// Length of the lowering string through the node.
    fn phi(&self, datum: &AffineCartanDatum, i: usize) -> QResult<i64> {
        let mut cur = self.clone();
        for steps in 0..STRING_CAP {
            match cur.f_step(datum, i)? {
                Some(next) => cur = next,
                None => return Ok(steps as i64),
            }
        }
        Err(QError::MalformedCrystal(format!(
            "CrystalNode::phi: lowering string through {self} for color {i} exceeds {STRING_CAP}"
        )))
    }

    /// The integer `<h_i, wt(b)>`.
    fn i_weight(&self, datum: &AffineCartanDatum, i: usize) -> QResult<i64> {
        let wt = self.weight(datum)?;
        let h = CoweightVector::simple_coroot(datum, i);
        let value = h.pair_weight(&wt)?;
        rational_to_int(&value, "CrystalNode::i_weight")
    }
}

/// The delta-degree of a node, as an integer.
pub fn node_degree<B: CrystalNode>(datum: &AffineCartanDatum, node: &B) -> QResult<i64> {
    let wt = node.weight(datum)?;
    rational_to_int(wt.delta_coeff(), "node_degree")
}

pub(crate) fn rational_to_int(value: &BigRational, what: &str) -> QResult<i64> {
    if !value.is_integer() {
        return Err(QError::MalformedCrystal(format!(
            "{what}: expected an integer, got {value}"
        )));
    }
    i64::try_from(value.to_integer()).map_err(|_| {
        QError::MalformedCrystal(format!("{what}: value {value} does not fit in an i64"))
    })
}

// ---- node-level invariants ----

/// Checks the crystal axioms visible from a single node: the string
/// bookkeeping `phi - epsilon = <h_i, wt>`, the weight shifts
/// `wt(f_i b) = wt(b) - alpha_i` and `wt(e_i b) = wt(b) + alpha_i`, and
/// the partial-inverse laws `e_i f_i b = b`, `f_i e_i b = b`.
pub fn verify_node_invariants<B: CrystalNode>(
    datum: &AffineCartanDatum,
    node: &B,
) -> QResult<()> {
    for i in datum.affine_indices() {
        let eps = node.epsilon(datum, i)?;
        let phi = node.phi(datum, i)?;
        let t = node.i_weight(datum, i)?;
        if phi - eps != t {
            return Err(QError::IdentityFailure(format!(
                "verify_node_invariants: node {node}, color {i}: phi - epsilon = {} but <h_i, wt> = {t}",
                phi - eps
            )));
        }
        let wt = node.weight(datum)?;
        let alpha = crate::cartan::RootVector::simple(datum, i).to_weight(datum)?;
        if let Some(lower) = node.f_step(datum, i)? {
            let expected = &wt - &alpha;
            if lower.weight(datum)? != expected {
                return Err(QError::IdentityFailure(format!(
                    "verify_node_invariants: wt(f_{i} {node}) is {}, expected {expected}",
                    lower.weight(datum)?
                )));
            }
            let back = lower.e_step(datum, i)?;
            if back.as_ref() != Some(node) {
                return Err(QError::IdentityFailure(format!(
                    "verify_node_invariants: e_{i} f_{i} {node} does not return to the node"
                )));
            }
        }
        if let Some(upper) = node.e_step(datum, i)? {
            let expected = &wt + &alpha;
            if upper.weight(datum)? != expected {
                return Err(QError::IdentityFailure(format!(
                    "verify_node_invariants: wt(e_{i} {node}) is {}, expected {expected}",
                    upper.weight(datum)?
                )));
            }
            let back = upper.f_step(datum, i)?;
            if back.as_ref() != Some(node) {
                return Err(QError::IdentityFailure(format!(
                    "verify_node_invariants: f_{i} e_{i} {node} does not return to the node"
                )));
            }
        }
    }
    Ok(())
}

// ---- Weyl group action ----

/// The simple reflection `S_i` on a regular crystal:
/// `S_i b = f_i^t b` when `t = <h_i, wt(b)>` is nonnegative, and
/// `S_i b = e_i^{-t} b` otherwise.
pub fn weyl_simple_reflection<B: CrystalNode>(
    datum: &AffineCartanDatum,
    node: &B,
    i: usize,
) -> QResult<B> {
    let t = node.i_weight(datum, i)?;
    let mut cur = node.clone();
    if t >= 0 {
        for step in 0..t {
            cur = cur.f_step(datum, i)?.ok_or_else(|| {
                QError::MalformedCrystal(format!(
                    "weyl_simple_reflection: lowering string below {node} too short for color {i} (needs {t}, broke at {step})"
                ))
            })?;
        }
    } else {
        for step in 0..-t {
            cur = cur.e_step(datum, i)?.ok_or_else(|| {
                QError::MalformedCrystal(format!(
                    "weyl_simple_reflection: raising string above {node} too short for color {i} (needs {}, broke at {step})",
                    -t
                ))
            })?;
        }
    }
    Ok(cur)
}

/// Acts by a word `s_{i_1} ... s_{i_k}`, rightmost letter first, so that
/// `wt(S_w b) = w(wt(b))` matches the word's action on weights.
pub fn weyl_action<B: CrystalNode>(
    datum: &AffineCartanDatum,
    word: &WeylWord,
    node: &B,
) -> QResult<B> {
    let mut cur = node.clone();
    for &i in word.indices().iter().rev() {
        cur = weyl_simple_reflection(datum, &cur, i)?;
    }
    Ok(cur)
}

/// Checks the extremal-node condition on a ball of Weyl group elements of
/// length at most `radius`: along every orbit node `c = S_w b`, the raising
/// operator `e_i` must kill `c` whenever `<h_i, wt(c)> >= 0` and the
/// lowering operator `f_i` must kill `c` whenever `<h_i, wt(c)> <= 0`.
pub fn is_extremal<B: CrystalNode>(
    datum: &AffineCartanDatum,
    node: &B,
    radius: usize,
) -> QResult<bool> {
    let mut seen: BTreeSet<B> = BTreeSet::new();
    let mut frontier = vec![node.clone()];
    seen.insert(node.clone());
    for depth in 0..=radius {
        let mut next = Vec::new();
        for cur in &frontier {
            for i in datum.affine_indices() {
                let t = cur.i_weight(datum, i)?;
                if t >= 0 && cur.e_step(datum, i)?.is_some() {
                    return Ok(false);
                }
                if t <= 0 && cur.f_step(datum, i)?.is_some() {
                    return Ok(false);
                }
                if depth < radius {
                    let reflected = weyl_simple_reflection(datum, cur, i)?;
                    if seen.insert(reflected.clone()) {
                        next.push(reflected);
                    }
                }
            }
        }
        frontier = next;
        if frontier.is_empty() {
            break;
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::FamilyADE;
    use crate::crystal::column::LevelZeroFundNode;

    fn a1() -> AffineCartanDatum {
        AffineCartanDatum::new(FamilyADE::A, 1).unwrap()
    }

    fn a2() -> AffineCartanDatum {
        AffineCartanDatum::new(FamilyADE::A, 2).unwrap()
    }

    #[test]
    fn simple_reflection_swaps_the_fundamental_column() {
        let d = a1();
        for m in -2..=2 {
            let plus = LevelZeroFundNode::new(&d, vec![1], m).unwrap();
            let minus = LevelZeroFundNode::new(&d, vec![2], m).unwrap();
            assert_eq!(weyl_simple_reflection(&d, &plus, 1).unwrap(), minus);
            assert_eq!(weyl_simple_reflection(&d, &minus, 1).unwrap(), plus);
        }
    }

    #[test]
    fn action_is_reduced_word_independent() {
        let d = a2();
        let lhs = WeylWord::new(&d, vec![1, 2, 1]).unwrap();
        let rhs = WeylWord::new(&d, vec![2, 1, 2]).unwrap();
        for letters in [vec![1], vec![2], vec![3], vec![1, 2], vec![2, 3]] {
            for m in -1..=1 {
                let node = LevelZeroFundNode::new(&d, letters.clone(), m).unwrap();
                assert_eq!(
                    weyl_action(&d, &lhs, &node).unwrap(),
                    weyl_action(&d, &rhs, &node).unwrap(),
                    "braid images differ on {node}"
                );
            }
        }
    }

    #[test]
    fn action_matches_the_weight_action() {
        let d = a2();
        let word = WeylWord::new(&d, vec![0, 1, 2]).unwrap();
        for letters in [vec![1], vec![2], vec![1, 3]] {
            let node = LevelZeroFundNode::new(&d, letters, 0).unwrap();
            let moved = weyl_action(&d, &word, &node).unwrap();
            let expected = word.act_weight(&d, &node.weight(&d).unwrap()).unwrap();
            assert_eq!(moved.weight(&d).unwrap(), expected);
        }
    }

    #[test]
    fn fundamental_nodes_are_extremal() {
        let d = a2();
        for color in 1..=2 {
            let node = LevelZeroFundNode::fundamental(&d, color).unwrap();
            assert!(is_extremal(&d, &node, 3).unwrap());
        }
    }

    #[test]
    fn node_invariants_hold_on_every_column() {
        let d = a2();
        for letters in [vec![1], vec![2], vec![3], vec![1, 2], vec![1, 3], vec![2, 3]] {
            for m in -1..=1 {
                let node = LevelZeroFundNode::new(&d, letters.clone(), m).unwrap();
                verify_node_invariants(&d, &node).unwrap();
            }
        }
    }
}
