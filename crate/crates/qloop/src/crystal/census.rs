//! Weight-space census over pairs (partition tuple, crystal node).
//!
//! For a dominant level-zero weight given by fundamental multiplicities
//! `m_1..m_n`, the module built from the extremal seed is spanned by
//! vectors `s_{c0}(z) b` where `c0` runs over tuples of partitions with
//! at most `m_i` rows in color `i`, `s_{c0}` is the product of Schur
//! polynomials in the degree-shift variables of the factors of each
//! color, and `b` runs over the connected crystal component of the seed.
//! A Schur monomial `z^gamma` lowers the degree of factor `nu` by
//! `gamma_nu`, so the pair lands in the slot
//! `(drop N = |c0| - degree(b), classical weight of b)`.
//!
//! [`bijection_census`] enumerates all such pairs inside a degree band
//! and a cap on `|c0|`, and tabulates per slot:
//!
//! * `pairs`: raw number of contributing pairs;
//! * `vectors`: distinct formal sums `sum coeff * node` the pairs
//!   produce, since different pairs can name the same vector (a full
//!   column in `c0` acts as a plain degree shift);
//! * `witness_degrees`: for each distinct vector, the minimal `degree(b)`
//!   over the pairs producing it. Enlarging the band never raises a
//!   witness, so a downstream consumer can cut on the witness degree to
//!   get a band-independent count.
//!
//! Truncation is never silent: each cell is `flagged` unless a second
//! run with a strictly smaller band and cap reproduces its distinct
//! vector count, and the report records whether the component itself was
//! cut by the band.

use crate::cartan::AffineCartanDatum;
use crate::crystal::graph::{connected_component, CrystalGraph};
use crate::crystal::node::{node_degree, rational_to_int, CrystalNode};
use crate::crystal::tensor::TensorNode;
use crate::error::QResult;
use crate::qsymbolic::{schur_polynomial, PartitionTuple, ZPoly};
use serde::Serialize;
use std::collections::BTreeMap;

// ---- report types ----

/// One `(drop, classical weight)` slot of the census.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusCell {
    /// The delta-degree drop `N >= 0` below the seed.
    pub drop: i64,
    /// Classical weight as fundamental-weight coordinates `1..=rank`.
    pub classical: Vec<i64>,
    /// Distinct vectors produced by the contributing pairs.
    pub vectors: usize,
    /// Raw number of contributing pairs.
    pub pairs: usize,
    /// Minimal node degree per distinct vector, ascending.
    pub witness_degrees: Vec<i64>,
    /// True unless a smaller run reproduces `vectors` exactly.
    pub flagged: bool,
}

impl CensusCell {
    /// Distinct vectors whose minimal witness degree is at most `cut`;
    /// with enough band margin this count is band-independent.
    pub fn vectors_with_witness_at_most(&self, cut: i64) -> usize {
        self.witness_degrees.iter().filter(|&&w| w <= cut).count()
    }
}

/// The full census table together with the run parameters.
#[derive(Clone, Debug, Serialize)]
pub struct CensusReport {
    pub label: String,
    pub multiplicities: Vec<usize>,
    pub n_max: i64,
    pub band: (i64, i64),
    pub depth_cap: i64,
    /// True when the band did not cut off the crystal component.
    pub complete_component: bool,
    pub cells: Vec<CensusCell>,
}

impl CensusReport {
    pub fn cell(&self, drop: i64, classical: &[i64]) -> Option<&CensusCell> {
        self.cells
            .iter()
            .find(|c| c.drop == drop && c.classical == classical)
    }
}

// ---- the census ----

/// Tabulates the census for the weight `sum_i multiplicities[i] *
/// fundamental_i` over drops `0..=n_max`, node degrees in `band`, and
/// `|c0| <= depth_cap`. `node_cap` bounds the crystal enumeration.
pub fn bijection_census(
    datum: &AffineCartanDatum,
    multiplicities: &[usize],
    n_max: i64,
    band: (i64, i64),
    depth_cap: i64,
    node_cap: usize,
) -> QResult<CensusReport> {
    let seed = TensorNode::extremal_seed(datum, multiplicities)?;
    let label = format!("census of the component of {seed}");
    let slots = seed.slots_by_color(datum);

    let graph = connected_component(datum, &seed, band, node_cap, &label)?;
    let mut cache = BTreeMap::new();
    let main = accumulate(datum, &graph, &slots, multiplicities, n_max, depth_cap, &mut cache)?;

    // A strictly smaller run; cells it fails to reproduce stay flagged.
    let small_band = (band.0 + 1, band.1 - 1);
    let small_graph = connected_component(datum, &seed, small_band, node_cap, &label)?;
    let small = accumulate(
        datum,
        &small_graph,
        &slots,
        multiplicities,
        n_max,
        depth_cap - 1,
        &mut cache,
    )?;

    let cells = main
        .into_iter()
        .map(|(slot, accum)| {
            let stable = small
                .get(&slot)
                .is_some_and(|other| other.vectors.len() == accum.vectors.len());
            let (drop, classical) = slot;
            let mut witness_degrees: Vec<i64> = accum.vectors.into_values().collect();
            witness_degrees.sort_unstable();
            CensusCell {
                drop,
                classical,
                vectors: witness_degrees.len(),
                pairs: accum.pairs,
                witness_degrees,
                flagged: !stable,
            }
        })
        .collect();

    Ok(CensusReport {
        label,
        multiplicities: multiplicities.to_vec(),
        n_max,
        band,
        depth_cap,
        complete_component: graph.is_complete(),
        cells,
    })
}

/// A vector is a formal sum of degree-shifted nodes; the key is the
/// sorted list of (node, coefficient) summands.
type VectorKey = Vec<(TensorNode, String)>;

struct SlotAccum {
    pairs: usize,
    /// Distinct vectors mapped to the minimal witness degree seen.
    vectors: BTreeMap<VectorKey, i64>,
}

fn accumulate(
    datum: &AffineCartanDatum,
    graph: &CrystalGraph<TensorNode>,
    slots: &[Vec<usize>],
    multiplicities: &[usize],
    n_max: i64,
    depth_cap: i64,
    cache: &mut BTreeMap<PartitionTuple, ZPoly>,
) -> QResult<BTreeMap<(i64, Vec<i64>), SlotAccum>> {
    let rank = datum.label().rank;
    let mut table: BTreeMap<(i64, Vec<i64>), SlotAccum> = BTreeMap::new();
    for node in graph.nodes() {
        let degree = node_degree(datum, node)?;
        let wt = node.weight(datum)?;
        let mut classical = Vec::with_capacity(rank);
        for i in datum.finite_indices() {
            classical.push(rational_to_int(wt.lambda_coeff(i), "weight coordinate")?);
        }
        for drop in 0..=n_max {
            let size = degree + drop;
            if size < 0 || size > depth_cap {
                continue;
            }
            let slot = table.entry((drop, classical.clone())).or_insert(SlotAccum {
                pairs: 0,
                vectors: BTreeMap::new(),
            });
            for tuple in PartitionTuple::all_bounded(rank, size as u32, multiplicities) {
                if i64::from(tuple.total_size()) != size {
                    continue;
                }
                let poly = cache.entry(tuple.clone()).or_insert_with(|| {
                    let mut product = ZPoly::one(node.num_factors());
                    for (idx, part) in tuple.components().iter().enumerate() {
                        product = &product
                            * &schur_polynomial(part, &slots[idx], node.num_factors());
                    }
                    product
                });
                let mut key: VectorKey = Vec::with_capacity(poly.num_terms());
                for (exps, coeff) in poly.terms() {
                    let mut shifted = node.clone();
                    for (factor, &e) in exps.iter().enumerate() {
                        if e != 0 {
                            shifted = shifted.shift_factor(factor, -i64::from(e))?;
                        }
                    }
                    key.push((shifted, coeff.to_string()));
                }
                key.sort();
                slot.pairs += 1;
                slot.vectors
                    .entry(key)
                    .and_modify(|w| *w = (*w).min(degree))
                    .or_insert(degree);
            }
        }
    }
    Ok(table)
}
