//! Desk-scale module specifications and the banded Chevalley action.
//!
//! A [`DeskModuleSpec`] pins down one concrete module: the affine type A
//! datum, one tensor factor per color multiplicity, a hard total-degree
//! band, and an orientation flag. The plain orientation acts through the
//! usual iterated coproduct on the level-zero fundamental tensor basis;
//! the `dualize`d orientation acts through the Chevalley involution, which
//! on the desk is a pure table swap: raising operators run the lowering
//! tables and vice versa, diagonal exponents flip sign. Desk labels
//! (columns and degrees) never change meaning; only the module-weight
//! accessors [`DeskModuleSpec::module_i_weight`] and
//! [`DeskModuleSpec::module_degree`] carry the sign.

use crate::cartan::{AffineCartanDatum, FamilyADE};
use crate::crystal::{node_degree, CrystalNode, TensorNode};
use crate::error::{QError, QResult};
use crate::qmodule::vector::ModuleVector;
use crate::qsymbolic::{gauss_factorial, RatQ};

// ---- specification ----

/// A concrete banded module: datum, color multiplicities, total-degree
/// band, and orientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeskModuleSpec {
    datum: AffineCartanDatum,
    multiplicities: Vec<usize>,
    band: (i64, i64),
    dualized: bool,
}

impl DeskModuleSpec {
    /// Desk-scale guard: specifications stay within type A and this rank.
    pub const MAX_RANK: usize = 3;

    pub fn new(
        datum: AffineCartanDatum,
        multiplicities: Vec<usize>,
        band: (i64, i64),
    ) -> QResult<Self> {
        let label = datum.label();
        if label.family != FamilyADE::A || label.rank > Self::MAX_RANK {
            return Err(QError::InvalidArgument(format!(
                "DeskModuleSpec::new: supported data are A1..A{}, got {label}",
                Self::MAX_RANK
            )));
        }
        if multiplicities.len() != label.rank {
            return Err(QError::ShapeMismatch(format!(
                "DeskModuleSpec::new: expected {} multiplicities, got {}",
                label.rank,
                multiplicities.len()
            )));
        }
        if multiplicities.iter().sum::<usize>() == 0 {
            return Err(QError::InvalidArgument(
                "DeskModuleSpec::new: at least one tensor factor is required".into(),
            ));
        }
        if !(band.0 <= 0 && 0 <= band.1) {
            return Err(QError::InvalidArgument(format!(
                "DeskModuleSpec::new: band [{}, {}] must contain degree 0",
                band.0, band.1
            )));
        }
        Ok(DeskModuleSpec { datum, multiplicities, band, dualized: false })
    }

    pub fn datum(&self) -> &AffineCartanDatum {
        &self.datum
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    pub fn band(&self) -> (i64, i64) {
        self.band
    }

    pub fn is_dualized(&self) -> bool {
        self.dualized
    }

    /// The same desk with the opposite orientation.
    pub fn dualize(&self) -> Self {
        let mut spec = self.clone();
        spec.dualized = !spec.dualized;
        spec
    }

    /// The same desk with a different band.
    pub fn with_band(&self, band: (i64, i64)) -> QResult<Self> {
        let mut spec =
            DeskModuleSpec::new(self.datum.clone(), self.multiplicities.clone(), band)?;
        spec.dualized = self.dualized;
        Ok(spec)
    }

    pub fn num_factors(&self) -> usize {
        self.multiplicities.iter().sum()
    }

    /// The color of each tensor slot, ascending colors with multiplicity.
    pub fn slot_colors(&self) -> Vec<usize> {
        let mut colors = Vec::with_capacity(self.num_factors());
        for (idx, &m) in self.multiplicities.iter().enumerate() {
            for _ in 0..m {
                colors.push(idx + 1);
            }
        }
        colors
    }

    /// The slots holding factors of `color`.
    pub fn slots_of_color(&self, color: usize) -> Vec<usize> {
        self.slot_colors()
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == color)
            .map(|(slot, _)| slot)
            .collect()
    }

    /// The extremal tensor node: fundamental columns at degree zero.
    pub fn extremal_seed(&self) -> QResult<TensorNode> {
        TensorNode::extremal_seed(&self.datum, &self.multiplicities)
    }

    pub fn extremal_seed_vector(&self) -> QResult<ModuleVector> {
        Ok(ModuleVector::from_basis(self.extremal_seed()?))
    }

    /// `+1` on the plain desk, `-1` on the dualized desk: the factor
    /// between desk labels and module weights.
    pub fn weight_sign(&self) -> i64 {
        if self.dualized {
            -1
        } else {
            1
        }
    }

    // ---- node admission ----

    pub fn in_band(&self, degree: i64) -> bool {
        self.band.0 <= degree && degree <= self.band.1
    }

    /// Checks that a node belongs to this desk: matching datum, the slot
    /// colors of the specification, and total degree inside the band.
    pub fn check_node(&self, node: &TensorNode) -> QResult<()> {
        let colors = self.slot_colors();
        if node.num_factors() != colors.len() {
            return Err(QError::ShapeMismatch(format!(
                "DeskModuleSpec::check_node: expected {} factors, got {}",
                colors.len(),
                node.num_factors()
            )));
        }
        for (slot, want) in colors.iter().enumerate() {
            let got = node.factor(slot).color();
            if got != *want {
                return Err(QError::ShapeMismatch(format!(
                    "DeskModuleSpec::check_node: slot {slot} has color {got}, expected {want}"
                )));
            }
        }
        let degree = node_degree(&self.datum, node)?;
        if !self.in_band(degree) {
            return Err(QError::BandExceeded(format!(
                "DeskModuleSpec::check_node: degree {degree} outside band [{}, {}]",
                self.band.0, self.band.1
            )));
        }
        Ok(())
    }

    pub fn check_vector(&self, v: &ModuleVector) -> QResult<()> {
        for node in v.support() {
            self.check_node(node)?;
        }
        Ok(())
    }

    fn require_in_band(&self, node: &TensorNode, what: &str) -> QResult<()> {
        let degree = node_degree(&self.datum, node)?;
        if !self.in_band(degree) {
            return Err(QError::BandExceeded(format!(
                "DeskModuleSpec::{what}: image at degree {degree} outside band [{}, {}]",
                self.band.0, self.band.1
            )));
        }
        Ok(())
    }

    // ---- module weights ----

    /// `<h_i, wt(v)>` in the module, which is the desk pairing times
    /// [`DeskModuleSpec::weight_sign`].
    pub fn module_i_weight(&self, node: &TensorNode, i: usize) -> QResult<i64> {
        Ok(self.weight_sign() * node.i_weight(&self.datum, i)?)
    }

    /// The delta-degree of the module weight: desk degree times the sign.
    pub fn module_degree(&self, node: &TensorNode) -> QResult<i64> {
        Ok(self.weight_sign() * node_degree(&self.datum, node)?)
    }

    // ---- Chevalley action ----

    /// One raw coproduct step on a basis node with the plain tables:
    /// lowering puts `q^{sum of i-weights left of the slot}` in front,
    /// raising puts `q^{-sum of i-weights right of the slot}`.
    fn raw_step(&self, i: usize, node: &TensorNode, raise: bool) -> QResult<ModuleVector> {
        let datum = &self.datum;
        let mut weights = Vec::with_capacity(node.num_factors());
        for factor in node.factors() {
            weights.push(factor.i_weight(datum, i)?);
        }
        let total: i64 = weights.iter().sum();
        let mut prefix = 0i64;
        let mut out = ModuleVector::zero();
        for (slot, weight) in weights.iter().enumerate() {
            let stepped = if raise {
                node.factor(slot).e_step(datum, i)?
            } else {
                node.factor(slot).f_step(datum, i)?
            };
            if let Some(new_factor) = stepped {
                let mut factors = node.factors().to_vec();
                factors[slot] = new_factor;
                let new_node = TensorNode::new(datum, factors)?;
                let what = if raise { "chevalley_e" } else { "chevalley_f" };
                self.require_in_band(&new_node, what)?;
                let exponent = if raise { -(total - prefix - weight) } else { prefix };
                out.add_term(new_node, RatQ::q_pow(exponent));
            }
            prefix += weight;
        }
        Ok(out)
    }

    /// The raising operator of color `i` on this desk. On the dualized
    /// desk this runs the plain lowering tables.
    pub fn apply_e(&self, i: usize, v: &ModuleVector) -> QResult<ModuleVector> {
        let raise = !self.dualized;
        v.apply_linear(|node| self.raw_step(i, node, raise))
    }

    /// The lowering operator of color `i` on this desk. On the dualized
    /// desk this runs the plain raising tables.
    pub fn apply_f(&self, i: usize, v: &ModuleVector) -> QResult<ModuleVector> {
        let raise = self.dualized;
        v.apply_linear(|node| self.raw_step(i, node, raise))
    }

    /// The diagonal operator `t_i^k`, scaling each basis vector by
    /// `q^{k <h_i, wt>}` with the module weight.
    pub fn apply_t_pow(&self, i: usize, k: i64, v: &ModuleVector) -> QResult<ModuleVector> {
        v.apply_linear(|node| {
            let exponent = k * self.module_i_weight(node, i)?;
            Ok(ModuleVector::from_basis(node.clone()).scale(&RatQ::q_pow(exponent)))
        })
    }

    /// The divided power `e_i^{(n)} = e_i^n / [n]!`.
    pub fn divided_e(&self, i: usize, n: usize, v: &ModuleVector) -> QResult<ModuleVector> {
        let mut out = v.clone();
        for _ in 0..n {
            out = self.apply_e(i, &out)?;
        }
        Ok(out.scale(&RatQ::from_laurent(gauss_factorial(n as i64)).inv()))
    }

    /// The divided power `f_i^{(n)} = f_i^n / [n]!`.
    pub fn divided_f(&self, i: usize, n: usize, v: &ModuleVector) -> QResult<ModuleVector> {
        let mut out = v.clone();
        for _ in 0..n {
            out = self.apply_f(i, &out)?;
        }
        Ok(out.scale(&RatQ::from_laurent(gauss_factorial(n as i64)).inv()))
    }

    // ---- loop rotations ----

    /// The canonical slot rotation `z_slot^k`: it raises the module
    /// delta-degree of one tensor slot by `k`, so it shifts the desk
    /// degree by `k` on the plain desk and by `-k` on the dualized desk.
    pub fn apply_z_slot(&self, slot: usize, k: i64, v: &ModuleVector) -> QResult<ModuleVector> {
        let shift = self.weight_sign() * k;
        v.apply_linear(|node| {
            let new_node = node.shift_factor(slot, shift)?;
            self.require_in_band(&new_node, "apply_z_slot")?;
            Ok(ModuleVector::from_basis(new_node))
        })
    }

    /// The product of [`DeskModuleSpec::apply_z_slot`] over all slots of
    /// one color.
    pub fn apply_z_color(&self, color: usize, k: i64, v: &ModuleVector) -> QResult<ModuleVector> {
        let mut out = v.clone();
        for slot in self.slots_of_color(color) {
            out = self.apply_z_slot(slot, k, &out)?;
        }
        Ok(out)
    }

    /// The product of [`DeskModuleSpec::apply_z_slot`] over every slot.
    pub fn apply_z_all(&self, k: i64, v: &ModuleVector) -> QResult<ModuleVector> {
        let mut out = v.clone();
        for slot in 0..self.num_factors() {
            out = self.apply_z_slot(slot, k, &out)?;
        }
        Ok(out)
    }
}
