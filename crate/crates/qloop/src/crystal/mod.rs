//! Combinatorial crystals for level-zero weights.
//!
//! The building blocks are column nodes for the type A fundamental
//! crystals ([`LevelZeroFundNode`]), tensors of them with the signature
//! rule ([`TensorNode`]), banded breadth-first components
//! ([`connected_component`]), and the weight-space census over pairs of
//! a partition tuple and a node ([`bijection_census`]).
//!
//! Everything here is exact: operators either produce a node or vanish,
//! band truncation is recorded on the graph and in the census flags, and
//! the [`CrystalNode`] trait exposes the string statistics `eps`/`phi`
//! together with Weyl-group actions by string traversal.

pub mod census;
pub mod column;
pub mod graph;
pub mod node;
pub mod tensor;

pub use census::{bijection_census, CensusCell, CensusReport};
pub use column::{all_columns, LevelZeroFundNode};
pub use graph::{connected_component, CrystalGraph};
pub use node::{
    is_extremal, node_degree, verify_node_invariants, weyl_action, weyl_simple_reflection,
    CrystalNode,
};
pub use tensor::{tensor_e_position, tensor_f_position, TensorNode};
