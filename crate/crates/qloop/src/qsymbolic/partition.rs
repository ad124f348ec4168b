//! Integer partitions and node-indexed tuples of partitions.
//!
//! A [`Partition`] is a weakly decreasing sequence of positive integers. A
//! [`PartitionTuple`] attaches one partition to each node of a finite index
//! set; tuples encode multiplicity functions on pairs `(node, k)` where `k`
//! ranges over positive part sizes, and they enumerate within bounds on the
//! total size and on the number of parts per node.

use std::fmt;

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Build from parts in any order; zeros are dropped and the rest sorted
    /// decreasingly.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of (positive) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// The `k`-th part, with zeros beyond the last part.
    pub fn part(&self, k: usize) -> u32 {
        self.parts.get(k).copied().unwrap_or(0)
    }

    /// The conjugate partition (transpose of the Young diagram).
    pub fn conjugate(&self) -> Self {
        let max = self.part(0) as usize;
        let parts = (1..=max)
            .map(|col| self.parts.iter().filter(|&&p| p as usize >= col).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Multiplicity of `k` among the parts.
    pub fn multiplicity(&self, k: u32) -> u32 {
        assert!(k > 0, "Partition::multiplicity: parts are positive");
        self.parts.iter().filter(|&&p| p == k).count() as u32
    }

    /// Build from a multiplicity list: `mults[j]` is the multiplicity of the
    /// part `j + 1`.
    pub fn from_multiplicities(mults: &[u32]) -> Self {
        let mut parts = Vec::new();
        for (j, &m) in mults.iter().enumerate() {
            for _ in 0..m {
                parts.push(j as u32 + 1);
            }
        }
        Self::new(parts)
    }

    /// Multiplicity list `[m_1, m_2, ..., m_{max part}]`.
    pub fn to_multiplicities(&self) -> Vec<u32> {
        let max = self.part(0);
        (1..=max).map(|k| self.multiplicity(k)).collect()
    }

    /// All partitions of `n`, in lexicographically decreasing order.
    pub fn all_of_size(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fn rec(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition { parts: current.clone() });
                return;
            }
            for p in (1..=remaining.min(max_part)).rev() {
                current.push(p);
                rec(remaining - p, p, current, out);
                current.pop();
            }
        }
        rec(n, n.max(1), &mut current, &mut out);
        out
    }

    /// All partitions with size at most `n` (including the empty one).
    pub fn all_up_to(n: u32) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all_of_size).collect()
    }

    /// All partitions of size at most `n` with at most `max_len` parts.
    pub fn all_bounded(n: u32, max_len: usize) -> Vec<Partition> {
        Self::all_up_to(n).into_iter().filter(|p| p.len() <= max_len).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// One partition per node of a finite index set.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PartitionTuple {
    components: Vec<Partition>,
}

impl PartitionTuple {
    pub fn new(components: Vec<Partition>) -> Self {
        PartitionTuple { components }
    }

    /// The all-empty tuple on `n` nodes.
    pub fn empty(n: usize) -> Self {
        PartitionTuple { components: vec![Partition::empty(); n] }
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Partition {
        &self.components[i]
    }

    pub fn num_nodes(&self) -> usize {
        self.components.len()
    }

    /// Sum of the sizes of all components.
    pub fn total_size(&self) -> u32 {
        self.components.iter().map(Partition::size).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.components.iter().all(Partition::is_empty)
    }

    /// Multiplicity of the pair `(node, k)`, i.e. of the part `k` in the
    /// component at `node`.
    pub fn multiplicity(&self, node: usize, k: u32) -> u32 {
        self.components[node].multiplicity(k)
    }

    /// All tuples on `num_nodes` nodes with total size at most `n` and the
    /// component at node `i` having at most `max_len[i]` parts.
    pub fn all_bounded(num_nodes: usize, n: u32, max_len: &[usize]) -> Vec<PartitionTuple> {
        assert_eq!(max_len.len(), num_nodes, "PartitionTuple::all_bounded: one bound per node");
        let mut out = vec![PartitionTuple::empty(num_nodes)];
        for (i, &ml) in max_len.iter().enumerate() {
            let mut next = Vec::new();
            for t in &out {
                let used = t.total_size();
                for p in Partition::all_bounded(n - used, ml) {
                    let mut comps = t.components.clone();
                    comps[i] = p;
                    next.push(PartitionTuple { components: comps });
                }
            }
            out = next;
        }
        out.retain(|t| t.total_size() <= n);
        out
    }
}

impl fmt::Display for PartitionTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_and_accessors() {
        let p = Partition::new(vec![0, 2, 3, 1, 0]);
        assert_eq!(p.parts(), &[3, 2, 1]);
        assert_eq!(p.size(), 6);
        assert_eq!(p.len(), 3);
        assert_eq!(p.part(0), 3);
        assert_eq!(p.part(5), 0);
    }

    #[test]
    fn conjugation_is_an_involution() {
        for p in Partition::all_up_to(7) {
            assert_eq!(p.conjugate().conjugate(), p, "conjugate twice: {p}");
            assert_eq!(p.conjugate().size(), p.size());
        }
        assert_eq!(Partition::new(vec![3, 1]).conjugate(), Partition::new(vec![2, 1, 1]));
    }

    #[test]
    fn multiplicity_round_trip() {
        for p in Partition::all_up_to(6) {
            assert_eq!(Partition::from_multiplicities(&p.to_multiplicities()), p);
        }
        let p = Partition::from_multiplicities(&[2, 0, 1]);
        assert_eq!(p.parts(), &[3, 1, 1]);
        assert_eq!(p.multiplicity(1), 2);
        assert_eq!(p.multiplicity(2), 0);
        assert_eq!(p.multiplicity(3), 1);
    }

    #[test]
    fn partition_counts() {
        // p(0..8) = 1, 1, 2, 3, 5, 7, 11, 15, 22
        let expected = [1, 1, 2, 3, 5, 7, 11, 15, 22];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(Partition::all_of_size(n as u32).len(), e, "p({n})");
        }
        // partitions of 5 with at most 2 parts: (5), (4,1), (3,2)
        assert_eq!(
            Partition::all_bounded(5, 2).iter().filter(|p| p.size() == 5).count(),
            3
        );
    }

    #[test]
    fn tuple_enumeration_bounds() {
        // Two nodes, total size <= 2, lengths <= 1: components from
        // {(), (1), (2)} with total <= 2:
        // ((),()) ((),(1)) ((),(2)) ((1),()) ((1),(1)) ((2),()) = 6
        let tuples = PartitionTuple::all_bounded(2, 2, &[1, 1]);
        assert_eq!(tuples.len(), 6);
        for t in &tuples {
            assert!(t.total_size() <= 2);
            assert!(t.component(0).len() <= 1);
            assert!(t.component(1).len() <= 1);
        }
        let empty = PartitionTuple::empty(2);
        assert!(tuples.contains(&empty));
    }
}
