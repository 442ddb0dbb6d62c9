//! Generators for the parametric hypergraph families.
//!
//! All generators label vertices deterministically, so writing the result
//! to disk is byte-stable.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}

/// A family member described by its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    Complete { n: usize, k: usize },
    Multipartite { parts: Vec<usize> },
    Flower { core_size: usize, petal_extra_sizes: Vec<usize> },
    /// Intervals as 1-based `(start, len)`.
    Interval { n: usize, intervals: Vec<(usize, usize)> },
    Hypercycle { edge_sizes: Vec<usize>, overlap_sizes: Vec<usize> },
    TightCycle { n: usize, k: usize, t: usize },
    AugmentedComplete { n: usize, k: usize },
    Trivial { n: usize },
}

impl FamilySpec {
    pub fn build(&self) -> Result<Hypergraph> {
        match self {
            FamilySpec::Complete { n, k } => complete(*n, *k),
            FamilySpec::Multipartite { parts } => complete_multipartite(parts),
            FamilySpec::Flower { core_size, petal_extra_sizes } => flower(*core_size, petal_extra_sizes),
            FamilySpec::Interval { n, intervals } => interval(*n, intervals),
            FamilySpec::Hypercycle { edge_sizes, overlap_sizes } => hypercycle(edge_sizes, overlap_sizes),
            FamilySpec::TightCycle { n, k, t } => tight_cycle(*n, *k, *t),
            FamilySpec::AugmentedComplete { n, k } => augmented_complete(*n, *k),
            FamilySpec::Trivial { n } => trivial(*n),
        }
    }
}

/// Calls `f` with every `k`-subset of `0..n` in lexicographic order.
pub fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else { return };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

pub fn k_subsets(n: usize, k: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    for_each_subset(n, k, |s| out.push(VertexSet::from(s)));
    out
}

/// All `k`-subsets of `n` vertices.
pub fn complete(n: usize, k: usize) -> Result<Hypergraph> {
    if k == 0 || k > n {
        return Err(bad(format!("complete needs 1 <= k <= n, got n={n}, k={k}")));
    }
    Hypergraph::from_sets(n, k_subsets(n, k))
}

/// Parts occupy consecutive label blocks; each edge takes one vertex per part.
pub fn complete_multipartite(parts: &[usize]) -> Result<Hypergraph> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(bad("multipartite needs at least one part, each nonempty"));
    }
    let n: usize = parts.iter().sum();
    let offsets: Vec<usize> = parts.iter().scan(0, |acc, &p| {
        let o = *acc;
        *acc += p;
        Some(o)
    }).collect();
    let mut edges = vec![VertexSet::new()];
    for (&size, &off) in parts.iter().zip(&offsets) {
        edges = edges
            .iter()
            .flat_map(|e| (0..size).map(move |i| {
                let mut e = e.clone();
                e.insert(off + i);
                e
            }))
            .collect();
    }
    Hypergraph::from_sets(n, edges)
}

/// Petals `core ∪ private_i`; the core is `0..core_size`, private blocks follow.
pub fn flower(core_size: usize, petal_extra_sizes: &[usize]) -> Result<Hypergraph> {
    if core_size == 0 || petal_extra_sizes.len() < 2 || petal_extra_sizes.contains(&0) {
        return Err(bad("flower needs a nonempty core, at least 2 petals, each with a private vertex"));
    }
    let core = VertexSet::range(0, core_size);
    let mut next = core_size;
    let mut edges = Vec::new();
    for &extra in petal_extra_sizes {
        edges.push(core.union(&VertexSet::range(next, next + extra)));
        next += extra;
    }
    Hypergraph::from_sets(next, edges)
}

/// Edges are runs `start..start+len` (1-based starts).
pub fn interval(n: usize, intervals: &[(usize, usize)]) -> Result<Hypergraph> {
    let mut edges = Vec::new();
    for &(start, len) in intervals {
        if start == 0 || len == 0 || start + len - 1 > n {
            return Err(bad(format!("interval ({start}, {len}) does not fit in 1..={n}")));
        }
        edges.push(VertexSet::range(start - 1, start - 1 + len));
    }
    Hypergraph::from_sets(n, edges)
}

/// `r >= 3` edges arranged in a ring; `overlap_sizes[i]` is `|E_i ∩ E_{i+1}|`.
///
/// Vertices are laid out as private block `P_0`, shared block `O_0`, `P_1`,
/// `O_1`, ..., so `E_i = O_{i-1} ∪ P_i ∪ O_i`.
pub fn hypercycle(edge_sizes: &[usize], overlap_sizes: &[usize]) -> Result<Hypergraph> {
    let r = edge_sizes.len();
    if r < 3 || overlap_sizes.len() != r {
        return Err(bad("hypercycle needs at least 3 edges and one overlap per edge"));
    }
    if overlap_sizes.contains(&0) {
        return Err(bad("consecutive hypercycle edges must overlap"));
    }
    let mut private = Vec::with_capacity(r);
    for i in 0..r {
        let shared = overlap_sizes[(i + r - 1) % r] + overlap_sizes[i];
        if edge_sizes[i] < shared {
            return Err(bad(format!("edge {} of size {} cannot hold overlaps totalling {shared}", i + 1, edge_sizes[i])));
        }
        private.push(edge_sizes[i] - shared);
    }
    let mut blocks = Vec::with_capacity(r);
    let mut next = 0;
    for i in 0..r {
        let p = VertexSet::range(next, next + private[i]);
        next += private[i];
        let o = VertexSet::range(next, next + overlap_sizes[i]);
        next += overlap_sizes[i];
        blocks.push((p, o));
    }
    let edges = (0..r).map(|i| blocks[(i + r - 1) % r].1.union(&blocks[i].0).union(&blocks[i].1));
    Hypergraph::from_sets(next, edges)
}

/// Arcs of length `k` starting at every multiple of `k - t` around a cycle of `n` vertices.
pub fn tight_cycle(n: usize, k: usize, t: usize) -> Result<Hypergraph> {
    if !(1 <= t && t < k && k <= n) {
        return Err(bad(format!("tight cycle needs 1 <= t < k <= n, got n={n}, k={k}, t={t}")));
    }
    let step = k - t;
    if !n.is_multiple_of(step) {
        return Err(bad(format!("k - t = {step} must divide n = {n}")));
    }
    let edges = (0..n / step).map(|i| (0..k).map(|j| (i * step + j) % n).collect::<VertexSet>());
    Hypergraph::from_sets(n, edges)
}

/// The `(k-1)`-subsets of the first `n-1` vertices, each joined with the last vertex.
pub fn augmented_complete(n: usize, k: usize) -> Result<Hypergraph> {
    if !(2 <= k && k <= n) {
        return Err(bad(format!("augmented complete needs 2 <= k <= n, got n={n}, k={k}")));
    }
    let edges = k_subsets(n - 1, k - 1).into_iter().map(|mut s| {
        s.insert(n - 1);
        s
    });
    Hypergraph::from_sets(n, edges)
}

pub fn trivial(n: usize) -> Result<Hypergraph> {
    Hypergraph::trivial(n)
}

pub fn path_graph(n: usize) -> Result<Hypergraph> {
    Hypergraph::build(n, (1..n).map(|i| [i - 1, i]))
}

pub fn cycle_graph(n: usize) -> Result<Hypergraph> {
    if n < 3 {
        return Err(bad("cycle needs at least 3 vertices"));
    }
    Hypergraph::build(n, (0..n).map(|i| [i, (i + 1) % n]))
}

/// A `k`-uniform superset of `h` with infection number 1.
///
/// Layer by layer, the current layer is covered by blocks of `k - 1`
/// vertices and each block gets one fresh vertex; the fresh vertices form
/// the next layer. Stops once a layer has a single vertex. A short final
/// block is padded with the lowest other vertices of its layer, then with
/// the lowest vertices overall.
pub fn infection_one_extension(h: &Hypergraph) -> Result<Hypergraph> {
    let k = h.require_uniform()?;
    if k < 3 {
        return Err(bad(format!("the layered extension needs k >= 3 (k = {k} never converges)")));
    }
    let width = k - 1;
    let mut edges: Vec<VertexSet> = h.edges().to_vec();
    let mut next = h.num_vertices();
    let mut layer: Vec<usize> = (0..next).collect();
    while layer.len() > 1 {
        let mut fresh = Vec::new();
        let base = next;
        for chunk in layer.chunks(width) {
            let mut block: VertexSet = chunk.iter().copied().collect();
            let padding = layer.iter().copied().chain(0..base);
            for v in padding {
                if block.len() == width {
                    break;
                }
                block.insert(v);
            }
            block.insert(next);
            fresh.push(next);
            edges.push(block);
            next += 1;
        }
        layer = fresh;
    }
    Hypergraph::from_sets(next, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_are_lexicographic() {
        let mut seen = Vec::new();
        for_each_subset(4, 2, |s| seen.push(s.to_vec()));
        assert_eq!(seen, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        let mut count = 0;
        for_each_subset(5, 0, |_| count += 1);
        assert_eq!(count, 1);
        for_each_subset(2, 3, |_| panic!("no 3-subsets of 2"));
    }

    #[test]
    fn complete_edge_counts() {
        assert_eq!(complete(4, 2).unwrap().num_edges(), 6);
        assert_eq!(complete(5, 5).unwrap().num_edges(), 1);
        assert_eq!(complete(6, 3).unwrap().num_edges(), 20);
        assert!(complete(3, 4).is_err());
        assert!(complete(3, 0).is_err());
    }

    #[test]
    fn multipartite_edges() {
        let h = complete_multipartite(&[2, 3]).unwrap();
        assert_eq!(h.num_edges(), 6);
        assert_eq!(h.uniformity(), Some(2));
        assert_eq!(complete_multipartite(&[1, 1, 1]).unwrap().num_edges(), 1);
        assert_eq!(complete_multipartite(&[2, 2, 2]).unwrap().num_edges(), 8);
        assert!(complete_multipartite(&[]).is_err());
    }

    #[test]
    fn flower_petals_meet_in_core() {
        let h = flower(2, &[1, 3, 2]).unwrap();
        assert_eq!(h.num_vertices(), 8);
        let core = VertexSet::from([0, 1]);
        let e = h.edges();
        for i in 0..e.len() {
            for j in i + 1..e.len() {
                assert_eq!(e[i].intersection(&e[j]), core);
            }
        }
        assert!(flower(1, &[2]).is_err());
        assert!(flower(0, &[1, 1]).is_err());
    }

    #[test]
    fn interval_runs() {
        let h = interval(6, &[(1, 3), (3, 3), (5, 2)]).unwrap();
        assert_eq!(h.edge_labels(), vec![vec![5, 6], vec![1, 2, 3], vec![3, 4, 5]]);
        assert!(interval(4, &[(3, 3)]).is_err());
    }

    #[test]
    fn hypercycle_structure() {
        let h = hypercycle(&[3, 3, 3, 3], &[1, 1, 1, 1]).unwrap();
        assert_eq!(h.num_vertices(), 8);
        let e = h.edges();
        for i in 0..4 {
            for j in i + 1..4 {
                let meet = e[i].intersects(&e[j]);
                let li = h.line_graph().unwrap();
                assert_eq!(meet, li.edges().contains(&VertexSet::from([i, j])));
            }
        }
        assert!((0..8).all(|v| h.vertex_degree(v) <= 2));
        let tri = hypercycle(&[2, 2, 2], &[1, 1, 1]).unwrap();
        assert_eq!(tri, complete(3, 2).unwrap());
        assert!(hypercycle(&[2, 2, 2], &[1, 2, 1]).is_err());
        assert!(hypercycle(&[3, 3], &[1, 1]).is_err());
    }

    #[test]
    fn tight_cycle_arcs() {
        let h = tight_cycle(8, 3, 1).unwrap();
        assert_eq!(
            h.edge_labels(),
            vec![vec![1, 2, 3], vec![1, 7, 8], vec![3, 4, 5], vec![5, 6, 7]]
        );
        assert!(tight_cycle(7, 3, 1).is_err());
        assert!(tight_cycle(5, 3, 3).is_err());
        assert_eq!(tight_cycle(4, 3, 2).unwrap(), complete(4, 3).unwrap());
    }

    #[test]
    fn augmented_complete_edges() {
        let h = augmented_complete(4, 3).unwrap();
        assert_eq!(h.edge_labels(), vec![vec![1, 2, 4], vec![1, 3, 4], vec![2, 3, 4]]);
        assert!(augmented_complete(3, 1).is_err());
    }

    #[test]
    fn extension_contains_original_and_is_uniform() {
        for h in [complete(4, 3).unwrap(), complete(3, 3).unwrap(), complete(6, 4).unwrap()] {
            let x = infection_one_extension(&h).unwrap();
            let k = h.uniformity().unwrap();
            assert_eq!(x.uniformity(), Some(k));
            assert!(h.edges().iter().all(|e| x.edges().contains(e)));
            // the last vertex added has degree one
            assert_eq!(x.vertex_degree(x.num_vertices() - 1), 1);
        }
        assert!(infection_one_extension(&complete(4, 2).unwrap()).is_err());
        assert!(infection_one_extension(&trivial(3).unwrap()).is_err());
    }

    #[test]
    fn spec_round_trip() {
        let spec = FamilySpec::TightCycle { n: 6, k: 4, t: 3 };
        let json = serde_json::to_string(&spec).unwrap();
        assert_eq!(serde_json::from_str::<FamilySpec>(&json).unwrap(), spec);
        assert_eq!(spec.build().unwrap(), tight_cycle(6, 4, 3).unwrap());
    }
}
