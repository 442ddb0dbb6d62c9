//! Seeded random instances for property sweeps. All generators take an
//! explicit RNG so a `(seed, index)` pair always reproduces the same instance.

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::families;
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

pub type InstanceRng = ChaCha8Rng;

pub fn rng(seed: u64) -> InstanceRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Up to `max_edges` random edges with sizes in `1..=max_size`.
pub fn hypergraph(rng: &mut impl Rng, n: usize, max_edges: usize, max_size: usize) -> Hypergraph {
    let count = rng.gen_range(0..=max_edges);
    let edges: Vec<VertexSet> = (0..count)
        .map(|_| {
            let size = rng.gen_range(1..=max_size.min(n));
            random_subset(rng, n, size)
        })
        .collect();
    Hypergraph::from_sets(n, edges).expect("random edges are valid")
}

/// A hypergraph with at least one edge.
pub fn nontrivial_hypergraph(rng: &mut impl Rng, n: usize, max_edges: usize, max_size: usize) -> Hypergraph {
    loop {
        let h = hypergraph(rng, n, max_edges.max(1), max_size);
        if !h.is_trivial() {
            return h;
        }
    }
}

/// `count` random `k`-subsets (duplicates collapse).
pub fn uniform_hypergraph(rng: &mut impl Rng, n: usize, k: usize, count: usize) -> Hypergraph {
    let edges: Vec<VertexSet> = (0..count.max(1)).map(|_| random_subset(rng, n, k)).collect();
    Hypergraph::from_sets(n, edges).expect("random edges are valid")
}

pub fn random_subset(rng: &mut impl Rng, n: usize, size: usize) -> VertexSet {
    let mut all: Vec<usize> = (0..n).collect();
    all.partial_shuffle(rng, size).0.iter().copied().collect()
}

/// Random intervals `(start, len)` (1-based) on a path of `n` vertices.
pub fn interval_instance(rng: &mut impl Rng, n: usize, max_intervals: usize) -> (Vec<(usize, usize)>, Hypergraph) {
    let count = rng.gen_range(1..=max_intervals);
    let intervals: Vec<(usize, usize)> = (0..count)
        .map(|_| {
            let start = rng.gen_range(1..=n);
            let len = rng.gen_range(1..=(n - start + 1).min(4));
            (start, len)
        })
        .collect();
    let h = families::interval(n, &intervals).expect("intervals fit");
    (intervals, h)
}

/// Erdős–Rényi graph `G(n, p)` as a 2-uniform hypergraph.
pub fn graph(rng: &mut impl Rng, n: usize, p: f64) -> Hypergraph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push(VertexSet::from([a, b]));
            }
        }
    }
    Hypergraph::from_sets(n, edges).expect("graph edges are valid")
}
