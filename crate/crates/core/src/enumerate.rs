//! Exhaustive enumeration of small hypergraphs, labeled or up to isomorphism.
//!
//! Edges are bitmasks over at most 8 vertices. A canonical form is the
//! lexicographically smallest sorted mask list over all vertex orders that
//! respect a colour-refinement partition, which is exact (no false merges)
//! and fast enough for the desk-scale sweeps used in tests.

use std::collections::HashSet;

use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

pub const MAX_VERTICES: usize = 8;

type Mask = u8;

fn mask_of(e: &VertexSet) -> Mask {
    e.iter().fold(0, |m, v| m | 1 << v)
}

fn set_of(mask: Mask) -> VertexSet {
    (0..MAX_VERTICES).filter(|b| mask >> b & 1 == 1).collect()
}

fn to_hypergraph(n: usize, masks: &[Mask]) -> Hypergraph {
    Hypergraph::from_sets(n, masks.iter().map(|&m| set_of(m))).expect("masks are valid edges")
}

/// Isomorphism-invariant key of a hypergraph on at most 8 vertices.
pub fn canonical_form(h: &Hypergraph) -> Vec<u8> {
    assert!(h.num_vertices() <= MAX_VERTICES, "canonical_form supports at most {MAX_VERTICES} vertices");
    let masks: Vec<Mask> = h.edges().iter().map(mask_of).collect();
    let mut key = vec![h.num_vertices() as u8];
    key.extend(canonical_masks(h.num_vertices(), &masks));
    key
}

pub fn is_isomorphic(a: &Hypergraph, b: &Hypergraph) -> bool {
    canonical_form(a) == canonical_form(b)
}

/// Stable vertex colours after a few rounds of refinement.
fn refine(n: usize, masks: &[Mask]) -> Vec<usize> {
    let mut colour = vec![0usize; n];
    for _ in 0..3 {
        let mut sigs: Vec<(usize, Vec<Vec<usize>>)> = (0..n)
            .map(|v| {
                let mut around: Vec<Vec<usize>> = masks
                    .iter()
                    .filter(|&&m| m >> v & 1 == 1)
                    .map(|&m| {
                        let mut inside: Vec<usize> = (0..n).filter(|u| m >> u & 1 == 1).map(|u| colour[u]).collect();
                        inside.sort_unstable();
                        inside
                    })
                    .collect();
                around.sort();
                (colour[v], around)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs.iter().map(|s| distinct.binary_search(s).unwrap()).collect();
        let stable = next.iter().collect::<HashSet<_>>().len() == colour.iter().collect::<HashSet<_>>().len();
        colour = next;
        sigs.clear();
        if stable {
            break;
        }
    }
    colour
}

fn canonical_masks(n: usize, masks: &[Mask]) -> Vec<Mask> {
    let colour = refine(n, masks);
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| colour[v]);
    for v in order {
        match cells.last_mut() {
            Some(cell) if colour[cell[0]] == colour[v] => cell.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut best: Option<Vec<Mask>> = None;
    let mut position = vec![0usize; n];
    arrange(&mut cells, 0, 0, &mut position, &mut |pos| {
        let mut mapped: Vec<Mask> = masks
            .iter()
            .map(|&m| (0..n).filter(|v| m >> v & 1 == 1).fold(0, |acc, v| acc | 1 << pos[v]))
            .collect();
        mapped.sort_unstable();
        if best.as_ref().is_none_or(|b| mapped < *b) {
            best = Some(mapped);
        }
    });
    best.unwrap_or_default()
}

/// Visits every assignment of positions that keeps cells in order.
fn arrange(cells: &mut [Vec<usize>], cell: usize, next: usize, position: &mut [usize], visit: &mut impl FnMut(&[usize])) {
    if cell == cells.len() {
        visit(position);
        return;
    }
    let len = cells[cell].len();
    permute(cells, cell, 0, len, next, position, visit);
}

fn permute(
    cells: &mut [Vec<usize>],
    cell: usize,
    i: usize,
    len: usize,
    next: usize,
    position: &mut [usize],
    visit: &mut impl FnMut(&[usize]),
) {
    if i == len {
        for (j, &v) in cells[cell].iter().enumerate() {
            position[v] = next + j;
        }
        arrange(cells, cell + 1, next + len, position, visit);
        return;
    }
    for j in i..len {
        cells[cell].swap(i, j);
        permute(cells, cell, i + 1, len, next, position, visit);
        cells[cell].swap(i, j);
    }
}

/// Isomorphism classes of hypergraphs on exactly `n` vertices (isolated
/// vertices allowed) whose edges are drawn from `allowed` and which satisfy
/// `compatible(existing_edges, new_edge)` for every edge added.
///
/// Classes are grown one edge at a time from the empty hypergraph; a class is
/// reachable as long as `compatible` is hereditary (closed under deleting
/// edges), which holds for all uses here.
pub fn classes_by_edges(n: usize, allowed: &[VertexSet], compatible: impl Fn(&[VertexSet], &VertexSet) -> bool) -> Vec<Hypergraph> {
    assert!(n <= MAX_VERTICES);
    let allowed: Vec<Mask> = allowed.iter().map(mask_of).collect();
    let mut seen: HashSet<Vec<Mask>> = HashSet::new();
    let mut frontier: Vec<Vec<Mask>> = vec![Vec::new()];
    seen.insert(Vec::new());
    let mut out = vec![Vec::new()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for state in &frontier {
            let edges: Vec<VertexSet> = state.iter().map(|&m| set_of(m)).collect();
            for &cand in &allowed {
                if state.contains(&cand) || !compatible(&edges, &set_of(cand)) {
                    continue;
                }
                let mut grown = state.clone();
                grown.push(cand);
                let key = canonical_masks(n, &grown);
                if seen.insert(key.clone()) {
                    out.push(key.clone());
                    next.push(key);
                }
            }
        }
        frontier = next;
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out.iter().map(|m| to_hypergraph(n, m)).collect()
}

fn nonempty_subsets(n: usize) -> Vec<VertexSet> {
    (1..1u16 << n).map(|m| set_of(m as Mask)).collect()
}

/// Reduced hypergraphs (antichains of nonempty sets) on `n` vertices, up to
/// isomorphism; includes the trivial one.
pub fn reduced_hypergraphs(n: usize) -> Vec<Hypergraph> {
    classes_by_edges(n, &nonempty_subsets(n), |edges, e| edges.iter().all(|f| !f.is_subset(e) && !e.is_subset(f)))
}

/// `k`-uniform hypergraphs on `n` vertices up to isomorphism, trivial included.
pub fn uniform_hypergraphs(n: usize, k: usize) -> Vec<Hypergraph> {
    let allowed: Vec<VertexSet> = nonempty_subsets(n).into_iter().filter(|e| e.len() == k).collect();
    classes_by_edges(n, &allowed, |_, _| true)
}

/// Simple graphs on `n` vertices up to isomorphism.
pub fn graphs(n: usize) -> Vec<Hypergraph> {
    uniform_hypergraphs(n, 2)
}

/// Connected simple graphs on `n >= 2` vertices (no isolated vertices).
pub fn connected_graphs(n: usize) -> Vec<Hypergraph> {
    graphs(n)
        .into_iter()
        .filter(|g| g.is_connected() && (0..n).all(|v| g.vertex_degree(v) > 0))
        .collect()
}

/// Every hypergraph on `n <= 4` labeled vertices: all subsets of the
/// nonempty vertex subsets, in mask order.
pub fn all_labeled(n: usize) -> impl Iterator<Item = Hypergraph> {
    assert!((1..=4).contains(&n), "labeled enumeration is for 1..=4 vertices");
    let subsets = nonempty_subsets(n);
    let count = subsets.len();
    (0u64..1 << count).map(move |pick| {
        let edges = (0..count).filter(|b| pick >> b & 1 == 1).map(|b| subsets[b].clone());
        Hypergraph::from_sets(n, edges).expect("valid edges")
    })
}
