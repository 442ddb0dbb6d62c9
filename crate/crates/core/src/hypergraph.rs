//! The hypergraph data model and its structural operations.
//!
//! Vertices are `0..n` internally; every text or JSON boundary uses 1-based
//! labels. Edges are deduplicated and kept in canonical order (size, then
//! lexicographic), so iteration order is a pure function of the edge set.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

#[derive(Clone)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<VertexSet>,
    incidence: Vec<Vec<usize>>,
}

impl PartialEq for Hypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Hypergraph {}

impl std::hash::Hash for Hypergraph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.edges.hash(state);
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hypergraph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}

/// Structural facts computed by definition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub vertices: usize,
    pub edges: usize,
    /// `Some(k)` when every edge has exactly `k` vertices (and there is at least one edge).
    pub uniformity: Option<usize>,
    pub max_edge_size: usize,
    pub min_edge_size: usize,
    pub is_linear: bool,
    pub is_reduced: bool,
    pub min_degree: usize,
    pub max_degree: usize,
    pub has_singleton_edges: bool,
    pub is_connected: bool,
}

/// A sub-hypergraph together with the map from its vertices back to the parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Induced {
    pub hypergraph: Hypergraph,
    /// `mapping[new] = old`.
    pub mapping: Vec<usize>,
}

impl Induced {
    pub fn to_parent(&self, set: &VertexSet) -> VertexSet {
        set.map(|v| self.mapping[v])
    }

    pub fn from_parent(&self, set: &VertexSet) -> VertexSet {
        self.mapping.iter().enumerate().filter(|(_, old)| set.contains(**old)).map(|(new, _)| new).collect()
    }
}

impl Hypergraph {
    /// Builds a hypergraph from 0-based edge lists, deduplicating and
    /// canonically ordering the edges.
    pub fn build<E, I>(n: usize, edge_lists: E) -> Result<Self>
    where
        E: IntoIterator<Item = I>,
        I: IntoIterator<Item = usize>,
    {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        let mut edges = Vec::new();
        for (index, list) in edge_lists.into_iter().enumerate() {
            let mut set = VertexSet::new();
            for v in list {
                if v >= n {
                    return Err(Error::VertexOutOfRange { label: v + 1, n });
                }
                set.insert(v);
            }
            if set.is_empty() {
                return Err(Error::EmptyEdge { index });
            }
            edges.push(set);
        }
        Ok(Self::from_canonical_parts(n, edges))
    }

    /// Like [`Hypergraph::build`] but with 1-based labels.
    pub fn from_labels<E, I>(n: usize, edge_lists: E) -> Result<Self>
    where
        E: IntoIterator<Item = I>,
        I: IntoIterator<Item = usize>,
    {
        let mut lists = Vec::new();
        for list in edge_lists {
            let mut shifted = Vec::new();
            for label in list {
                if label == 0 || label > n {
                    return Err(Error::VertexOutOfRange { label, n });
                }
                shifted.push(label - 1);
            }
            lists.push(shifted);
        }
        Self::build(n, lists)
    }

    pub fn from_sets(n: usize, edges: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        let mut out = Vec::new();
        for (index, e) in edges.into_iter().enumerate() {
            if e.is_empty() {
                return Err(Error::EmptyEdge { index });
            }
            if let Some(v) = e.last().filter(|&v| v >= n) {
                return Err(Error::VertexOutOfRange { label: v + 1, n });
            }
            out.push(e);
        }
        Ok(Self::from_canonical_parts(n, out))
    }

    pub fn trivial(n: usize) -> Result<Self> {
        Self::build(n, Vec::<Vec<usize>>::new())
    }

    fn from_canonical_parts(n: usize, mut edges: Vec<VertexSet>) -> Self {
        edges.sort();
        edges.dedup();
        let mut incidence = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            for v in e {
                incidence[v].push(i);
            }
        }
        Self { n, edges, incidence }
    }

    #[inline]
    pub fn num_vertices(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> Result<&VertexSet> {
        self.edges.get(index).ok_or(Error::EdgeIndexOutOfRange { index, edges: self.edges.len() })
    }

    /// Indices of the edges containing `v`, ascending.
    #[inline]
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn is_trivial(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn vertex_degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    /// Number of edges containing every vertex of `set`.
    pub fn degree(&self, set: &VertexSet) -> Result<usize> {
        if set.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        self.check_subset(set)?;
        Ok(self.edges_containing(set).count())
    }

    /// Edges (by index) that contain `set`. For an empty `set` this is every edge.
    pub fn edges_containing<'a>(&'a self, set: &'a VertexSet) -> impl Iterator<Item = usize> + 'a {
        let pivot = set.iter().min_by_key(|&v| self.incidence[v].len());
        let candidates: Box<dyn Iterator<Item = usize> + 'a> = match pivot {
            Some(v) => Box::new(self.incidence[v].iter().copied()),
            None => Box::new(0..self.edges.len()),
        };
        candidates.filter(move |&i| set.is_subset(&self.edges[i]))
    }

    pub(crate) fn check_subset(&self, set: &VertexSet) -> Result<()> {
        match set.last() {
            Some(v) if v >= self.n => Err(Error::VertexOutOfRange { label: v + 1, n: self.n }),
            _ => Ok(()),
        }
    }

    pub fn max_edge_size(&self) -> usize {
        self.edges.last().map_or(0, VertexSet::len)
    }

    /// `Some(k)` when the hypergraph has edges and all have size `k`.
    pub fn uniformity(&self) -> Option<usize> {
        let k = self.edges.first()?.len();
        (self.max_edge_size() == k).then_some(k)
    }

    pub fn require_uniform(&self) -> Result<usize> {
        self.uniformity().ok_or_else(|| Error::NotUniform { expected: "k".into() })
    }

    pub fn is_linear(&self) -> bool {
        self.edges.iter().enumerate().all(|(i, a)| self.edges[i + 1..].iter().all(|b| a.intersection(b).len() <= 1))
    }

    pub fn is_reduced(&self) -> bool {
        // canonical order puts any strict superset after its subsets
        self.edges.iter().enumerate().all(|(i, a)| self.edges[i + 1..].iter().all(|b| !a.is_subset(b)))
    }

    /// Connected in the sense of the line graph: at most one group of
    /// mutually reachable edges. Isolated vertices are ignored.
    pub fn is_connected(&self) -> bool {
        self.edge_component_count() <= 1
    }

    /// Number of connected groups of edges (isolated vertices excluded).
    pub fn edge_component_count(&self) -> usize {
        let mut dsu = Dsu::new(self.n);
        for e in &self.edges {
            let mut it = e.iter();
            if let Some(first) = it.next() {
                for v in it {
                    dsu.union(first, v);
                }
            }
        }
        let mut roots = VertexSet::new();
        for e in &self.edges {
            roots.insert(dsu.find(e.first().unwrap()));
        }
        roots.len()
    }

    pub fn structure(&self) -> StructureReport {
        let degrees = (0..self.n).map(|v| self.vertex_degree(v));
        StructureReport {
            vertices: self.n,
            edges: self.edges.len(),
            uniformity: self.uniformity(),
            max_edge_size: self.max_edge_size(),
            min_edge_size: self.edges.first().map_or(0, VertexSet::len),
            is_linear: self.is_linear(),
            is_reduced: self.is_reduced(),
            min_degree: degrees.clone().min().unwrap_or(0),
            max_degree: degrees.max().unwrap_or(0),
            has_singleton_edges: self.edges.first().is_some_and(|e| e.len() == 1),
            is_connected: self.is_connected(),
        }
    }

    /// Removes every edge that is a proper subset of another edge.
    pub fn reduce(&self) -> Hypergraph {
        let kept = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, a)| !self.edges[i + 1..].iter().any(|b| a.is_subset(b)))
            .map(|(_, a)| a.clone())
            .collect();
        Self::from_canonical_parts(self.n, kept)
    }

    /// Connected components, each isolated vertex forming its own trivial
    /// component. Ordered by smallest vertex.
    pub fn components(&self) -> Vec<Induced> {
        let mut dsu = Dsu::new(self.n);
        for e in &self.edges {
            let first = e.first().unwrap();
            for v in e.iter().skip(1) {
                dsu.union(first, v);
            }
        }
        let mut groups: Vec<(usize, VertexSet)> = Vec::new();
        let mut slot = vec![usize::MAX; self.n];
        for v in 0..self.n {
            let r = dsu.find(v);
            if slot[r] == usize::MAX {
                slot[r] = groups.len();
                groups.push((r, VertexSet::new()));
            }
            groups[slot[r]].1.insert(v);
        }
        groups.into_iter().map(|(_, vs)| self.induced_unchecked(&vs)).collect()
    }

    /// The sub-hypergraph on `set` whose edges are the edges lying inside `set`.
    pub fn induced(&self, set: &VertexSet) -> Result<Induced> {
        if set.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        self.check_subset(set)?;
        Ok(self.induced_unchecked(set))
    }

    fn induced_unchecked(&self, set: &VertexSet) -> Induced {
        let mapping: Vec<usize> = set.to_vec();
        let mut index = vec![usize::MAX; self.n];
        for (new, &old) in mapping.iter().enumerate() {
            index[old] = new;
        }
        let edges = self.edges.iter().filter(|e| e.is_subset(set)).map(|e| e.map(|v| index[v])).collect();
        Induced { hypergraph: Self::from_canonical_parts(mapping.len(), edges), mapping }
    }

    /// Graph on the edges of `self` (in canonical order), two adjacent when
    /// the edges intersect.
    pub fn line_graph(&self) -> Result<Hypergraph> {
        if self.edges.is_empty() {
            return Err(Error::TrivialHypergraph);
        }
        let mut pairs = Vec::new();
        for i in 0..self.edges.len() {
            for j in i + 1..self.edges.len() {
                if self.edges[i].intersects(&self.edges[j]) {
                    pairs.push(vec![i, j]);
                }
            }
        }
        Self::build(self.edges.len(), pairs)
    }

    /// Inverse of the line graph for simple graphs: one vertex per graph
    /// edge, one hyperedge per graph vertex holding its incident edges.
    /// Degree-1 graph vertices yield singleton hyperedges, which are kept.
    pub fn adjacency_hypergraph(&self) -> Result<Hypergraph> {
        if self.uniformity() != Some(2) {
            return Err(Error::NotUniform { expected: "2".into() });
        }
        if let Some(v) = (0..self.n).find(|&v| self.incidence[v].is_empty()) {
            return Err(Error::IsolatedVertex { label: v + 1 });
        }
        let edges = (0..self.n).map(|v| self.incidence[v].iter().copied().collect::<VertexSet>());
        Self::from_sets(self.edges.len(), edges)
    }

    /// Vertex-disjoint union; `other`'s vertices are shifted by `self.n`.
    pub fn disjoint_union(&self, other: &Hypergraph) -> Hypergraph {
        let shift = self.n;
        let edges = self.edges.iter().cloned().chain(other.edges.iter().map(|e| e.map(|v| v + shift))).collect();
        Self::from_canonical_parts(self.n + other.n, edges)
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Hypergraph> {
        Self::from_sets(self.n, self.edges.iter().map(|e| e.map(|v| perm[v])))
    }

    /// Edge lists with 1-based labels, canonical order.
    pub fn edge_labels(&self) -> Vec<Vec<usize>> {
        self.edges.iter().map(VertexSet::to_labels).collect()
    }
}

/// Minimal union-find used for component labelling.
struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn hg(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::from_labels(n, edges.iter().map(|e| e.iter().copied())).unwrap()
    }

    fn binomial(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn build_dedups_and_orders() {
        let h = Hypergraph::build(3, vec![vec![0, 1], vec![1, 0], vec![1, 2]]).unwrap();
        assert_eq!(h.num_edges(), 2);
        let h = Hypergraph::build(4, vec![vec![0, 1, 2], vec![3], vec![0, 3]]).unwrap();
        assert_eq!(h.edge_labels(), vec![vec![4], vec![1, 4], vec![1, 2, 3]]);
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(Hypergraph::trivial(0), Err(Error::NoVertices));
        assert!(matches!(Hypergraph::build(3, vec![vec![0], vec![]]), Err(Error::EmptyEdge { index: 1 })));
        assert!(matches!(Hypergraph::build(3, vec![vec![3]]), Err(Error::VertexOutOfRange { label: 4, n: 3 })));
        assert!(Hypergraph::from_labels(3, vec![vec![0]]).is_err());
    }

    #[test]
    fn trivial_hypergraph_is_allowed() {
        let h = Hypergraph::trivial(4).unwrap();
        assert!(h.is_trivial());
        assert_eq!(h.num_vertices(), 4);
    }

    #[test]
    fn structure_of_k4() {
        let r = families::complete(4, 2).unwrap().structure();
        assert_eq!(r.uniformity, Some(2));
        assert!(r.is_linear && r.is_reduced);
        assert_eq!(r.min_degree, 3);
    }

    #[test]
    fn subset_edge_is_not_reduced() {
        assert!(!hg(3, &[&[1, 2, 3], &[1, 2]]).structure().is_reduced);
    }

    #[test]
    fn structure_of_fano() {
        let r = crate::designs::fano().structure();
        assert!(r.is_linear);
        assert_eq!(r.uniformity, Some(3));
        assert_eq!(r.min_degree, 3);
        assert!(!r.has_singleton_edges);
    }

    #[test]
    fn degree_counts_containing_edges() {
        let fano = crate::designs::fano();
        for v in 0..7 {
            assert_eq!(fano.degree(&VertexSet::singleton(v)).unwrap(), 3);
        }
        for a in 0..7 {
            for b in a + 1..7 {
                assert_eq!(fano.degree(&VertexSet::from([a, b])).unwrap(), 1);
            }
        }
        // enumerate 3-subsets of {0..4} holding {0,1}
        let mut expected = 0;
        for a in 0..5 {
            for b in a + 1..5 {
                for c in b + 1..5 {
                    let t = [a, b, c];
                    if t.contains(&0) && t.contains(&1) {
                        expected += 1;
                    }
                }
            }
        }
        assert_eq!(expected, binomial(3, 1));
        assert_eq!(families::complete(5, 3).unwrap().degree(&VertexSet::from([0, 1])).unwrap(), expected);
        assert_eq!(fano.degree(&VertexSet::new()), Err(Error::EmptyVertexSet));
    }

    #[test]
    fn reduce_removes_subset_edges() {
        let h = hg(4, &[&[1, 2, 3], &[1, 2], &[3, 4]]);
        assert_eq!(h.reduce(), hg(4, &[&[1, 2, 3], &[3, 4]]));
        let r = h.reduce();
        assert_eq!(r.reduce(), r);
        let mut with_top = families::complete(5, 3).unwrap().edges().to_vec();
        with_top.push(VertexSet::full(5));
        let h = Hypergraph::from_sets(5, with_top).unwrap();
        assert_eq!(h.reduce().edges(), &[VertexSet::full(5)]);
    }

    #[test]
    fn components_split_and_isolate() {
        let h = hg(4, &[&[1, 2], &[3, 4]]);
        assert_eq!(h.components().len(), 2);
        assert!(!h.is_connected());
        let f = families::flower(1, &[2, 2, 2]).unwrap();
        assert_eq!(f.components().len(), 1);
        let t = Hypergraph::trivial(3).unwrap();
        let comps = t.components();
        assert_eq!(comps.len(), 3);
        assert!(comps.iter().all(|c| c.hypergraph.num_vertices() == 1 && c.hypergraph.is_trivial()));
        // isolated vertices do not break line-graph connectivity
        assert!(hg(3, &[&[1, 2]]).is_connected());
    }

    #[test]
    fn induced_subhypergraphs() {
        let fano = crate::designs::fano();
        let block = fano.edges()[0].clone();
        let ind = fano.induced(&block).unwrap();
        assert_eq!(ind.hypergraph.num_edges(), 1);
        assert_eq!(ind.hypergraph.num_vertices(), 3);
        let outside = (0..7).find(|v| !block.contains(*v)).unwrap();
        let mut w = block.clone();
        w.insert(outside);
        let scan = fano.edges().iter().filter(|e| e.is_subset(&w)).count();
        assert_eq!(fano.induced(&w).unwrap().hypergraph.num_edges(), scan);
        assert_eq!(scan, 1);
        let c53 = families::complete(5, 3).unwrap();
        let ind = c53.induced(&VertexSet::from([0, 2, 3, 4])).unwrap();
        assert_eq!(ind.hypergraph, families::complete(4, 3).unwrap());
        assert_eq!(ind.mapping, vec![0, 2, 3, 4]);
        assert_eq!(c53.induced(&VertexSet::new()).unwrap_err(), Error::EmptyVertexSet);
    }

    #[test]
    fn line_graph_examples() {
        let cyc = families::hypercycle(&[3, 3, 3, 3], &[1, 1, 1, 1]).unwrap();
        let l = cyc.line_graph().unwrap();
        assert_eq!(l.num_vertices(), 4);
        assert_eq!(l.num_edges(), 4);
        assert!((0..4).all(|v| l.vertex_degree(v) == 2));
        let f = families::flower(1, &[1, 2, 3, 1]).unwrap();
        assert_eq!(f.line_graph().unwrap(), families::complete(4, 2).unwrap());
        let two = hg(4, &[&[1, 2], &[3, 4]]).line_graph().unwrap();
        assert!(two.is_trivial() && two.num_vertices() == 2);
        assert_eq!(Hypergraph::trivial(2).unwrap().line_graph(), Err(Error::TrivialHypergraph));
    }

    #[test]
    fn adjacency_hypergraph_examples() {
        let k3 = families::complete(3, 2).unwrap();
        let a = k3.adjacency_hypergraph().unwrap();
        assert_eq!(a, families::complete(3, 2).unwrap());
        // path 1-2-3: edges e1={1,2}, e2={2,3}
        let p3 = hg(3, &[&[1, 2], &[2, 3]]);
        assert_eq!(p3.adjacency_hypergraph().unwrap(), hg(2, &[&[1], &[2], &[1, 2]]));
        // star with center 1
        let star = hg(4, &[&[1, 2], &[1, 3], &[1, 4]]);
        assert_eq!(star.adjacency_hypergraph().unwrap(), hg(3, &[&[1], &[2], &[3], &[1, 2, 3]]));
        assert!(matches!(hg(3, &[&[1, 2, 3]]).adjacency_hypergraph(), Err(Error::NotUniform { .. })));
        assert_eq!(hg(3, &[&[1, 2]]).adjacency_hypergraph(), Err(Error::IsolatedVertex { label: 3 }));
    }
}
