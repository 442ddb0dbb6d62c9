//! Hypergraph products and corona constructions.
//!
//! Every constructor returns a [`Product`]: the hypergraph plus a record of
//! where each of its vertices came from.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

/// Provenance of one vertex of a product (0-based indices).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Origin {
    /// Vertex `vertex` of factor number `factor`.
    Factor { factor: usize, vertex: usize },
    /// Vertex `vertex` of the copy attached to base vertex `anchor`.
    Copy { anchor: usize, vertex: usize },
    /// Cartesian coordinate.
    Pair { g: usize, h: usize },
    /// The added universal vertex of a join.
    Apex,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProductLabeling {
    pub origins: Vec<Origin>,
}

impl ProductLabeling {
    pub fn origin(&self, v: usize) -> Option<Origin> {
        self.origins.get(v).copied()
    }

    /// Inverse lookup.
    pub fn vertex_of(&self, origin: Origin) -> Option<usize> {
        self.origins.iter().position(|&o| o == origin)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Product {
    pub hypergraph: Hypergraph,
    pub labeling: ProductLabeling,
}

fn require_edges(h: &Hypergraph, what: &str) -> Result<()> {
    if h.is_trivial() {
        Err(Error::InvalidParameters(format!("{what} must have at least one edge")))
    } else {
        Ok(())
    }
}

fn shifted(e: &VertexSet, by: usize) -> VertexSet {
    e.map(|v| v + by)
}

/// Vertex-disjoint union of the factors with edges `E1 ∪ E2`; `h2` is
/// relabelled after `h1`.
pub fn direct_product(h1: &Hypergraph, h2: &Hypergraph) -> Result<Product> {
    direct_product_all(&[h1.clone(), h2.clone()])
}

/// Direct product of any number of factors, laid out in order.
pub fn direct_product_all(factors: &[Hypergraph]) -> Result<Product> {
    if factors.is_empty() {
        return Err(Error::InvalidParameters("direct product needs at least one factor".into()));
    }
    for (i, f) in factors.iter().enumerate() {
        require_edges(f, &format!("factor {}", i + 1))?;
    }
    let mut origins = Vec::new();
    let mut edges: Vec<VertexSet> = vec![VertexSet::new()];
    for (i, f) in factors.iter().enumerate() {
        let offset = origins.len();
        origins.extend((0..f.num_vertices()).map(|v| Origin::Factor { factor: i, vertex: v }));
        edges = edges
            .iter()
            .flat_map(|acc| f.edges().iter().map(move |e| acc.union(&shifted(e, offset))))
            .collect();
    }
    let hypergraph = Hypergraph::from_sets(origins.len(), edges)?;
    Ok(Product { hypergraph, labeling: ProductLabeling { origins } })
}

/// `H × H₁¹`: a new last vertex added to every edge.
pub fn join_universal_vertex(h: &Hypergraph) -> Result<Product> {
    require_edges(h, "hypergraph")?;
    let n = h.num_vertices();
    let edges = h.edges().iter().map(|e| {
        let mut e = e.clone();
        e.insert(n);
        e
    });
    let hypergraph = Hypergraph::from_sets(n + 1, edges)?;
    let mut origins: Vec<Origin> = (0..n).map(|v| Origin::Factor { factor: 0, vertex: v }).collect();
    origins.push(Origin::Apex);
    Ok(Product { hypergraph, labeling: ProductLabeling { origins } })
}

fn corona_layout(g: &Hypergraph, h: &Hypergraph) -> Vec<Origin> {
    let mut origins: Vec<Origin> = (0..g.num_vertices()).map(|v| Origin::Factor { factor: 0, vertex: v }).collect();
    for anchor in 0..g.num_vertices() {
        origins.extend((0..h.num_vertices()).map(|v| Origin::Copy { anchor, vertex: v }));
    }
    origins
}

/// Base index of the copy of `H` attached to `anchor`.
fn copy_offset(g: &Hypergraph, h: &Hypergraph, anchor: usize) -> usize {
    g.num_vertices() + anchor * h.num_vertices()
}

/// Weak corona of a `k`-uniform `g` with a `(k-1)`-uniform `h`: each vertex
/// of `g` is added to every edge of its own copy of `h`.
pub fn weak_corona(g: &Hypergraph, h: &Hypergraph) -> Result<Product> {
    require_edges(g, "G")?;
    require_edges(h, "H")?;
    let k = g.require_uniform()?;
    let kh = h.require_uniform()?;
    if kh + 1 != k {
        return Err(Error::NotUniform { expected: format!("{} (one less than G)", k - 1) });
    }
    let mut edges: Vec<VertexSet> = g.edges().to_vec();
    for anchor in 0..g.num_vertices() {
        let off = copy_offset(g, h, anchor);
        edges.extend(h.edges().iter().map(|e| {
            let mut e = shifted(e, off);
            e.insert(anchor);
            e
        }));
    }
    let origins = corona_layout(g, h);
    let hypergraph = Hypergraph::from_sets(origins.len(), edges)?;
    Ok(Product { hypergraph, labeling: ProductLabeling { origins } })
}

/// Edges of `h` together with `F ∪ {v}` for every `(k-1)`-subset `F` of an
/// edge, before deduplication. `v` is a new last vertex.
fn strong_join_edges(h: &Hypergraph, offset: usize, v: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    for e in h.edges() {
        let e = shifted(e, offset);
        for drop in e.iter() {
            let mut f = e.clone();
            f.remove(drop);
            f.insert(v);
            out.push(f);
        }
        out.push(e);
    }
    out
}

/// Strong join `H ▽ v` of a `k`-uniform `h` with a new vertex `n`.
pub fn strong_join(h: &Hypergraph) -> Result<Product> {
    require_edges(h, "hypergraph")?;
    h.require_uniform()?;
    let n = h.num_vertices();
    let hypergraph = Hypergraph::from_sets(n + 1, strong_join_edges(h, 0, n))?;
    let mut origins: Vec<Origin> = (0..n).map(|v| Origin::Factor { factor: 0, vertex: v }).collect();
    origins.push(Origin::Apex);
    Ok(Product { hypergraph, labeling: ProductLabeling { origins } })
}

/// Strong corona of `g` with `h`, both `k`-uniform: each vertex `x` of `g`
/// gets a disjoint copy `H_x` together with the strong join `H_x ▽ x`.
pub fn strong_corona(g: &Hypergraph, h: &Hypergraph) -> Result<Product> {
    let edges = strong_corona_edge_list(g, h)?;
    let origins = corona_layout(g, h);
    let hypergraph = Hypergraph::from_sets(origins.len(), edges)?;
    Ok(Product { hypergraph, labeling: ProductLabeling { origins } })
}

/// Edges of the strong corona as generated, repeats included.
pub fn strong_corona_edge_list(g: &Hypergraph, h: &Hypergraph) -> Result<Vec<VertexSet>> {
    strong_corona_params(g, h)?;
    let mut edges: Vec<VertexSet> = g.edges().to_vec();
    for anchor in 0..g.num_vertices() {
        edges.extend(strong_join_edges(h, copy_offset(g, h, anchor), anchor));
    }
    Ok(edges)
}

fn strong_corona_params(g: &Hypergraph, h: &Hypergraph) -> Result<(usize, usize)> {
    require_edges(g, "G")?;
    require_edges(h, "H")?;
    let k = g.require_uniform()?;
    if h.uniformity() != Some(k) {
        return Err(Error::NotUniform { expected: k.to_string() });
    }
    Ok((k, h.num_edges()))
}

/// Edge count of the strong corona counted with multiplicity:
/// `|E(G)| + |V(G)| |E(H)| (k + 1)`.
pub fn strong_corona_edge_formula(g: &Hypergraph, h: &Hypergraph) -> Result<usize> {
    let (k, eh) = strong_corona_params(g, h)?;
    Ok(g.num_edges() + g.num_vertices() * eh * (k + 1))
}

/// Cartesian product; vertex `(g, h)` is `g * |V(H)| + h`.
pub fn cartesian_product(g: &Hypergraph, h: &Hypergraph) -> Result<Product> {
    require_edges(g, "G")?;
    require_edges(h, "H")?;
    let (ng, nh) = (g.num_vertices(), h.num_vertices());
    let at = |x: usize, y: usize| x * nh + y;
    let mut edges = Vec::new();
    for e in g.edges() {
        for y in 0..nh {
            edges.push(e.map(|x| at(x, y)));
        }
    }
    for x in 0..ng {
        for e in h.edges() {
            edges.push(e.map(|y| at(x, y)));
        }
    }
    let origins = (0..ng).flat_map(|x| (0..nh).map(move |y| Origin::Pair { g: x, h: y })).collect();
    let hypergraph = Hypergraph::from_sets(ng * nh, edges)?;
    Ok(Product { hypergraph, labeling: ProductLabeling { origins } })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::solver::infection_number;

    fn hg(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::from_labels(n, edges.iter().map(|e| e.iter().copied())).unwrap()
    }

    fn inum(h: &Hypergraph) -> usize {
        infection_number(h, 1).unwrap().infection_number
    }

    #[test]
    fn direct_product_of_singletons_is_multipartite() {
        let p = direct_product(&families::complete(2, 1).unwrap(), &families::complete(3, 1).unwrap()).unwrap();
        assert_eq!(p.hypergraph, families::complete_multipartite(&[2, 3]).unwrap());
        assert_eq!(inum(&p.hypergraph), 3);
        let k1 = families::complete(3, 1).unwrap();
        let p = direct_product_all(&[k1.clone(), k1.clone(), k1]).unwrap();
        assert_eq!(p.hypergraph, families::complete_multipartite(&[3, 3, 3]).unwrap());
        assert_eq!(inum(&p.hypergraph), 6);
        assert_eq!(p.labeling.origin(4), Some(Origin::Factor { factor: 1, vertex: 1 }));
    }

    #[test]
    fn direct_product_rejects_trivial_factor() {
        let t = Hypergraph::trivial(2).unwrap();
        assert!(direct_product(&t, &families::complete(3, 2).unwrap()).is_err());
    }

    #[test]
    fn join_example() {
        let h = hg(4, &[&[1, 2], &[3, 4]]);
        let j = join_universal_vertex(&h).unwrap();
        assert_eq!(j.hypergraph, hg(5, &[&[1, 2, 5], &[3, 4, 5]]));
        assert_eq!(inum(&h), 2);
        assert_eq!(inum(&j.hypergraph), 1);
        assert_eq!(j.labeling.vertex_of(Origin::Apex), Some(4));
    }

    #[test]
    fn weak_corona_shapes() {
        let g = families::cycle_graph(3).unwrap();
        let h = hg(2, &[&[1], &[2]]);
        let c = weak_corona(&g, &h).unwrap();
        assert_eq!(c.hypergraph.num_vertices(), 9);
        assert_eq!(c.hypergraph.num_edges(), 3 + 6);
        assert!(c.hypergraph.edges().iter().any(|e| *e == VertexSet::from([0, 3])));
        assert_eq!(inum(&c.hypergraph), 3);
        assert!(weak_corona(&g, &g).is_err());

        let single = weak_corona(&hg(3, &[&[1, 2, 3]]), &hg(2, &[&[1, 2]])).unwrap();
        assert_eq!(inum(&single.hypergraph), 1);
    }

    #[test]
    fn strong_corona_counts() {
        let e = hg(2, &[&[1, 2]]);
        assert_eq!(strong_corona_edge_formula(&e, &e).unwrap(), 7);
        let c = strong_corona(&e, &e).unwrap();
        assert_eq!(c.hypergraph.num_vertices(), 6);
        // distinct pre-dedup edges; each copy edge and its two joins are distinct
        assert_eq!(c.hypergraph.num_edges(), 7);
        assert!(strong_corona(&e, &hg(3, &[&[1, 2, 3]])).is_err());
    }

    #[test]
    fn strong_corona_bound_on_triangle() {
        let g = families::cycle_graph(3).unwrap();
        let h = hg(2, &[&[1, 2]]);
        let c = strong_corona(&g, &h).unwrap();
        let (ig, ih) = (inum(&g), inum(&h));
        assert!(inum(&c.hypergraph) <= ig * h.num_vertices() + (g.num_vertices() - ig) * ih);
    }

    #[test]
    fn strong_join_adds_subsets() {
        let j = strong_join(&hg(3, &[&[1, 2, 3]])).unwrap();
        assert_eq!(j.hypergraph.num_edges(), 4);
        assert!(strong_join(&hg(3, &[&[1, 2], &[1, 2, 3]])).is_err());
    }

    #[test]
    fn cartesian_examples() {
        let e = hg(2, &[&[1, 2]]);
        let c = cartesian_product(&e, &e).unwrap();
        assert_eq!(c.hypergraph, hg(4, &[&[1, 2], &[3, 4], &[1, 3], &[2, 4]]));
        assert_eq!(inum(&c.hypergraph), 2);
        assert_eq!(c.labeling.origin(3), Some(Origin::Pair { g: 1, h: 1 }));

        let p3 = families::path_graph(3).unwrap();
        let grid = cartesian_product(&p3, &p3).unwrap();
        assert_eq!(grid.hypergraph.num_edges(), 12);
        assert_eq!(inum(&grid.hypergraph), 3);
    }
}
