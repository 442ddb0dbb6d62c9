//! Block designs as hypergraphs: `t`-design validation, projective spaces
//! over prime fields, and the check that derived sets induce sub-designs.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::for_each_subset;
use crate::hypergraph::Hypergraph;
use crate::infection;
use crate::solver::binomial;
use crate::vertex_set::VertexSet;

pub fn is_prime(q: u64) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

/// `PG(n, q)` for prime `q`: points and lines of `F_q^{n+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectiveSpace {
    pub dimension: usize,
    pub q: u64,
    /// Normalized coordinates (first nonzero entry is 1), sorted lexicographically.
    pub points: Vec<Vec<u64>>,
    /// Lines as sets of point indices.
    pub lines: Vec<VertexSet>,
}

impl ProjectiveSpace {
    pub fn new(dimension: usize, q: u64) -> Result<Self> {
        if !is_prime(q) {
            return Err(Error::InvalidParameters(format!("q = {q} must be prime")));
        }
        if dimension < 1 {
            return Err(Error::InvalidParameters("projective dimension must be at least 1".into()));
        }
        let len = dimension + 1;
        let mut points = Vec::new();
        let mut coords = vec![0u64; len];
        // odometer over F_q^{n+1}; keeps only normalized nonzero vectors,
        // which come out in lexicographic order
        loop {
            if coords.iter().find(|&&c| c != 0) == Some(&1) {
                points.push(coords.clone());
            }
            let Some(i) = (0..len).rev().find(|&i| coords[i] + 1 < q) else { break };
            coords[i] += 1;
            coords[i + 1..].iter_mut().for_each(|c| *c = 0);
        }
        let index = |v: &[u64]| points.binary_search_by(|p| p.as_slice().cmp(v)).expect("normalized point");
        let normalize = |v: &mut Vec<u64>| {
            let lead = *v.iter().find(|&&c| c != 0).expect("nonzero");
            let inv = mod_pow(lead, q - 2, q);
            v.iter_mut().for_each(|c| *c = *c * inv % q);
        };
        let mut lines: Vec<VertexSet> = Vec::new();
        for a in 0..points.len() {
            for b in a + 1..points.len() {
                let mut line = VertexSet::from([a, b]);
                for c in 1..q {
                    let mut v: Vec<u64> = points[a].iter().zip(&points[b]).map(|(x, y)| (c * x + y) % q).collect();
                    normalize(&mut v);
                    line.insert(index(&v));
                }
                lines.push(line);
            }
        }
        lines.sort();
        lines.dedup();
        Ok(Self { dimension, q, points, lines })
    }

    pub fn point_count(&self) -> usize {
        self.points.len()
    }

    pub fn to_hypergraph(&self) -> Hypergraph {
        Hypergraph::from_sets(self.points.len(), self.lines.iter().cloned()).expect("lines are valid edges")
    }
}

fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// Point-line design of `PG(n, q)`, `n >= 2`, `q` prime.
pub fn pg_design(n: usize, q: u64) -> Result<Hypergraph> {
    if n < 2 {
        return Err(Error::InvalidParameters(format!("pg_design needs dimension >= 2, got {n}")));
    }
    Ok(ProjectiveSpace::new(n, q)?.to_hypergraph())
}

/// The Fano plane, `PG(2, 2)`.
pub fn fano() -> Hypergraph {
    pg_design(2, 2).expect("PG(2,2) exists")
}

/// Result of counting how many edges contain each `t`-subset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum DesignCheck {
    Design { t: usize, k: usize, points: usize, lambda: usize, steiner: bool },
    NotDesign { t: usize, witness: VertexSet, multiplicity: usize, expected: usize },
}

impl DesignCheck {
    pub fn lambda(&self) -> Option<usize> {
        match self {
            DesignCheck::Design { lambda, .. } => Some(*lambda),
            DesignCheck::NotDesign { .. } => None,
        }
    }

    pub fn is_steiner(&self) -> bool {
        self.lambda() == Some(1)
    }
}

/// Checks that every `t`-subset of the vertices lies in the same number of
/// edges. A failure reports the first `t`-subset (lexicographically) whose
/// count differs from that of `{1..t}`.
pub fn is_t_design(h: &Hypergraph, t: usize) -> Result<DesignCheck> {
    let k = h.require_uniform()?;
    let n = h.num_vertices();
    if t == 0 || t > k {
        return Err(Error::InvalidParameters(format!("strength t = {t} must lie in 1..={k}")));
    }
    let mut expected = None;
    let mut failure = None;
    for_each_subset(n, t, |s| {
        if failure.is_some() {
            return;
        }
        let set = VertexSet::from(s);
        let count = h.edges().iter().filter(|e| set.is_subset(e)).count();
        match expected {
            None => expected = Some(count),
            Some(x) if x != count => failure = Some((set, count, x)),
            _ => {}
        }
    });
    Ok(match failure {
        Some((witness, multiplicity, expected)) => DesignCheck::NotDesign { t, witness, multiplicity, expected },
        None => {
            let lambda = expected.unwrap_or(0);
            DesignCheck::Design { t, k, points: n, lambda, steiner: lambda == 1 }
        }
    })
}

/// Blocks through a fixed `s`-set of a `t-(n,k,1)` design, `s <= t`:
/// `C(n-s, t-s) / C(k-s, t-s)`.
pub fn blocks_through(n: usize, k: usize, t: usize, s: usize) -> Option<u128> {
    if s > t || t > k || k > n {
        return None;
    }
    let num = binomial(n - s, t - s);
    let den = binomial(k - s, t - s);
    num.is_multiple_of(den).then_some(num / den)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum SubdesignVerdict {
    /// The derived set contains no edge.
    Trivial { derived: VertexSet },
    SingleEdge { derived: VertexSet },
    /// The derived set induces a `t-(|derived|, k, 1)` design.
    Design { derived: VertexSet, blocks: usize },
    Violation { derived: VertexSet, reason: String },
}

impl SubdesignVerdict {
    pub fn derived(&self) -> &VertexSet {
        match self {
            SubdesignVerdict::Trivial { derived }
            | SubdesignVerdict::SingleEdge { derived }
            | SubdesignVerdict::Design { derived, .. }
            | SubdesignVerdict::Violation { derived, .. } => derived,
        }
    }

    pub fn is_violation(&self) -> bool {
        matches!(self, SubdesignVerdict::Violation { .. })
    }
}

/// Closes `w` under infection and classifies the sub-hypergraph its derived
/// set induces. `h` must be a `t-(n,k,1)` design.
pub fn derived_subdesign_check(h: &Hypergraph, w: &VertexSet, t: usize) -> Result<SubdesignVerdict> {
    if !is_t_design(h, t)?.is_steiner() {
        return Err(Error::InvalidParameters(format!("not a {t}-design with lambda = 1")));
    }
    classify_derived(h, w, t)
}

fn classify_derived(h: &Hypergraph, w: &VertexSet, t: usize) -> Result<SubdesignVerdict> {
    let derived = infection::derived_set(h, w, 1)?;
    if derived.is_empty() {
        return Ok(SubdesignVerdict::Trivial { derived });
    }
    let sub = h.induced(&derived)?.hypergraph;
    Ok(match sub.num_edges() {
        0 => SubdesignVerdict::Trivial { derived },
        1 => SubdesignVerdict::SingleEdge { derived },
        blocks => match is_t_design(&sub, t)? {
            DesignCheck::Design { lambda: 1, .. } => SubdesignVerdict::Design { derived, blocks },
            DesignCheck::Design { lambda, .. } => {
                SubdesignVerdict::Violation { derived, reason: format!("induced design has lambda = {lambda}") }
            }
            DesignCheck::NotDesign { witness, multiplicity, .. } => SubdesignVerdict::Violation {
                derived,
                reason: format!("{t}-set {witness} lies in {multiplicity} induced blocks"),
            },
        },
    })
}

/// Derived sets of `h` that induce a design with at least two blocks on a
/// proper subset of the points, found by closing every vertex subset.
/// Exponential; refuses more than 20 vertices.
pub fn proper_derived_subdesigns(h: &Hypergraph, t: usize) -> Result<Vec<VertexSet>> {
    let n = h.num_vertices();
    if n > 20 {
        return Err(Error::InvalidParameters(format!("exhaustive derived-set scan needs n <= 20, got {n}")));
    }
    if !is_t_design(h, t)?.is_steiner() {
        return Err(Error::InvalidParameters(format!("not a {t}-design with lambda = 1")));
    }
    let mut found: Vec<VertexSet> = Vec::new();
    for mask in 1u32..(1u32 << n) {
        let w: VertexSet = (0..n).filter(|b| mask >> b & 1 == 1).collect();
        if let SubdesignVerdict::Design { derived, .. } = classify_derived(h, &w, t)? {
            if derived.len() < n && !found.contains(&derived) {
                found.push(derived);
            }
        }
    }
    found.sort();
    Ok(found)
}
