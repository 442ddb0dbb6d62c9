//! The infection rule, its `m`-variant, and the closure (derived set) engine.
//!
//! A set `A` of infected vertices inside an edge `E` infects `E` when
//! `|A| >= m` and no uninfected vertex `v` outside `E` lies in a common edge
//! with all of `A`. Enlarging `A` inside `E` only removes edges that contain
//! it, so if any witness inside `E` works then `infected ∩ E` works. The fast
//! engine relies on that; [`closure_oracle`] does not and tries every subset.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

/// One firing of the rule.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InfectionEvent {
    pub witness: VertexSet,
    /// Index into the canonical edge list.
    #[serde(serialize_with = "one_based")]
    pub edge_index: usize,
    pub newly_infected: VertexSet,
}

/// A replayable record of a closure run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InfectionTrace {
    pub seed: VertexSet,
    pub m: usize,
    pub events: Vec<InfectionEvent>,
    #[serde(rename = "derived")]
    pub final_set: VertexSet,
}

fn one_based<S: serde::Serializer>(v: &usize, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u64(*v as u64 + 1)
}

impl InfectionTrace {
    /// Whether the derived set is every vertex of `h`.
    pub fn is_complete(&self, h: &Hypergraph) -> bool {
        self.final_set.len() == h.num_vertices()
    }

    /// Replays the events from the seed, checking the rule at each step.
    pub fn validate(&self, h: &Hypergraph) -> Result<()> {
        let mut infected = self.seed.clone();
        for (i, ev) in self.events.iter().enumerate() {
            let fail = |reason: &str| Error::InvalidTrace { event: i, reason: reason.to_string() };
            let edge = h.edge(ev.edge_index).map_err(|_| fail("edge index out of range"))?;
            if !can_infect(h, &infected, &ev.witness, ev.edge_index, self.m)? {
                return Err(fail("rule check failed"));
            }
            let fresh = edge.difference(&infected);
            if fresh.is_empty() || fresh != ev.newly_infected {
                return Err(fail("newly infected set does not match"));
            }
            infected.union_with(edge);
        }
        if infected != self.final_set {
            return Err(Error::InvalidTrace { event: self.events.len(), reason: "final set mismatch".into() });
        }
        Ok(())
    }
}

fn check_m(m: usize) -> Result<()> {
    if m == 0 {
        Err(Error::InvalidM)
    } else {
        Ok(())
    }
}

/// Whether `witness` may infect edge `edge_index` given the current infected set.
pub fn can_infect(h: &Hypergraph, infected: &VertexSet, witness: &VertexSet, edge_index: usize, m: usize) -> Result<bool> {
    check_m(m)?;
    let edge = h.edge(edge_index)?;
    if witness.is_empty() || witness.len() < m || !witness.is_subset(infected) || !witness.is_subset(edge) {
        return Ok(false);
    }
    Ok(witness_fires(h, infected, witness, edge))
}

/// Every edge containing `witness` must sit inside `edge ∪ infected`.
#[inline]
fn witness_fires(h: &Hypergraph, infected: &VertexSet, witness: &VertexSet, edge: &VertexSet) -> bool {
    let pivot = witness.iter().min_by_key(|&v| h.vertex_degree(v)).expect("nonempty witness");
    let edges = h.edges();
    h.incident_edges(pivot).iter().all(|&j| {
        let other = &edges[j];
        !witness.is_subset(other) || !other.escapes(edge, infected)
    })
}

/// Runs the rule to a fixpoint from `seed`, recording every firing.
///
/// Each sweep scans edges in canonical order and fires any edge whose
/// maximal witness `infected ∩ E` passes; sweeps repeat until nothing fires.
pub fn closure(h: &Hypergraph, seed: &VertexSet, m: usize) -> Result<InfectionTrace> {
    check_m(m)?;
    h.check_subset(seed)?;
    let mut events = Vec::new();
    let final_set = run(h, seed, m, |ev| events.push(ev));
    Ok(InfectionTrace { seed: seed.clone(), m, events, final_set })
}

/// Derived set of `seed` without a trace.
pub fn derived_set(h: &Hypergraph, seed: &VertexSet, m: usize) -> Result<VertexSet> {
    check_m(m)?;
    h.check_subset(seed)?;
    Ok(run(h, seed, m, |_| {}))
}

pub fn is_infection_set(h: &Hypergraph, seed: &VertexSet, m: usize) -> Result<bool> {
    Ok(derived_set(h, seed, m)?.len() == h.num_vertices())
}

pub(crate) fn run(h: &Hypergraph, seed: &VertexSet, m: usize, mut on_event: impl FnMut(InfectionEvent)) -> VertexSet {
    let mut infected = seed.clone();
    let edges = h.edges();
    let mut done: Vec<bool> = edges.iter().map(|e| e.is_subset(&infected)).collect();
    loop {
        let mut progress = false;
        for (i, edge) in edges.iter().enumerate() {
            if done[i] {
                continue;
            }
            if edge.is_subset(&infected) {
                done[i] = true;
                continue;
            }
            let witness = infected.intersection(edge);
            if witness.is_empty() || witness.len() < m {
                continue;
            }
            if witness_fires(h, &infected, &witness, edge) {
                let newly_infected = edge.difference(&infected);
                infected.union_with(edge);
                done[i] = true;
                progress = true;
                on_event(InfectionEvent { witness, edge_index: i, newly_infected });
            }
        }
        if !progress {
            return infected;
        }
    }
}

/// Same fixpoint as [`closure`], computed by testing every nonempty subset
/// of the infected vertices against every edge with the rule written out
/// literally. Exponential in the number of infected vertices; meant for
/// small instances.
pub fn closure_oracle(h: &Hypergraph, seed: &VertexSet, m: usize) -> Result<VertexSet> {
    check_m(m)?;
    h.check_subset(seed)?;
    assert!(h.num_vertices() <= 20, "closure_oracle is exponential; keep n <= 20");
    let n = h.num_vertices();
    let edges = h.edges();
    let mut infected = seed.clone();
    'outer: loop {
        let members = infected.to_vec();
        for mask in 1u32..(1 << members.len()) {
            if (mask.count_ones() as usize) < m {
                continue;
            }
            let a: VertexSet = (0..members.len()).filter(|b| mask >> b & 1 == 1).map(|b| members[b]).collect();
            for e in edges {
                if !a.is_subset(e) || e.is_subset(&infected) {
                    continue;
                }
                let blocked = (0..n).any(|v| {
                    !infected.contains(v) && !e.contains(v) && {
                        let mut av = a.clone();
                        av.insert(v);
                        edges.iter().any(|f| av.is_subset(f))
                    }
                });
                if !blocked {
                    infected.union_with(e);
                    continue 'outer;
                }
            }
        }
        return Ok(infected);
    }
}
