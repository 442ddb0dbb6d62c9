//! Exact minimum (`m`-)infection sets.
//!
//! The hypergraph is split into connected components (the derived set never
//! crosses between them) and each component is searched by seed size,
//! lexicographic order within a size. The first success is therefore the
//! lexicographically smallest minimum seed, and concatenating per-component
//! winners gives the global lexicographic minimum.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::infection::{self, InfectionTrace};
use crate::vertex_set::VertexSet;

pub const DEFAULT_BUDGET: u64 = 1 << 24;
pub const BUDGET_ENV: &str = "HYPERINFECT_BUDGET";

/// Edges larger than this make the first-firing bound fall back to `m`.
const MAX_WITNESS_SCAN: usize = 20;
const BLOCK: usize = 2048;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Maximum closure evaluations per component.
    pub budget: u64,
    /// Worker threads for the seed scan; `1` runs inline.
    pub threads: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self { budget: DEFAULT_BUDGET, threads: 1 }
    }
}

impl SolverConfig {
    /// Default config with the budget overridden by `HYPERINFECT_BUDGET` when set.
    pub fn from_env() -> Result<Self> {
        let mut cfg = Self::default();
        if let Ok(raw) = std::env::var(BUDGET_ENV) {
            cfg.budget = raw
                .trim()
                .parse()
                .map_err(|_| Error::InvalidParameters(format!("{BUDGET_ENV}={raw:?} is not an integer")))?;
        }
        Ok(cfg)
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverResult {
    pub infection_number: usize,
    pub m: usize,
    /// Lexicographically smallest minimum-size infection set.
    pub witness: VertexSet,
    pub trace: InfectionTrace,
    pub lower_bound_used: usize,
    pub upper_bound_used: usize,
    /// Seeds evaluated, counted in enumeration order up to each component's
    /// winner; independent of thread count.
    pub enumerated_count: u64,
}

#[derive(Serialize)]
struct Bounds {
    lower: usize,
    upper: usize,
}

#[derive(Serialize)]
struct SolverJson<'a> {
    infection_number: usize,
    witness: &'a VertexSet,
    m: usize,
    bounds: Bounds,
    enumerated: u64,
}

impl Serialize for SolverResult {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SolverJson {
            infection_number: self.infection_number,
            witness: &self.witness,
            m: self.m,
            bounds: Bounds { lower: self.lower_bound_used, upper: self.upper_bound_used },
            enumerated: self.enumerated_count,
        }
        .serialize(s)
    }
}

/// `n - k + 1` for the largest edge size `k`; `n` for a trivial hypergraph.
pub fn upper_bound(h: &Hypergraph) -> usize {
    upper_bound_m(h, 1)
}

/// Seeding all but `k - m` vertices of a largest edge fires it under the
/// `m`-rule, so `I_m <= n - k + m` whenever `k >= m`.
pub fn upper_bound_m(h: &Hypergraph, m: usize) -> usize {
    let n = h.num_vertices();
    let k = h.max_edge_size();
    if h.is_trivial() || k < m {
        n
    } else {
        n - k + m
    }
}

/// Lower bound from the first firing of the rule (`m = 1`).
///
/// See [`first_firing_bound`].
pub fn multiplicity_lower_bound(h: &Hypergraph) -> usize {
    first_firing_bound(h, 1)
}

/// Size of the smallest seed that can make the rule fire at all.
///
/// For a witness `A ⊊ E` to fire on `E` first, every vertex outside `E`
/// sharing an edge with `A` must already be seeded, so the seed holds
/// `A ∪ (N(A) \ E)` where `N(A)` is the union of edges containing `A`.
/// The minimum of that over all edges and witnesses (and `n`, the seed that
/// needs no firing) bounds `I_m` from below. Edge multiplicity drives it: a
/// set lying in a single edge contributes just itself.
pub fn first_firing_bound(h: &Hypergraph, m: usize) -> usize {
    let n = h.num_vertices();
    if h.max_edge_size() > MAX_WITNESS_SCAN {
        return m.min(n);
    }
    let mut best = n;
    for edge in h.edges() {
        let members = edge.to_vec();
        let size = members.len();
        for mask in 1u32..(1u32 << size) - 1 {
            let a_len = mask.count_ones() as usize;
            if a_len < m || a_len >= best {
                continue;
            }
            let a: VertexSet = (0..size).filter(|b| mask >> b & 1 == 1).map(|b| members[b]).collect();
            let mut need = a.clone();
            for j in h.edges_containing(&a) {
                need.union_with(&h.edges()[j].difference(edge));
            }
            best = best.min(need.len());
        }
    }
    best
}

pub fn infection_number(h: &Hypergraph, m: usize) -> Result<SolverResult> {
    infection_number_with(h, m, &SolverConfig::default())
}

pub fn infection_number_with(h: &Hypergraph, m: usize, config: &SolverConfig) -> Result<SolverResult> {
    if m == 0 {
        return Err(Error::InvalidM);
    }
    let pool = if config.threads > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(config.threads)
                .build()
                .map_err(|e| Error::InvalidParameters(e.to_string()))?,
        )
    } else {
        None
    };
    let mut witness = VertexSet::new();
    let (mut lower, mut upper, mut count) = (0, 0, 0u64);
    for comp in h.components() {
        let sol = solve_component(&comp.hypergraph, m, config, pool.as_ref())?;
        witness.union_with(&comp.to_parent(&sol.witness));
        lower += sol.lower;
        upper += sol.upper;
        count += sol.enumerated;
    }
    let trace = infection::closure(h, &witness, m)?;
    debug_assert!(trace.is_complete(h));
    Ok(SolverResult {
        infection_number: witness.len(),
        m,
        witness,
        trace,
        lower_bound_used: lower,
        upper_bound_used: upper,
        enumerated_count: count,
    })
}

struct ComponentSolution {
    witness: VertexSet,
    lower: usize,
    upper: usize,
    enumerated: u64,
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}

fn solve_component(h: &Hypergraph, m: usize, config: &SolverConfig, pool: Option<&rayon::ThreadPool>) -> Result<ComponentSolution> {
    let n = h.num_vertices();
    let upper = upper_bound_m(h, m);
    if h.is_trivial() {
        return Ok(ComponentSolution { witness: VertexSet::full(n), lower: n, upper: n, enumerated: 0 });
    }
    let lower = first_firing_bound(h, m).min(upper);
    let mut enumerated: u64 = 0;
    for size in lower..=upper {
        let required = enumerated as u128 + binomial(n, size);
        if required > config.budget as u128 {
            return Err(Error::BudgetExceeded { component_size: n, seed_size: size, required, budget: config.budget });
        }
        if let Some((rank, seed)) = first_infecting_seed(h, m, size, pool) {
            enumerated += rank + 1;
            return Ok(ComponentSolution { witness: seed, lower, upper, enumerated });
        }
        enumerated += binomial(n, size) as u64;
    }
    unreachable!("a seed of size {upper} always infects");
}

/// Lexicographically first `size`-subset that infects `h`, with its rank.
fn first_infecting_seed(h: &Hypergraph, m: usize, size: usize, pool: Option<&rayon::ThreadPool>) -> Option<(u64, VertexSet)> {
    let n = h.num_vertices();
    let infects = |seed: &VertexSet| infection::run(h, seed, m, |_| {}).len() == n;
    match pool {
        None => {
            let mut rank = 0u64;
            let mut found = None;
            for_each_subset_until(n, size, |s| {
                let seed = VertexSet::from(s);
                if infects(&seed) {
                    found = Some((rank, seed));
                    return true;
                }
                rank += 1;
                false
            });
            found
        }
        Some(pool) => {
            let mut offset = 0u64;
            let mut block: Vec<VertexSet> = Vec::with_capacity(BLOCK);
            let mut found = None;
            let mut flush = |block: &mut Vec<VertexSet>, offset: &mut u64| -> bool {
                let hit = pool.install(|| block.par_iter().position_first(infects));
                if let Some(pos) = hit {
                    found = Some((*offset + pos as u64, block[pos].clone()));
                    return true;
                }
                *offset += block.len() as u64;
                block.clear();
                false
            };
            let mut stopped = false;
            for_each_subset_until(n, size, |s| {
                block.push(VertexSet::from(s));
                if block.len() == BLOCK {
                    stopped = flush(&mut block, &mut offset);
                }
                stopped
            });
            if !stopped && !block.is_empty() {
                flush(&mut block, &mut offset);
            }
            found
        }
    }
}

/// Lexicographic `k`-subsets of `0..n`, stopping once `f` returns true.
fn for_each_subset_until(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if f(&idx) {
            return;
        }
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else { return };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Zero forcing number of a simple graph, computed as its infection number.
pub fn zero_forcing_number(g: &Hypergraph) -> Result<SolverResult> {
    zero_forcing_number_with(g, &SolverConfig::default())
}

pub fn zero_forcing_number_with(g: &Hypergraph, config: &SolverConfig) -> Result<SolverResult> {
    if g.edges().iter().any(|e| e.len() != 2) {
        return Err(Error::NotUniform { expected: "2".into() });
    }
    infection_number_with(g, 1, config)
}

/// Outcome of testing whether every extremal infection set leaves its
/// uninfected vertices inside one edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ConjectureReport {
    Holds { infection_number: usize, infection_sets_checked: u64 },
    Violated { infection_number: usize, seed: VertexSet, uninfected: VertexSet },
    NotApplicable { infection_number: usize, extremal_value: usize },
}

impl ConjectureReport {
    pub fn holds(&self) -> bool {
        matches!(self, ConjectureReport::Holds { .. })
    }

    pub fn is_applicable(&self) -> bool {
        !matches!(self, ConjectureReport::NotApplicable { .. })
    }
}

/// For a `k`-uniform `h` with `I(h) = n - k + 1`, checks every infection set
/// of that size: its `k - 1` uninfected vertices must lie in a common edge.
pub fn check_conjecture(h: &Hypergraph) -> Result<ConjectureReport> {
    check_conjecture_with(h, &SolverConfig::default())
}

pub fn check_conjecture_with(h: &Hypergraph, config: &SolverConfig) -> Result<ConjectureReport> {
    let k = h.require_uniform()?;
    let n = h.num_vertices();
    let extremal = n - k + 1;
    let value = infection_number_with(h, 1, config)?.infection_number;
    if value != extremal {
        return Ok(ConjectureReport::NotApplicable { infection_number: value, extremal_value: extremal });
    }
    let mut checked = 0u64;
    let mut violation = None;
    for_each_subset_until(n, extremal, |s| {
        let seed = VertexSet::from(s);
        if infection::run(h, &seed, 1, |_| {}).len() != n {
            return false;
        }
        checked += 1;
        let rest = seed.complement(n);
        if !h.edges().iter().any(|e| rest.is_subset(e)) {
            violation = Some((seed, rest));
            return true;
        }
        false
    });
    Ok(match violation {
        Some((seed, uninfected)) => ConjectureReport::Violated { infection_number: value, seed, uninfected },
        None => ConjectureReport::Holds { infection_number: value, infection_sets_checked: checked },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{designs, families};

    fn hg(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::from_labels(n, edges.iter().map(|e| e.iter().copied())).unwrap()
    }

    #[test]
    fn upper_bounds() {
        assert_eq!(upper_bound(&families::complete(5, 3).unwrap()), 3);
        assert_eq!(upper_bound(&hg(4, &[&[1, 2, 3, 4]])), 1);
        assert_eq!(upper_bound(&Hypergraph::trivial(4).unwrap()), 4);
        assert_eq!(upper_bound_m(&hg(3, &[&[1, 2, 3]]), 2), 2);
        assert_eq!(upper_bound_m(&hg(3, &[&[1, 2]]), 3), 3);
    }

    #[test]
    fn first_firing_bounds() {
        assert_eq!(multiplicity_lower_bound(&designs::fano()), 2);
        assert_eq!(multiplicity_lower_bound(&families::complete(5, 3).unwrap()), 3);
        assert_eq!(multiplicity_lower_bound(&hg(3, &[&[1, 2, 3]])), 1);
        // {1} fires {1,2,3} once 4 is seeded
        assert_eq!(multiplicity_lower_bound(&families::complete(4, 3).unwrap()), 2);
        assert_eq!(first_firing_bound(&hg(3, &[&[1, 2, 3]]), 2), 2);
    }

    #[test]
    fn solver_examples() {
        let cases: Vec<(Hypergraph, usize, usize)> = vec![
            (families::complete(5, 3).unwrap(), 1, 3),
            (designs::fano(), 1, 3),
            (hg(6, &[&[1, 5, 6], &[2, 5, 6], &[3, 5, 6], &[4, 5, 6]]), 1, 3),
            (hg(3, &[&[1, 2, 3]]), 2, 2),
            (families::complete_multipartite(&[2, 3]).unwrap(), 1, 3),
        ];
        for (h, m, expected) in cases {
            let r = infection_number(&h, m).unwrap();
            assert_eq!(r.infection_number, expected, "{h:?}");
            assert!(infection::is_infection_set(&h, &r.witness, m).unwrap());
            r.trace.validate(&h).unwrap();
            assert!(r.lower_bound_used <= expected && expected <= r.upper_bound_used);
        }
    }

    #[test]
    fn trivial_components_count_every_vertex() {
        let h = Hypergraph::trivial(5).unwrap();
        let r = infection_number(&h, 1).unwrap();
        assert_eq!(r.infection_number, 5);
        assert_eq!(r.witness, VertexSet::full(5));
        let h = hg(5, &[&[1, 2]]);
        assert_eq!(infection_number(&h, 1).unwrap().infection_number, 4);
    }

    #[test]
    fn hypertree_witness_is_lexicographic() {
        let h = hg(6, &[&[1, 5, 6], &[2, 5, 6], &[3, 5, 6], &[4, 5, 6]]);
        assert_eq!(infection_number(&h, 1).unwrap().witness.to_labels(), vec![1, 2, 3]);
    }

    #[test]
    fn zero_forcing_examples() {
        assert_eq!(zero_forcing_number(&families::path_graph(4).unwrap()).unwrap().infection_number, 1);
        assert_eq!(zero_forcing_number(&families::cycle_graph(5).unwrap()).unwrap().infection_number, 2);
        assert_eq!(zero_forcing_number(&families::complete(4, 2).unwrap()).unwrap().infection_number, 3);
        assert!(zero_forcing_number(&families::complete(4, 3).unwrap()).is_err());
        assert_eq!(zero_forcing_number(&Hypergraph::trivial(3).unwrap()).unwrap().infection_number, 3);
    }

    #[test]
    fn threads_do_not_change_results() {
        let h = designs::pg_design(2, 3).unwrap();
        let one = infection_number_with(&h, 1, &SolverConfig::default()).unwrap();
        let four = infection_number_with(&h, 1, &SolverConfig::default().with_threads(4)).unwrap();
        assert_eq!(one, four);
    }

    #[test]
    fn budget_is_enforced() {
        let h = families::complete(12, 3).unwrap();
        let err = infection_number_with(&h, 1, &SolverConfig::default().with_budget(50)).unwrap_err();
        // bounds pin the size to 10, so C(12,10) = 66 candidates
        assert!(matches!(err, Error::BudgetExceeded { component_size: 12, seed_size: 10, required: 66, budget: 50 }));
        assert!(infection_number_with(&h, 1, &SolverConfig::default().with_budget(66)).is_ok());
    }

    #[test]
    fn conjecture_examples() {
        let r = check_conjecture(&families::complete(5, 3).unwrap()).unwrap();
        assert!(r.holds());
        // C4 has I = 2 while n - k + 1 = 3
        let r = check_conjecture(&families::complete_multipartite(&[2, 2]).unwrap()).unwrap();
        assert_eq!(r, ConjectureReport::NotApplicable { infection_number: 2, extremal_value: 3 });
        assert!(check_conjecture(&hg(3, &[&[1, 2], &[1, 2, 3]])).is_err());
    }

    #[test]
    fn json_shape() {
        let r = infection_number(&families::complete(5, 3).unwrap(), 1).unwrap();
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        assert_eq!(v["infection_number"], 3);
        assert_eq!(v["witness"], serde_json::json!([1, 2, 3]));
        assert_eq!(v["m"], 1);
        assert!(v["bounds"]["lower"].as_u64().unwrap() <= 3);
        assert!(v["enumerated"].as_u64().unwrap() >= 1);
    }
}
