//! Seeded cross-module invariants, run as a second report.

use rand::seq::SliceRandom;
use rand::Rng;

use super::{run_cases, Check, TheoremCase, VerificationReport, VerifyOptions};
use crate::enumerate;
use crate::error::Result;
use crate::families::for_each_subset;
use crate::hypergraph::Hypergraph;
use crate::infection;
use crate::io;
use crate::random;
use crate::solver::{self, SolverConfig};
use crate::vertex_set::VertexSet;

/// Smallest seed size whose closure is everything, by plain enumeration
/// over all vertex subsets with no decomposition or bounds.
pub fn brute_force_infection_number(h: &Hypergraph, m: usize) -> Result<usize> {
    let n = h.num_vertices();
    for size in 0..=n {
        let mut found = false;
        let mut err = None;
        for_each_subset(n, size, |s| {
            if found || err.is_some() {
                return;
            }
            match infection::derived_set(h, &VertexSet::from(s), m) {
                Ok(d) if d.len() == n => found = true,
                Ok(_) => {}
                Err(e) => err = Some(e),
            }
        });
        if let Some(e) = err {
            return Err(e);
        }
        if found {
            return Ok(size);
        }
    }
    Ok(n)
}

/// Zero forcing number from the colour-change rule: a coloured vertex with
/// exactly one uncoloured neighbour colours it.
pub(crate) fn zero_forcing_oracle(g: &Hypergraph) -> usize {
    let n = g.num_vertices();
    let mut nbrs = vec![Vec::new(); n];
    for e in g.edges() {
        let v = e.to_vec();
        nbrs[v[0]].push(v[1]);
        nbrs[v[1]].push(v[0]);
    }
    let forces_all = |seed: &[usize]| {
        let mut blue = vec![false; n];
        for &v in seed {
            blue[v] = true;
        }
        loop {
            let mut changed = false;
            for v in 0..n {
                if !blue[v] {
                    continue;
                }
                let white: Vec<usize> = nbrs[v].iter().copied().filter(|&u| !blue[u]).collect();
                if white.len() == 1 {
                    blue[white[0]] = true;
                    changed = true;
                }
            }
            if !changed {
                return blue.iter().all(|&b| b);
            }
        }
    };
    for size in 0..=n {
        let mut found = false;
        for_each_subset(n, size, |s| found = found || forces_all(s));
        if found {
            return size;
        }
    }
    n
}

fn random_seed(rng: &mut impl Rng, n: usize) -> VertexSet {
    let size = rng.gen_range(0..=n);
    random::random_subset(rng, n, size)
}

/// The invariant cases; random ones draw `count` instances each.
pub fn property_cases() -> Vec<TheoremCase> {
    vec![
        TheoremCase::new("closure-oracle-exhaustive", &["oracle"], "closure = closure_oracle on every hypergraph with n <= 4, every seed, m in 1..3", |run| {
            for n in 1..=4 {
                run.check(format!("n = {n}"), &[], |_| {
                    let mut checked = 0u64;
                    for h in enumerate::all_labeled(n) {
                        for mask in 0u32..1 << n {
                            let seed: VertexSet = (0..n).filter(|b| mask >> b & 1 == 1).collect();
                            for m in 1..=3 {
                                let fast = infection::derived_set(&h, &seed, m)?;
                                let slow = infection::closure_oracle(&h, &seed, m)?;
                                if fast != slow {
                                    return Ok(Check::Fail(format!("{:?} seed {seed} m {m}: {fast} vs {slow}", h.edge_labels())));
                                }
                                checked += 1;
                            }
                        }
                    }
                    Ok(Check::Pass(Some(format!("{checked} runs"))))
                });
            }
        }),
        TheoremCase::new("closure-oracle-random", &["oracle"], "closure = closure_oracle on random instances, n <= 8", |run| {
            let mut rng = run.rng(1);
            for i in 0..run.count() {
                let n = rng.gen_range(1..=8);
                let h = random::hypergraph(&mut rng, n, 7, 5);
                let seeds: Vec<VertexSet> = (0..3).map(|_| random_seed(&mut rng, n)).collect();
                run.check(format!("#{i}"), &[&h], |_| {
                    for seed in &seeds {
                        for m in 1..=3 {
                            let fast = infection::derived_set(&h, seed, m)?;
                            let slow = infection::closure_oracle(&h, seed, m)?;
                            if fast != slow {
                                return Ok(Check::Fail(format!("seed {seed} m {m}: {fast} vs {slow}")));
                            }
                        }
                    }
                    Ok(Check::Pass(None))
                });
            }
        }),
        TheoremCase::new("closure-laws", &["closure"], "seed within derived set; derived set is a fixpoint; monotone in the seed and antitone in m", |run| {
            let mut rng = run.rng(2);
            for i in 0..run.count() {
                let n = rng.gen_range(1..=8);
                let h = random::hypergraph(&mut rng, n, 7, 5);
                let small = random_seed(&mut rng, n);
                let extra = random_seed(&mut rng, n);
                let big = small.union(&extra);
                run.check(format!("#{i}"), &[&h], |_| {
                    let d = infection::derived_set(&h, &small, 1)?;
                    let again = infection::derived_set(&h, &d, 1)?;
                    let d_big = infection::derived_set(&h, &big, 1)?;
                    let d2 = infection::derived_set(&h, &small, 2)?;
                    Ok(Check::all([
                        Check::holds(small.is_subset(&d), || "seed not kept".into()),
                        Check::holds(again == d, || "not a fixpoint".into()),
                        Check::holds(d.is_subset(&d_big), || format!("seed {small} gives {d}, superset {big} gives {d_big}")),
                        Check::holds(d2.is_subset(&d), || format!("m=2 derived {d2} not within m=1 derived {d}")),
                    ]))
                });
            }
        }),
        TheoremCase::new("trace-replay", &["closure"], "every closure trace replays under the rule", |run| {
            let mut rng = run.rng(3);
            for i in 0..run.count() {
                let n = rng.gen_range(1..=8);
                let h = random::hypergraph(&mut rng, n, 7, 5);
                let seed = random_seed(&mut rng, n);
                let m = rng.gen_range(1..=3);
                run.check(format!("#{i}"), &[&h], |_| {
                    let trace = infection::closure(&h, &seed, m)?;
                    trace.validate(&h)?;
                    Ok(Check::holds(trace.final_set == infection::derived_set(&h, &seed, m)?, || "final set differs".into()))
                });
            }
        }),
        TheoremCase::new("solver-exact", &["solver"], "solver = flat brute force for n <= 7, m in 1..3", |run| {
            let mut rng = run.rng(4);
            for i in 0..run.count() {
                let n = rng.gen_range(1..=7);
                let h = random::hypergraph(&mut rng, n, 6, 5);
                let m = rng.gen_range(1..=3);
                run.check(format!("#{i} m = {m}"), &[&h], |ctx| {
                    let r = solver::infection_number_with(&h, m, &ctx.config)?;
                    Ok(Check::all([
                        Check::eq("I", r.infection_number, brute_force_infection_number(&h, m)?),
                        Check::holds(infection::is_infection_set(&h, &r.witness, m)?, || "witness does not infect".into()),
                    ]))
                });
            }
        }),
        TheoremCase::new("solver-threads", &["solver"], "parallel search returns the same result as sequential search", |run| {
            let mut rng = run.rng(5);
            for i in 0..run.count() / 4 {
                let n = rng.gen_range(4..=10);
                let h = random::hypergraph(&mut rng, n, 8, 4);
                run.check(format!("#{i}"), &[&h], |ctx| {
                    let one = solver::infection_number_with(&h, 1, &ctx.config)?;
                    let four = solver::infection_number_with(&h, 1, &SolverConfig { threads: 4, ..ctx.config })?;
                    Ok(Check::holds(one == four, || format!("witness {} vs {}", one.witness, four.witness)))
                });
            }
        }),
        TheoremCase::new("reduce-invariance", &["solver"], "I(reduce H) = I(H)", |run| {
            let mut rng = run.rng(6);
            for i in 0..run.count() {
                let n = rng.gen_range(1..=8);
                let h = random::hypergraph(&mut rng, n, 7, 5);
                let r = h.reduce();
                run.check(format!("#{i}"), &[&h], |ctx| Ok(Check::eq("I(reduce H)", ctx.i(&r)?, ctx.i(&h)?)));
            }
        }),
        TheoremCase::new("additivity", &["solver"], "I(A + B) = I(A) + I(B)", |run| {
            let mut rng = run.rng(7);
            for i in 0..run.count() {
                let (na, nb) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
                let a = random::hypergraph(&mut rng, na, 4, 4);
                let b = random::hypergraph(&mut rng, nb, 4, 4);
                let u = a.disjoint_union(&b);
                run.check(format!("#{i}"), &[&a, &b], |ctx| {
                    let flat = brute_force_infection_number(&u, 1)?;
                    Ok(Check::eq("I(A+B)", flat, ctx.i(&a)? + ctx.i(&b)?))
                });
            }
        }),
        TheoremCase::new("bound-sandwich", &["solver", "bound"], "first-firing bound <= I_m <= n - k + m", |run| {
            let mut rng = run.rng(8);
            for i in 0..run.count() {
                let n = rng.gen_range(1..=8);
                let h = random::hypergraph(&mut rng, n, 7, 5);
                let m = rng.gen_range(1..=2);
                run.check(format!("#{i} m = {m}"), &[&h], |ctx| {
                    let v = ctx.im(&h, m)?;
                    let lower: usize = h.components().iter().map(|c| solver::first_firing_bound(&c.hypergraph, m)).sum();
                    Ok(Check::all([
                        Check::le("lower <= I", solver::first_firing_bound(&h, m), v),
                        Check::le("component lower <= I", lower, v),
                        Check::le("multiplicity bound <= I", solver::multiplicity_lower_bound(&h), ctx.i(&h)?),
                        Check::le("I <= upper", v, solver::upper_bound_m(&h, m)),
                    ]))
                });
            }
        }),
        TheoremCase::new("degree-one", &["solver"], "H reduced and I(H) = 1 => min degree 1", |run| {
            let mut rng = run.rng(9);
            for i in 0..run.count() {
                let n = rng.gen_range(1..=8);
                let h = random::nontrivial_hypergraph(&mut rng, n, 6, 5).reduce();
                run.check(format!("#{i}"), &[&h], |ctx| {
                    let v = ctx.i(&h)?;
                    let delta = (0..n).map(|x| h.vertex_degree(x)).min().unwrap_or(0);
                    Ok(Check::holds(v != 1 || delta == 1, || format!("I = 1, min degree {delta}")))
                });
            }
        }),
        TheoremCase::new("m-chain", &["solver", "bound"], "I_1 <= I_2 <= I_3 and I_{m+1} <= I_m + |E|", |run| {
            let mut rng = run.rng(10);
            for i in 0..run.count() {
                let n = rng.gen_range(1..=7);
                let h = random::hypergraph(&mut rng, n, 5, 5);
                run.check(format!("#{i}"), &[&h], |ctx| {
                    let v: Vec<usize> = (1..=4).map(|m| ctx.im(&h, m)).collect::<Result<_>>()?;
                    let e = h.num_edges();
                    Ok(Check::holds(v.windows(2).all(|w| w[0] <= w[1] && w[1] <= w[0] + e), || format!("I_1..I_4 = {v:?}, |E| = {e}")))
                });
            }
        }),
        TheoremCase::new("relabel-invariance", &["solver", "structure"], "I and the canonical form are invariant under relabelling", |run| {
            let mut rng = run.rng(11);
            for i in 0..run.count() {
                let n = rng.gen_range(1..=8);
                let h = random::hypergraph(&mut rng, n, 6, 5);
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(&mut rng);
                let p = h.relabel(&perm).unwrap();
                run.check(format!("#{i}"), &[&h], |ctx| {
                    Ok(Check::all([
                        Check::holds(enumerate::canonical_form(&h) == enumerate::canonical_form(&p), || "canonical forms differ".into()),
                        Check::eq("I(relabelled)", ctx.i(&p)?, ctx.i(&h)?),
                    ]))
                });
            }
        }),
        TheoremCase::new("io-round-trip", &["io"], "text and JSON encodings parse back to the same hypergraph", |run| {
            let mut rng = run.rng(12);
            for i in 0..run.count() {
                let n = rng.gen_range(1..=10);
                let h = random::hypergraph(&mut rng, n, 8, 6);
                run.check(format!("#{i}"), &[&h], |_| {
                    let t = io::parse(&io::to_text(&h))?;
                    let j = io::parse(&io::to_json(&h))?;
                    Ok(Check::holds(t == h && j == h, || "round trip changed the hypergraph".into()))
                });
            }
        }),
        TheoremCase::new("line-graph-structure", &["line-graph", "structure"], "L(H) joins exactly the intersecting edge pairs", |run| {
            let mut rng = run.rng(13);
            for i in 0..run.count() {
                let n = rng.gen_range(1..=8);
                let h = random::nontrivial_hypergraph(&mut rng, n, 7, 4);
                run.check(format!("#{i}"), &[&h], |_| {
                    let l = h.line_graph()?;
                    let e = h.edges();
                    let mut ok = l.num_vertices() == e.len();
                    for a in 0..e.len() {
                        for b in a + 1..e.len() {
                            let adjacent = l.edges().contains(&VertexSet::from([a, b]));
                            ok &= adjacent == e[a].intersects(&e[b]);
                        }
                    }
                    Ok(Check::holds(ok, || format!("line graph {:?}", l.edge_labels())))
                });
            }
        }),
        TheoremCase::new("line-graph-bound", &["line-graph", "bound"], "I(H) <= k Z(L(H)) for k-uniform H without isolated vertices", |run| {
            let mut rng = run.rng(14);
            for i in 0..run.count() {
                let k = rng.gen_range(2..=4);
                let h = loop {
                    let n = rng.gen_range(k..=8);
                    let count = rng.gen_range(1..=6);
                    let h = random::uniform_hypergraph(&mut rng, n, k, count);
                    if (0..n).all(|v| h.vertex_degree(v) > 0) {
                        break h;
                    }
                };
                run.check(format!("#{i}"), &[&h], |ctx| Ok(Check::le("I <= k Z(L)", ctx.i(&h)?, k * ctx.z(&h.line_graph()?)?)));
            }
        }),
    ]
}

/// Runs the invariant cases with `count` random instances per case.
pub fn property_suite(seed: u64, count: usize) -> VerificationReport {
    let opts = VerifyOptions { seed, count, ..Default::default() };
    run_cases("properties", &property_cases(), &opts).expect("single-threaded run cannot fail to start")
}
