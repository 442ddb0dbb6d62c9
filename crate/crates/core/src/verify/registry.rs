//! The theorem registry: one entry per closed-form result or bound.

use rand::Rng;

use super::properties::zero_forcing_oracle;
use super::{CaseRun, Check, TheoremCase};
use crate::designs;
use crate::enumerate;
use crate::families;
use crate::hypergraph::Hypergraph;
use crate::infection;
use crate::products;
use crate::random;
use crate::solver::{self, ConjectureReport};
use crate::vertex_set::VertexSet;

fn hg(n: usize, edges: &[&[usize]]) -> Hypergraph {
    Hypergraph::from_labels(n, edges.iter().map(|e| e.iter().copied())).expect("fixed instance is valid")
}

fn expect_i(run: &mut CaseRun, label: impl Into<String>, h: &Hypergraph, expected: usize) {
    run.check(label, &[h], |ctx| Ok(Check::eq("I", ctx.i(h)?, expected)));
}

fn max_degree(h: &Hypergraph) -> usize {
    (0..h.num_vertices()).map(|v| h.vertex_degree(v)).max().unwrap_or(0)
}

fn min_degree(h: &Hypergraph) -> usize {
    (0..h.num_vertices()).map(|v| h.vertex_degree(v)).min().unwrap_or(0)
}

fn no_isolated(h: &Hypergraph) -> bool {
    min_degree(h) > 0
}

/// Nondecreasing sequences over `items` (by index) of length `>= min_len`
/// whose weights sum to at most `cap`.
fn multisets<T: Clone>(items: &[T], weight: impl Fn(&T) -> usize + Copy, cap: usize, min_len: usize) -> Vec<Vec<T>> {
    fn go<T: Clone>(
        items: &[T],
        weight: impl Fn(&T) -> usize + Copy,
        from: usize,
        left: usize,
        cur: &mut Vec<T>,
        min_len: usize,
        out: &mut Vec<Vec<T>>,
    ) {
        if cur.len() >= min_len {
            out.push(cur.clone());
        }
        for i in from..items.len() {
            let w = weight(&items[i]);
            if w <= left {
                cur.push(items[i].clone());
                go(items, weight, i, left - w, cur, min_len, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(items, weight, 0, cap, &mut Vec::new(), min_len, &mut out);
    out
}

fn join_sweep() -> Vec<Hypergraph> {
    let mut all: Vec<Hypergraph> = (1..=6).flat_map(enumerate::reduced_hypergraphs).filter(|h| !h.is_trivial()).collect();
    all.extend((1..=4).flat_map(enumerate::all_labeled).filter(|h| !h.is_trivial()));
    all
}

fn has_single_edge_component(h: &Hypergraph) -> bool {
    h.components().iter().any(|c| c.hypergraph.num_edges() == 1 && c.hypergraph.edges()[0].len() == c.hypergraph.num_vertices())
}

/// Random nontrivial `k`-uniform hypergraph on at most `max_n` vertices.
fn small_uniform(rng: &mut impl Rng, k: usize, max_n: usize, max_edges: usize) -> Hypergraph {
    let n = rng.gen_range(k..=max_n);
    let count = rng.gen_range(1..=max_edges);
    random::uniform_hypergraph(rng, n, k, count)
}

/// Random nontrivial `k`-uniform hypergraph on `min_n..=max_n` vertices.
fn small_edge_set(rng: &mut impl Rng, k: usize, min_n: usize, max_n: usize) -> Hypergraph {
    loop {
        let n = rng.gen_range(min_n.max(k)..=max_n);
        let count = rng.gen_range(1..=n + 1);
        let h = random::uniform_hypergraph(rng, n, k, count);
        if !h.is_trivial() {
            return h;
        }
    }
}

pub fn theorem_registry() -> Vec<TheoremCase> {
    vec![
        // ---- general facts ----
        TheoremCase::new("trivial", &["general", "equality"], "I(trivial(n)) = n", |run| {
            for n in 1..=6 {
                expect_i(run, format!("trivial({n})"), &families::trivial(n).unwrap(), n);
            }
        }),
        TheoremCase::new("zero-forcing", &["general", "graph", "equality"], "Z(G) = I(G) for 2-uniform G", |run| {
            for n in 1..=6 {
                for g in enumerate::graphs(n) {
                    let label = format!("graph {:?} on {n}", g.edge_labels());
                    run.check(label, &[&g], |ctx| Ok(Check::eq("I", ctx.i(&g)?, zero_forcing_oracle(&g))));
                }
            }
            for n in 2..=7 {
                let p = families::path_graph(n).unwrap();
                run.check(format!("P{n}"), &[&p], |ctx| Ok(Check::eq("Z", ctx.z(&p)?, 1)));
                let k = families::complete(n, 2).unwrap();
                run.check(format!("K{n}"), &[&k], |ctx| Ok(Check::eq("Z", ctx.z(&k)?, n - 1)));
                if n >= 3 {
                    let c = families::cycle_graph(n).unwrap();
                    run.check(format!("C{n}"), &[&c], |ctx| Ok(Check::eq("Z", ctx.z(&c)?, 2)));
                }
            }
            // Z = 1 exactly for paths among connected graphs
            for n in 2..=6 {
                for g in enumerate::connected_graphs(n) {
                    let is_path = g.num_edges() == n - 1 && max_degree(&g) <= 2;
                    run.check(format!("Z=1 iff path: {:?}", g.edge_labels()), &[&g], |ctx| {
                        let z = ctx.z(&g)?;
                        Ok(Check::holds((z == 1) == is_path, || format!("Z = {z}, path = {is_path}")))
                    });
                }
            }
        }),
        TheoremCase::new("upper-bound", &["general", "bound"], "I(H) <= n - k + 1, k the largest edge size", |run| {
            let mut rng = run.rng(1);
            for i in 0..100 {
                let n = rng.gen_range(1..=8);
                let h = random::nontrivial_hypergraph(&mut rng, n, 6, 5);
                run.check(format!("random #{i}"), &[&h], |ctx| Ok(Check::le("I <= n-k+1", ctx.i(&h)?, solver::upper_bound(&h))));
            }
        }),
        TheoremCase::new("additivity", &["general", "equality"], "I(H) = sum of I over components", |run| {
            let mut rng = run.rng(2);
            for i in 0..60 {
                let (na, nb) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
                let a = random::hypergraph(&mut rng, na, 4, 4);
                let b = random::hypergraph(&mut rng, nb, 4, 4);
                let u = a.disjoint_union(&b);
                run.check(format!("union #{i}"), &[&a, &b], |ctx| Ok(Check::eq("I(A+B)", ctx.i(&u)?, ctx.i(&a)? + ctx.i(&b)?)));
            }
        }),
        TheoremCase::new("superedge", &["general", "equality"], "V(H) in E(H) => I(H) = 1", |run| {
            let mut rng = run.rng(3);
            for i in 0..50 {
                let n = rng.gen_range(1..=8);
                let base = random::hypergraph(&mut rng, n, 5, 4);
                let mut edges = base.edges().to_vec();
                edges.push(VertexSet::full(n));
                let h = Hypergraph::from_sets(n, edges).unwrap();
                expect_i(run, format!("random #{i}"), &h, 1);
            }
        }),
        TheoremCase::new("subedge-removal", &["general", "equality"], "E1 subset of E2 => I(H) = I(H - E1)", |run| {
            let mut rng = run.rng(4);
            for i in 0..80 {
                let n = rng.gen_range(2..=8);
                let h = random::nontrivial_hypergraph(&mut rng, n, 7, 5);
                let r = h.reduce();
                run.check(format!("random #{i}"), &[&h], |ctx| Ok(Check::eq("I(reduce H)", ctx.i(&r)?, ctx.i(&h)?)));
            }
        }),
        TheoremCase::new("degree-one", &["general", "implication"], "H reduced and I(H) = 1 => min degree = 1", |run| {
            for n in 1..=5 {
                // a trivial hypergraph on one vertex has I = 1 without any edge to fire
                for h in enumerate::reduced_hypergraphs(n).into_iter().filter(|h| !h.is_trivial()) {
                    run.check(format!("{:?} on {n}", h.edge_labels()), &[&h], |ctx| {
                        let i = ctx.i(&h)?;
                        Ok(Check::holds(i != 1 || min_degree(&h) == 1, || format!("I = 1 but min degree {}", min_degree(&h))))
                    });
                }
            }
        }),
        // ---- families ----
        TheoremCase::new("complete", &["family", "equality"], "I(K(n,k)) = n - k + 1", |run| {
            for n in 1..=8 {
                for k in 1..=n {
                    expect_i(run, format!("K({n},{k})"), &families::complete(n, k).unwrap(), n - k + 1);
                }
            }
        }),
        TheoremCase::new("multipartite", &["family", "equality"], "I(K(n_1,...,n_k)) = sum n_i - k", |run| {
            let sizes: Vec<usize> = (1..=9).collect();
            for parts in multisets(&sizes, |&s| s, 9, 2) {
                if parts.iter().all(|&p| p == 1) {
                    continue;
                }
                let h = families::complete_multipartite(&parts).unwrap();
                let expected = parts.iter().sum::<usize>() - parts.len();
                expect_i(run, format!("parts {parts:?}"), &h, expected);
            }
        })
        .with_note("single-part tuples and all-ones tuples are outside the formula (one edge, or singleton edges)"),
        TheoremCase::new("flower", &["family", "equality"], "I(flower with p petals) = p - 1", |run| {
            for p in 2..=5 {
                for core in 1..=2 {
                    let shapes = [vec![1; p], vec![2; p], (0..p).map(|i| 1 + i % 2).collect()];
                    for extras in shapes {
                        let h = families::flower(core, &extras).unwrap();
                        expect_i(run, format!("core {core}, extras {extras:?}"), &h, p - 1);
                    }
                }
            }
        }),
        TheoremCase::new("interval", &["family", "equality"], "I(reduced interval H) = number of components", |run| {
            let mut rng = run.rng(5);
            for i in 0..50 {
                let n = rng.gen_range(3..=10);
                let (intervals, h) = random::interval_instance(&mut rng, n, 5);
                let r = h.reduce();
                let comps = r.components().len();
                run.check(format!("#{i} n={n} {intervals:?}"), &[&r], |ctx| Ok(Check::eq("I", ctx.i(&r)?, comps)));
            }
        }),
        TheoremCase::new("hypercycle", &["family", "bound"], "I(hypercycle) <= 2, and = 1 iff some vertex has degree 1", |run| {
            let mut shapes: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
            for r in 3..=6 {
                for overlap in 1..=2 {
                    for private in 0..=1 {
                        if r * (overlap + private) <= 12 {
                            shapes.push((vec![2 * overlap + private; r], vec![overlap; r]));
                        }
                    }
                }
            }
            let mut rng = run.rng(6);
            while shapes.len() < 40 {
                let r = rng.gen_range(3..=6);
                let overlaps: Vec<usize> = (0..r).map(|_| rng.gen_range(1..=2)).collect();
                let private: Vec<usize> = (0..r).map(|_| rng.gen_range(0..=1)).collect();
                if overlaps.iter().sum::<usize>() + private.iter().sum::<usize>() > 12 {
                    continue;
                }
                let sizes = (0..r).map(|i| overlaps[(i + r - 1) % r] + overlaps[i] + private[i]).collect();
                shapes.push((sizes, overlaps));
            }
            for (sizes, overlaps) in shapes {
                let h = families::hypercycle(&sizes, &overlaps).unwrap();
                let leaf = min_degree(&h) == 1;
                run.check(format!("sizes {sizes:?}, overlaps {overlaps:?}"), &[&h], |ctx| {
                    let i = ctx.i(&h)?;
                    Ok(Check::all([Check::le("I <= 2", i, 2), Check::holds((i == 1) == leaf, || format!("I = {i}, degree-1 vertex: {leaf}"))]))
                });
            }
        }),
        TheoremCase::new("degree-two", &["family", "bound"], "connected k-uniform H with max degree <= 2 => I(H) <= k", |run| {
            let mut instances = Vec::new();
            for k in 2..=5 {
                for t in 1..=k / 2 {
                    let step = k - t;
                    let mut n = step;
                    while n <= 12 {
                        if n >= k {
                            instances.push(families::tight_cycle(n, k, t).unwrap());
                        }
                        n += step;
                    }
                }
            }
            let mut rng = run.rng(7);
            let mut tries = 0;
            while instances.len() < 60 && tries < 20_000 {
                tries += 1;
                let k = rng.gen_range(2..=4);
                let h = small_uniform(&mut rng, k, 9, 5);
                if h.is_connected() && no_isolated(&h) && max_degree(&h) <= 2 {
                    instances.push(h);
                }
            }
            for h in instances {
                let k = h.uniformity().unwrap();
                run.check(format!("{:?}", h.edge_labels()), &[&h], |ctx| Ok(Check::le("I <= k", ctx.i(&h)?, k)));
            }
        }),
        TheoremCase::new(
            "linear-degree-two",
            &["family", "bound"],
            "reduced connected linear H with max degree <= 2 => I(H) <= 2, and = 1 iff some vertex has degree 1",
            |run| {
                let mut instances = Vec::new();
                for r in 3..=6 {
                    for private in 0..=2 {
                        if r * (1 + private) <= 12 {
                            instances.push(families::hypercycle(&vec![2 + private; r], &vec![1; r]).unwrap());
                        }
                    }
                }
                for k in 2..=4 {
                    for len in 1..=4 {
                        let intervals: Vec<(usize, usize)> = (0..len).map(|j| (1 + j * (k - 1), k)).collect();
                        let n = 1 + len * (k - 1);
                        instances.push(families::interval(n, &intervals).unwrap());
                    }
                }
                let mut rng = run.rng(8);
                let mut tries = 0;
                while instances.len() < 60 && tries < 20_000 {
                    tries += 1;
                    let n = rng.gen_range(3..=9);
                    let h = random::hypergraph(&mut rng, n, 5, 4);
                    if !h.is_trivial() && h.is_reduced() && h.is_linear() && h.is_connected() && no_isolated(&h) && max_degree(&h) <= 2 {
                        instances.push(h);
                    }
                }
                for h in instances {
                    let leaf = min_degree(&h) == 1;
                    run.check(format!("{:?}", h.edge_labels()), &[&h], |ctx| {
                        let i = ctx.i(&h)?;
                        Ok(Check::all([Check::le("I <= 2", i, 2), Check::holds((i == 1) == leaf, || format!("I = {i}, degree-1 vertex: {leaf}"))]))
                    });
                }
            },
        ),
        TheoremCase::new("tight-cycle-case-1", &["family", "tight-cycle", "equality"], "n >= 2k-1 => I(C(n,k,k-1)) = 2", |run| {
            for k in 3..=5 {
                for n in 2 * k - 1..=(2 * k + 2).min(10) {
                    expect_i(run, format!("C({n},{k},{})", k - 1), &families::tight_cycle(n, k, k - 1).unwrap(), 2);
                }
            }
        }),
        TheoremCase::new(
            "tight-cycle-case-2",
            &["family", "tight-cycle", "equality"],
            "k+1 <= n < 2k-1 => I(C(n,k,k-1)) = min(i+1, n-k+1), i = ceil((k-1)/(n-k))",
            |run| {
                for k in 3..=5 {
                    for n in k + 1..(2 * k - 1).min(11) {
                        let i = (k - 1usize).div_ceil(n - k);
                        expect_i(run, format!("C({n},{k},{})", k - 1), &families::tight_cycle(n, k, k - 1).unwrap(), (i + 1).min(n - k + 1));
                    }
                }
            },
        ),
        TheoremCase::new("tight-cycle-case-3", &["family", "tight-cycle", "equality"], "I(C(k,k,k-1)) = 1", |run| {
            for k in 3..=5 {
                expect_i(run, format!("C({k},{k},{})", k - 1), &families::tight_cycle(k, k, k - 1).unwrap(), 1);
            }
        }),
        TheoremCase::new(
            "tight-cycle-pairs",
            &["family", "tight-cycle", "structure"],
            "k+1 <= n < 2k-1 => every vertex pair of C(n,k,k-1) lies in >= 2 edges",
            |run| {
                for k in 3..=7 {
                    for n in k + 1..2 * k - 1 {
                        let h = families::tight_cycle(n, k, k - 1).unwrap();
                        run.check(format!("C({n},{k},{})", k - 1), &[&h], |_| {
                            let mut worst = usize::MAX;
                            families::for_each_subset(n, 2, |p| worst = worst.min(h.degree(&VertexSet::from(p)).unwrap()));
                            Ok(Check::holds(worst >= 2, || format!("some pair lies in {worst} edges")))
                        });
                    }
                }
            },
        ),
        TheoremCase::new("tight-cycle-n-k+1", &["family", "tight-cycle", "equality"], "(k-t) | (k+1) => I(C(k+1,k,t)) = (k+1)/(k-t) - 1", |run| {
            for k in 2..=8 {
                for t in 1..k {
                    if (k + 1) % (k - t) == 0 {
                        let h = families::tight_cycle(k + 1, k, t).unwrap();
                        expect_i(run, format!("C({},{k},{t})", k + 1), &h, (k + 1) / (k - t) - 1);
                    }
                }
            }
        })
        .with_note("exact search gives 2 whenever (k+1)/(k-t) >= 4; the formula holds for ratios 2 and 3"),
        TheoremCase::new("augmented-complete", &["family", "equality"], "I(K(n,k) + apex) = n-k if n >= 2k-1, else n-k+1", |run| {
            for k in 3..=4 {
                for n in k..=9 {
                    let expected = if n >= 2 * k - 1 { n - k } else { n - k + 1 };
                    expect_i(run, format!("augmented({n},{k})"), &families::augmented_complete(n, k).unwrap(), expected);
                }
            }
        }),
        TheoremCase::new("extension", &["family", "construction", "equality"], "k-uniform H has a k-uniform extension H' with I(H') = 1", |run| {
            let mut bases = vec![families::complete(4, 3).unwrap(), families::complete(5, 3).unwrap(), designs::fano()];
            for k in 3..=5 {
                bases.push(families::complete(k, k).unwrap());
            }
            let mut rng = run.rng(9);
            for _ in 0..10 {
                let k = rng.gen_range(3..=4);
                bases.push(small_uniform(&mut rng, k, 7, 4));
            }
            for h in bases {
                let ext = families::infection_one_extension(&h).unwrap();
                let contains = h.edges().iter().all(|e| ext.edges().contains(e));
                let uniform = ext.uniformity() == h.uniformity();
                run.check(format!("extension of {:?}", h.edge_labels()), &[&h, &ext], |ctx| {
                    Ok(Check::all([
                        Check::holds(contains && uniform, || "extension lost an edge or its uniformity".into()),
                        Check::eq("I", ctx.i(&ext)?, 1),
                    ]))
                });
            }
        }),
        // ---- designs ----
        TheoremCase::new("symmetric-design", &["design", "equality"], "I(2-(k^2-k+1, k, 1) design) = 3 for k >= 3", |run| {
            for (name, h) in [("fano", designs::fano()), ("pg(2,3)", designs::pg_design(2, 3).unwrap()), ("pg(2,5)", designs::pg_design(2, 5).unwrap())] {
                expect_i(run, name, &h, 3);
            }
        }),
        TheoremCase::new("pg-design", &["design", "equality"], "I(PG(n,q) lines) = n + 1", |run| {
            for (n, q) in [(2, 2), (2, 3), (3, 2), (2, 5), (3, 3), (4, 2)] {
                expect_i(run, format!("pg({n},{q})"), &designs::pg_design(n, q).unwrap(), n + 1);
            }
        }),
        TheoremCase::new("block-count", &["design", "structure"], "blocks through an s-set of a t-(n,k,1) design = C(n-s,t-s)/C(k-s,t-s)", |run| {
            let designs_under_test = [designs::fano(), designs::pg_design(2, 3).unwrap(), designs::pg_design(3, 2).unwrap()];
            for h in designs_under_test {
                let (n, k) = (h.num_vertices(), h.uniformity().unwrap());
                for s in 0..=2 {
                    run.check(format!("{n} points, s = {s}"), &[&h], |_| {
                        let expected = designs::blocks_through(n, k, 2, s).unwrap() as usize;
                        let mut counts = Vec::new();
                        families::for_each_subset(n, s, |w| counts.push(h.degree(&VertexSet::from(w)).unwrap_or(h.num_edges())));
                        Ok(Check::holds(counts.iter().all(|&c| c == expected), || format!("counts {counts:?}, expected {expected}")))
                    });
                }
            }
        }),
        TheoremCase::new("derived-subdesign", &["design", "structure"], "the derived set of any W induces a trivial hypergraph or a t-(|I_W|,k,1) design", |run| {
            for (name, h, max_w) in [("fano", designs::fano(), 4), ("pg(2,3)", designs::pg_design(2, 3).unwrap(), 4), ("pg(3,2)", designs::pg_design(3, 2).unwrap(), 3)] {
                let n = h.num_vertices();
                for size in 1..=max_w {
                    run.check(format!("{name}, |W| = {size}"), &[&h], |_| {
                        let mut bad = None;
                        families::for_each_subset(n, size, |w| {
                            if bad.is_none() {
                                let verdict = designs::derived_subdesign_check(&h, &VertexSet::from(w), 2).unwrap();
                                if verdict.is_violation() {
                                    bad = Some(format!("{verdict:?}"));
                                }
                            }
                        });
                        Ok(match bad {
                            Some(b) => Check::Fail(b),
                            None => Check::Pass(None),
                        })
                    });
                }
            }
        }),
        TheoremCase::new("design-corollary", &["design", "equality"], "t-(n,k,1) design without non-trivial sub-designs => I = t + 1", |run| {
            for (name, h) in [("fano", designs::fano()), ("pg(2,3)", designs::pg_design(2, 3).unwrap()), ("pg(3,2)", designs::pg_design(3, 2).unwrap())] {
                let subs = designs::proper_derived_subdesigns(&h, 2).unwrap();
                if subs.is_empty() {
                    expect_i(run, name, &h, 3);
                } else {
                    run.skip(name, format!("has {} proper derived sub-designs", subs.len()));
                }
            }
        }),
        // ---- products ----
        TheoremCase::new(
            "direct-product-complete",
            &["product", "equality"],
            "some n_i >= 2k_i => I(K(n_1,k_1) x ... x K(n_l,k_l)) = sum (n_i - k_i)",
            |run| direct_product_sweep(run, true),
        )
        .with_note("checked for l >= 2 factors; a single factor is the complete hypergraph with value n-k+1"),
        TheoremCase::new(
            "direct-product-plus-one",
            &["product", "equality"],
            "all n_i < 2k_i => I(K(n_1,k_1) x ... x K(n_l,k_l)) = 1 + sum (n_i - k_i)",
            |run| direct_product_sweep(run, false),
        ),
        TheoremCase::new("product-sum-bound", &["product", "bound"], "I(H1 x H2) <= I(H1) + I(H2)", |run| {
            let mut rng = run.rng(10);
            for i in 0..200 {
                let (na, nb) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
                let a = random::nontrivial_hypergraph(&mut rng, na, 3, 3);
                let b = random::nontrivial_hypergraph(&mut rng, nb, 3, 3);
                let p = products::direct_product(&a, &b).unwrap().hypergraph;
                run.check(format!("pair #{i}"), &[&a, &b], |ctx| Ok(Check::le("I(A x B) <= I(A)+I(B)", ctx.i(&p)?, ctx.i(&a)? + ctx.i(&b)?)));
            }
        }),
        TheoremCase::new("product-of-ones", &["product", "equality"], "|E(H_i)| > 1 and I(H_i) = 1 => I(H1 x H2) = 2", |run| {
            let mut ones: Vec<Hypergraph> = vec![
                families::path_graph(3).unwrap(),
                families::path_graph(4).unwrap(),
                families::flower(2, &[1, 1]).unwrap(),
                families::interval(5, &[(1, 3), (3, 3)]).unwrap(),
            ];
            let mut rng = run.rng(11);
            let mut tries = 0;
            while ones.len() < 10 && tries < 2000 {
                tries += 1;
                let n = rng.gen_range(2..=4);
                let h = random::hypergraph(&mut rng, n, 3, 3);
                if h.num_edges() > 1 && h.is_reduced() && run.ctx.i(&h).ok() == Some(1) {
                    ones.push(h);
                }
            }
            for a in 0..ones.len() {
                for b in a..ones.len() {
                    let (x, y) = (&ones[a], &ones[b]);
                    let p = products::direct_product(x, y).unwrap().hypergraph;
                    run.check(format!("{:?} x {:?}", x.edge_labels(), y.edge_labels()), &[x, y], |ctx| Ok(Check::eq("I", ctx.i(&p)?, 2)));
                }
            }
        })
        .with_note("factors are reduced; with a nested edge such as {1},{1,2} a single vertex can still start the spread"),
        TheoremCase::new("join-example", &["product", "join", "equality"], "{12},{34}: I = 2, I(H x H_1^1) = 1", |run| {
            let h = hg(4, &[&[1, 2], &[3, 4]]);
            let j = products::join_universal_vertex(&h).unwrap().hypergraph;
            expect_i(run, "H", &h, 2);
            expect_i(run, "H x H_1^1", &j, 1);
        }),
        TheoremCase::new("join-sandwich", &["product", "join", "bound"], "I(H) - 1 <= I(H x H_1^1) <= I(H)", |run| {
            for h in join_sweep() {
                let j = products::join_universal_vertex(&h).unwrap().hypergraph;
                run.check(format!("{:?} on {}", h.edge_labels(), h.num_vertices()), &[&h], |ctx| {
                    let (i, jv) = (ctx.i(&h)?, ctx.i(&j)?);
                    Ok(Check::holds(i <= jv + 1 && jv <= i, || format!("I = {i}, join = {jv}")))
                });
            }
        }),
        TheoremCase::new(
            "join-characterization",
            &["product", "join", "equality"],
            "I(H x H_1^1) = I(H) - 1 <=> H is disconnected with a single-edge component",
            |run| {
                for h in join_sweep() {
                    let j = products::join_universal_vertex(&h).unwrap().hypergraph;
                    let predicted = !h.is_connected() && has_single_edge_component(&h);
                    run.check(format!("{:?} on {}", h.edge_labels(), h.num_vertices()), &[&h], |ctx| {
                        let (i, jv) = (ctx.i(&h)?, ctx.i(&j)?);
                        Ok(Check::holds((jv + 1 == i) == predicted, || format!("I = {i}, join = {jv}, characterization predicts drop = {predicted}")))
                    });
                }
            },
        )
        .with_note("the 'only if' direction fails: e.g. K4 has I = 3 while its join has I = 2"),
        TheoremCase::new(
            "join-drop-sufficient",
            &["product", "join", "implication"],
            "H disconnected with a single-edge component => I(H x H_1^1) = I(H) - 1",
            |run| {
                for h in join_sweep().into_iter().filter(|h| !h.is_connected() && has_single_edge_component(h)) {
                    let j = products::join_universal_vertex(&h).unwrap().hypergraph;
                    run.check(format!("{:?} on {}", h.edge_labels(), h.num_vertices()), &[&h], |ctx| {
                        let i = ctx.i(&h)?;
                        Ok(Check::eq("I(join)", ctx.i(&j)?, i - 1))
                    });
                }
            },
        ),
        TheoremCase::new("weak-corona", &["product", "corona", "bound"], "I(G o_w H) <= |V(G)| I(H)", |run| {
            let mut pairs: Vec<(Hypergraph, Hypergraph)> = vec![
                (families::cycle_graph(3).unwrap(), hg(2, &[&[1], &[2]])),
                (families::complete(3, 3).unwrap(), families::complete(2, 2).unwrap()),
            ];
            let mut rng = run.rng(12);
            for _ in 0..40 {
                let k = rng.gen_range(2..=3);
                let g = small_edge_set(&mut rng, k, 2, if k == 2 { 4 } else { 5 });
                let h = small_edge_set(&mut rng, k - 1, 1, 3);
                pairs.push((g, h));
            }
            for (g, h) in &pairs {
                let c = products::weak_corona(g, h).unwrap().hypergraph;
                let bound_of = |ctx: &super::Ctx| -> crate::Result<usize> { Ok(g.num_vertices() * ctx.i(h)?) };
                run.check(format!("G {:?}, H {:?}", g.edge_labels(), h.edge_labels()), &[g, h], |ctx| {
                    Ok(Check::le("I(G o_w H) <= |V(G)| I(H)", ctx.i(&c)?, bound_of(ctx)?))
                });
            }
            // a 3-uniform ring of 5 edges on 10 vertices, each vertex joined to a pendant 2-edge
            let g = families::tight_cycle(10, 3, 1).unwrap();
            let h = families::complete(2, 2).unwrap();
            let c = products::weak_corona(&g, &h).unwrap().hypergraph;
            run.check("ring of 5 triples with pendant edges", &[&g, &h], |ctx| {
                let value = ctx.i(&c)?;
                Ok(Check::all([Check::le("I <= 10", value, 10), Check::Pass(Some(format!("I = {value}")))]))
            });
        }),
        TheoremCase::new(
            "strong-corona",
            &["product", "corona", "bound"],
            "I(G o_s H) <= I(G)|V(H)| + (|V(G)| - I(G)) I(H)",
            |run| {
                let mut pairs: Vec<(Hypergraph, Hypergraph)> =
                    vec![(families::complete(3, 2).unwrap(), families::complete(2, 2).unwrap()), (families::complete(2, 2).unwrap(), families::complete(2, 2).unwrap())];
                let mut rng = run.rng(13);
                for _ in 0..40 {
                    let k = rng.gen_range(2..=3);
                    let g = small_edge_set(&mut rng, k, 2, 4);
                    let h = small_edge_set(&mut rng, k, 2, 3);
                    pairs.push((g, h));
                }
                for (g, h) in &pairs {
                    let c = products::strong_corona(g, h).unwrap().hypergraph;
                    run.check(format!("G {:?}, H {:?}", g.edge_labels(), h.edge_labels()), &[g, h], |ctx| {
                        let (ig, ih) = (ctx.i(g)?, ctx.i(h)?);
                        let bound = ig * h.num_vertices() + (g.num_vertices() - ig) * ih;
                        Ok(Check::le("strong corona bound", ctx.i(&c)?, bound))
                    });
                }
            },
        )
        .with_note("this bound concerns the strong corona; the weak corona has its own case"),
        TheoremCase::new("strong-corona-edge-count", &["product", "structure"], "edges generated = |E(G)| + |V(G)| |E(H)| (k+1)", |run| {
            let mut rng = run.rng(14);
            let mut pairs = vec![(families::complete(2, 2).unwrap(), families::complete(2, 2).unwrap())];
            for _ in 0..30 {
                let k = rng.gen_range(2..=4);
                pairs.push((small_edge_set(&mut rng, k, 2, 6), small_edge_set(&mut rng, k, 2, 5)));
            }
            for (g, h) in &pairs {
                run.check(format!("G {:?}, H {:?}", g.edge_labels(), h.edge_labels()), &[g, h], |_| {
                    let list = products::strong_corona_edge_list(g, h)?;
                    let formula = products::strong_corona_edge_formula(g, h)?;
                    let mut distinct = list.clone();
                    distinct.sort();
                    distinct.dedup();
                    let built = products::strong_corona(g, h)?.hypergraph.num_edges();
                    Ok(Check::all([
                        Check::eq("generated", list.len(), formula),
                        Check::eq("after dedup", built, distinct.len()),
                    ]))
                });
            }
        }),
        TheoremCase::new("m-step", &["infection", "bound"], "I_{m+1}(H) <= I_m(H) + |E(H)|", |run| {
            let single = families::complete(3, 3).unwrap();
            run.check("single 3-edge, m = 2", &[&single], |ctx| Ok(Check::eq("I_2", ctx.im(&single, 2)?, 2)));
            let mut rng = run.rng(15);
            for i in 0..200 {
                let n = rng.gen_range(1..=7);
                let h = random::nontrivial_hypergraph(&mut rng, n, 4, 4);
                let m = rng.gen_range(1..=3);
                run.check(format!("#{i}, m = {m}"), &[&h], |ctx| {
                    Ok(Check::le("I_{m+1} <= I_m + |E|", ctx.im(&h, m + 1)?, ctx.im(&h, m)? + h.num_edges()))
                });
            }
        }),
        TheoremCase::new("cartesian", &["product", "cartesian", "bound"], "I(G box H) <= I(G) I_2(H)", |run| {
            let e = families::complete(2, 2).unwrap();
            let sq = products::cartesian_product(&e, &e).unwrap().hypergraph;
            run.check("single edge box single edge", &[&e, &e], |ctx| Ok(Check::all([Check::eq("I", ctx.i(&sq)?, 2), Check::eq("I(G) I_2(H)", ctx.i(&e)? * ctx.im(&e, 2)?, 2)])));
            cartesian_sweep(run, 16, |ctx, g, h, value| Ok(Check::le("I(G box H) <= I(G) I_2(H)", value, ctx.i(g)? * ctx.im(h, 2)?)));
        }),
        TheoremCase::new("cartesian-corollary", &["product", "cartesian", "bound"], "I(G box H) <= I(G) (I(H) + |E(H)|)", |run| {
            cartesian_sweep(run, 17, |ctx, g, h, value| Ok(Check::le("I(G box H) <= I(G)(I(H)+|E(H)|)", value, ctx.i(g)? * (ctx.i(h)? + h.num_edges()))));
        }),
        TheoremCase::new("cartesian-graphs", &["product", "cartesian", "graph", "bound"], "graphs: I_2(H) = |V(H)| and Z(G box H) <= Z(G) |V(H)|", |run| {
            let p3 = families::path_graph(3).unwrap();
            let grid = products::cartesian_product(&p3, &p3).unwrap().hypergraph;
            run.check("P3 box P3", &[&p3, &p3], |ctx| Ok(Check::eq("Z", ctx.z(&grid)?, 3)));
            let mut rng = run.rng(18);
            for i in 0..60 {
                let g = small_edge_set(&mut rng, 2, 2, 4);
                let h = small_edge_set(&mut rng, 2, 2, 3);
                let p = products::cartesian_product(&g, &h).unwrap().hypergraph;
                run.check(format!("pair #{i}"), &[&g, &h], |ctx| {
                    Ok(Check::all([
                        Check::eq("I_2(H)", ctx.im(&h, 2)?, h.num_vertices()),
                        Check::le("Z(G box H) <= Z(G)|V(H)|", ctx.z(&p)?, ctx.z(&g)? * h.num_vertices()),
                    ]))
                });
            }
        }),
        // ---- line graphs ----
        TheoremCase::new("line-graph-bound", &["line-graph", "bound"], "I(H) <= k Z(L(H)) for k-uniform H without isolated vertices", |run| {
            let mut rng = run.rng(19);
            for i in 0..200 {
                let k = rng.gen_range(2..=4);
                let h = loop {
                    let h = small_uniform(&mut rng, k, 8, 6);
                    if no_isolated(&h) {
                        break h;
                    }
                };
                let l = h.line_graph().unwrap();
                run.check(format!("#{i}"), &[&h], |ctx| Ok(Check::le("I(H) <= k Z(L(H))", ctx.i(&h)?, k * ctx.z(&l)?)));
            }
        }),
        TheoremCase::new("adjacency-law", &["line-graph", "graph", "equality"], "G connected simple graph => I(adjacency hypergraph of G) = 2", |run| {
            adjacency_sweep(run, |_| 2);
        })
        .with_note("fails exactly when G has a degree-1 vertex: its singleton hyperedge lets one vertex start the spread, giving 1"),
        TheoremCase::new(
            "adjacency-min-degree",
            &["line-graph", "graph", "equality"],
            "G connected simple graph => I(adjacency hypergraph of G) = 2 if min degree >= 2, else 1",
            |run| adjacency_sweep(run, |g| if min_degree(g) >= 2 { 2 } else { 1 }),
        ),
        TheoremCase::new("adjacency-line-graph", &["line-graph", "structure"], "L(adjacency hypergraph of G) is isomorphic to G", |run| {
            // from 3 vertices on; a lone edge gives two equal singleton hyperedges
            for n in 3..=6 {
                for g in enumerate::connected_graphs(n) {
                    run.check(format!("{:?}", g.edge_labels()), &[&g], |_| {
                        let back = g.adjacency_hypergraph()?.line_graph()?;
                        Ok(Check::holds(enumerate::is_isomorphic(&back, &g), || format!("got {:?}", back.edge_labels())))
                    });
                }
            }
        }),
        // ---- worked example and conjecture ----
        TheoremCase::new("hypertree", &["example", "equality"], "hypertree {156},{256},{356},{456}: I = 3, host tree Z = 2", |run| {
            let h = hg(6, &[&[1, 5, 6], &[2, 5, 6], &[3, 5, 6], &[4, 5, 6]]);
            expect_i(run, "hypertree", &h, 3);
            run.check("{1,2,3} infects everything", &[&h], |_| {
                let d = infection::derived_set(&h, &VertexSet::from([0, 1, 2]), 1)?;
                Ok(Check::eq("|derived|", d.len(), 6))
            });
            let tree = hg(6, &[&[1, 5], &[2, 5], &[5, 6], &[3, 6], &[4, 6]]);
            run.check("host tree", &[&tree], |ctx| Ok(Check::eq("Z", ctx.z(&tree)?, 2)));
        }),
        TheoremCase::new(
            "conjecture-sweep",
            &["conjecture"],
            "k-uniform H with I(H) = n-k+1: every extremal infection set leaves its k-1 uninfected vertices inside an edge",
            |run| {
                for (k, max_n) in [(3, 6), (4, 6)] {
                    for n in k..=max_n {
                        let classes: Vec<Hypergraph> = enumerate::uniform_hypergraphs(n, k).into_iter().filter(|h| !h.is_trivial()).collect();
                        let (mut applicable, mut total, mut counterexamples) = (0, 0, 0);
                        for h in &classes {
                            total += 1;
                            let report = solver::check_conjecture_with(h, &run.ctx.config);
                            if matches!(report, Ok(ref r) if r.is_applicable()) {
                                applicable += 1;
                            }
                            let label = format!("k={k} {:?} on {n}", h.edge_labels());
                            if let Ok(ConjectureReport::Violated { seed, uninfected, .. }) = &report {
                                counterexamples += 1;
                                run.counterexample(label.clone(), format!("seed {seed} leaves {uninfected} outside every edge"), &[h]);
                            }
                            run.check(label, &[h], |_| report.map(|_| Check::Pass(None)));
                        }
                        run.observe(format!("k={k}, n={n}: {total} classes, {applicable} with I = n-k+1, {counterexamples} counterexamples"));
                    }
                }
            },
        ),
    ]
}

fn direct_product_sweep(run: &mut CaseRun, some_large: bool) {
    let pairs: Vec<(usize, usize)> = (1..=9).flat_map(|n| (1..=n).map(move |k| (n, k))).collect();
    for factors in multisets(&pairs, |&(n, _)| n, 10, 2) {
        let large = factors.iter().any(|&(n, k)| n >= 2 * k);
        if large != some_large {
            continue;
        }
        let hs: Vec<Hypergraph> = factors.iter().map(|&(n, k)| families::complete(n, k).unwrap()).collect();
        let p = products::direct_product_all(&hs).unwrap().hypergraph;
        let sum: usize = factors.iter().map(|&(n, k)| n - k).sum();
        let expected = if some_large { sum } else { sum + 1 };
        expect_i(run, format!("{factors:?}"), &p, expected);
    }
}

fn cartesian_sweep(run: &mut CaseRun, salt: u64, bound: impl Fn(&super::Ctx, &Hypergraph, &Hypergraph, usize) -> crate::Result<Check>) {
    let mut rng = run.rng(salt);
    for i in 0..200 {
        let ng = rng.gen_range(2..=4);
        let nh = rng.gen_range(2..=3);
        let g = random::nontrivial_hypergraph(&mut rng, ng, 3, 3);
        let h = random::nontrivial_hypergraph(&mut rng, nh, 3, 3);
        let p = products::cartesian_product(&g, &h).unwrap().hypergraph;
        run.check(format!("pair #{i}"), &[&g, &h], |ctx| {
            let value = ctx.i(&p)?;
            bound(ctx, &g, &h, value)
        });
    }
}

fn adjacency_sweep(run: &mut CaseRun, expected: impl Fn(&Hypergraph) -> usize) {
    for n in 3..=7 {
        for g in enumerate::connected_graphs(n) {
            let a = g.adjacency_hypergraph().unwrap();
            let want = expected(&g);
            run.check(format!("{:?}", g.edge_labels()), &[&g], |ctx| Ok(Check::eq("I", ctx.i(&a)?, want)));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn registry_ids_are_unique_and_cover_the_results() {
        let reg = theorem_registry();
        let ids: HashSet<&str> = reg.iter().map(|c| c.id).collect();
        assert_eq!(ids.len(), reg.len());
        let required = [
            "trivial",
            "zero-forcing",
            "upper-bound",
            "additivity",
            "superedge",
            "subedge-removal",
            "degree-one",
            "complete",
            "multipartite",
            "flower",
            "interval",
            "hypercycle",
            "degree-two",
            "linear-degree-two",
            "tight-cycle-case-1",
            "tight-cycle-case-2",
            "tight-cycle-case-3",
            "tight-cycle-pairs",
            "tight-cycle-n-k+1",
            "augmented-complete",
            "extension",
            "symmetric-design",
            "pg-design",
            "block-count",
            "derived-subdesign",
            "design-corollary",
            "direct-product-complete",
            "direct-product-plus-one",
            "product-sum-bound",
            "product-of-ones",
            "join-example",
            "join-sandwich",
            "join-characterization",
            "join-drop-sufficient",
            "weak-corona",
            "strong-corona",
            "strong-corona-edge-count",
            "m-step",
            "cartesian",
            "cartesian-corollary",
            "cartesian-graphs",
            "line-graph-bound",
            "adjacency-law",
            "adjacency-line-graph",
            "hypertree",
            "conjecture-sweep",
        ];
        for id in required {
            assert!(ids.contains(id), "missing case {id}");
        }
        assert!(reg.len() >= 22);
    }

    #[test]
    fn multiset_enumeration() {
        let items = [1usize, 2, 3];
        let all = multisets(&items, |&x| x, 3, 1);
        assert_eq!(all, vec![vec![1], vec![1, 1], vec![1, 1, 1], vec![1, 2], vec![2], vec![3]]);
    }
}
