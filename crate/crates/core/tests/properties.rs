use hyperinfect::infection::{closure, closure_oracle, derived_set};
use hyperinfect::solver::{first_firing_bound, infection_number, upper_bound_m};
use hyperinfect::verify::brute_force_infection_number;
use hyperinfect::{io, Hypergraph, VertexSet};
use proptest::prelude::*;

fn mask_set(mask: u32) -> VertexSet {
    (0..32).filter(|b| mask >> b & 1 == 1).collect()
}

prop_compose! {
    fn hypergraph(max_n: usize, max_edges: usize)(n in 1..=max_n)
        (edges in prop::collection::vec(1u32..(1 << n), 0..=max_edges), n in Just(n)) -> Hypergraph {
        Hypergraph::from_sets(n, edges.into_iter().map(mask_set)).unwrap()
    }
}

prop_compose! {
    fn with_seed(max_n: usize)(h in hypergraph(max_n, 6))
        (seed in 0u32..(1 << h.num_vertices()), h in Just(h)) -> (Hypergraph, VertexSet) {
        (h, mask_set(seed))
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn engine_matches_oracle((h, seed) in with_seed(7), m in 1usize..=3) {
        prop_assert_eq!(derived_set(&h, &seed, m).unwrap(), closure_oracle(&h, &seed, m).unwrap());
    }

    #[test]
    fn closure_is_an_extensive_idempotent_monotone_map((h, seed) in with_seed(7), extra in 0usize..7, m in 1usize..=2) {
        let d = derived_set(&h, &seed, m).unwrap();
        prop_assert!(seed.is_subset(&d));
        prop_assert_eq!(&derived_set(&h, &d, m).unwrap(), &d);
        let mut bigger = seed.clone();
        bigger.insert(extra % h.num_vertices());
        prop_assert!(d.is_subset(&derived_set(&h, &bigger, m).unwrap()));
        prop_assert!(derived_set(&h, &seed, m + 1).unwrap().is_subset(&d));
    }

    #[test]
    fn traces_replay((h, seed) in with_seed(7), m in 1usize..=3) {
        let t = closure(&h, &seed, m).unwrap();
        prop_assert!(t.validate(&h).is_ok());
    }

    #[test]
    fn solver_is_exact(h in hypergraph(6, 6), m in 1usize..=2) {
        let r = infection_number(&h, m).unwrap();
        prop_assert_eq!(r.infection_number, brute_force_infection_number(&h, m).unwrap());
        prop_assert_eq!(r.witness.len(), r.infection_number);
        prop_assert!(derived_set(&h, &r.witness, m).unwrap() == h.vertices());
        prop_assert!(first_firing_bound(&h, m) <= r.infection_number);
        prop_assert!(r.infection_number <= upper_bound_m(&h, m));
    }

    #[test]
    fn reduction_and_relabelling_preserve_i(h in hypergraph(7, 6), rot in 0usize..7) {
        let i = infection_number(&h, 1).unwrap().infection_number;
        prop_assert_eq!(infection_number(&h.reduce(), 1).unwrap().infection_number, i);
        let n = h.num_vertices();
        let perm: Vec<usize> = (0..n).map(|v| (v + rot) % n).collect();
        prop_assert_eq!(infection_number(&h.relabel(&perm).unwrap(), 1).unwrap().infection_number, i);
    }

    #[test]
    fn disjoint_unions_add(a in hypergraph(4, 4), b in hypergraph(4, 4)) {
        let ia = infection_number(&a, 1).unwrap().infection_number;
        let ib = infection_number(&b, 1).unwrap().infection_number;
        prop_assert_eq!(infection_number(&a.disjoint_union(&b), 1).unwrap().infection_number, ia + ib);
    }

    #[test]
    fn formats_round_trip(h in hypergraph(10, 8)) {
        prop_assert_eq!(&io::parse(&io::to_text(&h)).unwrap(), &h);
        prop_assert_eq!(&io::parse(&io::to_json(&h)).unwrap(), &h);
    }
}
