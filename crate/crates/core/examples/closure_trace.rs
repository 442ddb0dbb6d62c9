//! Follows the spread of infection step by step on a small hypertree.
//!
//! Four edges share the pair {5, 6}. Seeding three of the leaves is enough:
//! the first leaf edge fires through its leaf, which hands the shared pair
//! to the last edge.

use hyperinfect::infection::{closure, is_infection_set};
use hyperinfect::{Hypergraph, VertexSet};

fn main() -> hyperinfect::Result<()> {
    let h = Hypergraph::from_labels(6, [[1, 5, 6], [2, 5, 6], [3, 5, 6], [4, 5, 6]])?;

    for labels in [vec![1, 2, 3], vec![5, 6], vec![1, 2]] {
        let seed: VertexSet = labels.iter().map(|l| l - 1).collect();
        let trace = closure(&h, &seed, 1)?;
        println!("seed {seed}:");
        for event in &trace.events {
            let edge = &h.edges()[event.edge_index];
            println!("  {} inside {edge} infects {}", event.witness, event.newly_infected);
        }
        let verdict = if is_infection_set(&h, &seed, 1)? { "infects everything" } else { "gets stuck" };
        println!("  derived set {} -> {verdict}\n", trace.final_set);
    }

    // With m = 2 a lone infected vertex may no longer act as a witness.
    let seed = VertexSet::from([0, 1, 2]);
    println!("under the 2-infection rule seed {seed} reaches {}", closure(&h, &seed, 2)?.final_set);
    Ok(())
}
