//! Sweeps k-uniform hypergraphs up to isomorphism and tests whether every
//! extremal infection set leaves its uninfected vertices inside one edge.
//!
//! ```text
//! cargo run --release --example conjecture_sweep -- [K] [MAX_N]
//! ```

use hyperinfect::enumerate;
use hyperinfect::solver::{check_conjecture, ConjectureReport};

fn main() -> hyperinfect::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("numeric argument"));
    let k = args.next().unwrap_or(3);
    let max_n = args.next().unwrap_or(6);
    for n in k..=max_n {
        let (mut extremal, mut violations) = (0, Vec::new());
        let classes = enumerate::uniform_hypergraphs(n, k);
        for h in classes.iter().filter(|h| !h.is_trivial()) {
            match check_conjecture(h)? {
                ConjectureReport::Holds { .. } => extremal += 1,
                ConjectureReport::Violated { seed, uninfected, .. } => {
                    extremal += 1;
                    violations.push((h.edge_labels(), seed, uninfected));
                }
                ConjectureReport::NotApplicable { .. } => {}
            }
        }
        println!("k={k} n={n}: {} classes, {extremal} extremal, {} violations", classes.len(), violations.len());
        for (edges, seed, uninfected) in violations.iter().take(3) {
            println!("  {edges:?}: seed {seed} leaves {uninfected} outside every edge");
        }
    }
    Ok(())
}
