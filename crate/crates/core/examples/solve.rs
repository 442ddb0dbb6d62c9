//! Exact infection numbers with witnesses, bounds and budgets.
//!
//! ```text
//! cargo run --release --example solve -- path/to/file.hg
//! ```
//! Without an argument a few built-in hypergraphs are solved.

use hyperinfect::solver::{self, SolverConfig};
use hyperinfect::{designs, families, io, Error, Hypergraph};

fn report(name: &str, h: &Hypergraph, config: &SolverConfig) {
    match solver::infection_number_with(h, 1, config) {
        Ok(r) => println!(
            "{name:<22} n={:<3} I={:<2} witness {:<14} bounds {}..={} ({} seeds tried)",
            h.num_vertices(),
            r.infection_number,
            r.witness.to_string(),
            r.lower_bound_used,
            r.upper_bound_used,
            r.enumerated_count
        ),
        Err(Error::BudgetExceeded { required, budget, .. }) => {
            println!("{name:<22} needs {required} closure evaluations, budget is {budget}")
        }
        Err(e) => println!("{name:<22} error: {e}"),
    }
}

fn main() -> hyperinfect::Result<()> {
    let config = SolverConfig::from_env()?;
    if let Some(path) = std::env::args().nth(1) {
        let h = io::load(&path)?;
        report(&path, &h, &config);
        for m in 2..=3 {
            let r = solver::infection_number_with(&h, m, &config)?;
            println!("  I_{m} = {}", r.infection_number);
        }
        return Ok(());
    }

    report("complete(7,3)", &families::complete(7, 3)?, &config);
    report("fano plane", &designs::fano(), &config);
    report("pg(3,2)", &designs::pg_design(3, 2)?, &config);
    report("cycle C8", &families::cycle_graph(8)?, &config);
    let scattered = families::complete(3, 2)?.disjoint_union(&families::path_graph(4)?);
    report("K3 + P4 (components)", &scattered, &config);

    // The same search with a tiny budget, and in parallel.
    report("complete(12,4), small", &families::complete(12, 4)?, &config.with_budget(1_000));
    report("complete(12,4), 4 thr", &families::complete(12, 4)?, &config.with_threads(4));
    Ok(())
}
