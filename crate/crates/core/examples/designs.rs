//! Projective geometries as Steiner systems: design checks, derived
//! sub-designs and infection numbers.

use hyperinfect::designs::{self, DesignCheck, SubdesignVerdict};
use hyperinfect::infection::derived_set;
use hyperinfect::solver::infection_number;
use hyperinfect::VertexSet;

fn main() -> hyperinfect::Result<()> {
    for (n, q) in [(2, 2), (2, 3), (3, 2)] {
        let h = designs::pg_design(n, q)?;
        let kind = match designs::is_t_design(&h, 2)? {
            DesignCheck::Design { points, k, lambda, .. } => format!("2-({points},{k},{lambda}) design"),
            DesignCheck::NotDesign { witness, .. } => format!("not a design (pair {witness})"),
        };
        let r = infection_number(&h, 1)?;
        println!("PG({n},{q}): {kind}, I = {} with witness {}", r.infection_number, r.witness);
    }

    // In PG(3,2) a non-collinear triple spans a Fano plane and stops there.
    let pg32 = designs::pg_design(3, 2)?;
    let plane = derived_set(&pg32, &VertexSet::from([0, 1, 3]), 1)?;
    println!("\nPG(3,2): seed {{1,2,4}} spreads to {plane} ({} points)", plane.len());
    if let SubdesignVerdict::Design { blocks, .. } = designs::derived_subdesign_check(&pg32, &plane, 2)? {
        println!("it induces a 2-({}, 3, 1) design with {blocks} blocks", plane.len());
    }
    println!("proper derived sub-designs found: {}", designs::proper_derived_subdesigns(&pg32, 2)?.len());

    // Blocks of a 2-(7,3,1) design through a point and through a pair.
    for s in 0..=2 {
        println!("blocks through a {s}-set of the Fano plane: {:?}", designs::blocks_through(7, 3, 2, s));
    }
    Ok(())
}
