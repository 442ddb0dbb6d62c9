//! Product constructions and how the infection number behaves under them.

use hyperinfect::products::{self, Origin};
use hyperinfect::solver::infection_number;
use hyperinfect::{families, Hypergraph};

fn i(h: &Hypergraph) -> usize {
    infection_number(h, 1).expect("small instance").infection_number
}

fn main() -> hyperinfect::Result<()> {
    let k42 = families::complete(4, 2)?;
    let k53 = families::complete(5, 3)?;
    let p = products::direct_product(&k42, &k53)?;
    println!("K(4,2) x K(5,3): I = {} (factors {} and {})", i(&p.hypergraph), i(&k42), i(&k53));

    let two_edges = Hypergraph::from_labels(4, [[1, 2], [3, 4]])?;
    let joined = products::join_universal_vertex(&two_edges)?;
    println!("{{12}},{{34}} joined to one vertex: I drops from {} to {}", i(&two_edges), i(&joined.hypergraph));

    let p3 = families::path_graph(3)?;
    let grid = products::cartesian_product(&p3, &p3)?;
    println!("P3 box P3: I = {} on {} vertices", i(&grid.hypergraph), grid.hypergraph.num_vertices());
    if let Some(Origin::Pair { g, h }) = grid.labeling.origin(4) {
        println!("  vertex 5 of the grid is the pair ({}, {})", g + 1, h + 1);
    }

    let g = families::path_graph(3)?;
    let singles = Hypergraph::from_labels(2, [[1], [2]])?;
    let weak = products::weak_corona(&g, &singles)?;
    println!("P3 weak corona with two singletons: I = {} (bound {})", i(&weak.hypergraph), g.num_vertices() * i(&singles));
    let k2 = families::path_graph(2)?;
    let strong = products::strong_corona(&g, &k2)?;
    println!(
        "P3 strong corona with K2: I = {} (bound {}), {} edges",
        i(&strong.hypergraph),
        i(&g) * k2.num_vertices() + (g.num_vertices() - i(&g)) * i(&k2),
        strong.hypergraph.num_edges()
    );
    Ok(())
}
