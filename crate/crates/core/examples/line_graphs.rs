//! Line graphs, adjacency hypergraphs and the zero forcing connection.

use hyperinfect::solver::{infection_number, zero_forcing_number};
use hyperinfect::{enumerate, families, Hypergraph};

fn main() -> hyperinfect::Result<()> {
    let h = Hypergraph::from_labels(6, [[1, 2, 3], [3, 4, 5], [5, 6, 1]])?;
    let l = h.line_graph()?;
    let (ih, zl) = (infection_number(&h, 1)?.infection_number, zero_forcing_number(&l)?.infection_number);
    println!("triangle of triples: I = {ih}, Z(L) = {zl}, k Z(L) = {}", 3 * zl);

    // Adjacency hypergraphs of graphs: the value depends on leaves.
    for (name, g) in [("C5", families::cycle_graph(5)?), ("P5", families::path_graph(5)?), ("K4", families::complete(4, 2)?)] {
        let a = g.adjacency_hypergraph()?;
        let back = a.line_graph()?;
        println!(
            "{name}: adjacency hypergraph I = {}, line graph recovers {name}: {}",
            infection_number(&a, 1)?.infection_number,
            enumerate::is_isomorphic(&back, &g)
        );
    }
    Ok(())
}
