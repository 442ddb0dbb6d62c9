//! Generates members of each family and compares the exact infection number
//! with the value the family's formula predicts.

use hyperinfect::families::{self, FamilySpec};
use hyperinfect::solver::infection_number;

fn main() -> hyperinfect::Result<()> {
    let cases: Vec<(FamilySpec, usize, &str)> = vec![
        (FamilySpec::Complete { n: 7, k: 4 }, 4, "n - k + 1"),
        (FamilySpec::Multipartite { parts: vec![2, 3, 3] }, 5, "sum n_i - k"),
        (FamilySpec::Flower { core_size: 2, petal_extra_sizes: vec![1, 2, 1, 3] }, 3, "petals - 1"),
        (FamilySpec::Interval { n: 9, intervals: vec![(1, 3), (3, 2), (5, 5)] }, 2, "components"),
        (FamilySpec::Hypercycle { edge_sizes: vec![3, 3, 3, 3], overlap_sizes: vec![1, 1, 1, 1] }, 1, "1 (degree-1 vertex)"),
        (FamilySpec::TightCycle { n: 9, k: 4, t: 3 }, 2, "2 when n >= 2k - 1"),
        (FamilySpec::AugmentedComplete { n: 7, k: 3 }, 4, "n - k when n >= 2k - 1"),
        (FamilySpec::Trivial { n: 5 }, 5, "n"),
    ];
    for (spec, predicted, formula) in cases {
        let h = spec.build()?;
        let exact = infection_number(&h, 1)?.infection_number;
        let mark = if exact == predicted { "ok" } else { "MISMATCH" };
        println!("{:<80} I = {exact} (formula {formula}: {predicted}) {mark}", format!("{spec:?}"));
    }

    // Any k-uniform hypergraph embeds in a k-uniform one with infection number 1.
    let base = families::complete(5, 3)?;
    let ext = families::infection_one_extension(&base)?;
    println!(
        "\nextension of complete(5,3): {} vertices, {} edges, I = {}",
        ext.num_vertices(),
        ext.num_edges(),
        infection_number(&ext, 1)?.infection_number
    );
    Ok(())
}
