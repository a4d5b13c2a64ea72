//! Shared inputs for the criterion benches.

use algcon::{CirculantSet, Graph, Partition};

/// Unions of complete graphs used by the eigensolver and neighborhood benches.
pub fn union_fixtures() -> Vec<(&'static str, Graph)> {
    [("K6+K3", vec![6, 3]), ("K4+K2+K1", vec![4, 2, 1]), ("K18+K6", vec![18, 6])]
        .into_iter()
        .map(|(name, sizes)| (name, Graph::union_of_complete(&Partition::new(sizes).expect("nonempty sizes"))))
        .collect()
}

/// The 24-vertex, 14-regular circulant from the generating row `000110111011011011101100`.
pub fn circulant_24() -> CirculantSet {
    CirculantSet::from_row("000110111011011011101100").expect("valid symmetric row")
}
