//! Shared fixtures for the benchmark targets.

use spechtkit::Partition;

pub fn pt(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).expect("benchmark fixtures are valid partitions")
}

/// Mixed-profile shapes exercising long first rows, long columns, and the
/// Rouquier decomposition path.
pub fn fixture_shapes() -> Vec<Partition> {
    vec![
        pt(&[6, 1, 1]),
        pt(&[3, 2, 2, 2, 1, 1]),
        pt(&[3, 1, 1, 1, 1, 1]),
        pt(&[4, 4, 3, 2, 1]),
        pt(&[5, 4, 2, 2, 1]),
    ]
}
