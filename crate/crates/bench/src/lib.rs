//! Shared fixtures for the criterion benchmarks.

use specht_core::Partition;

/// Partitions of `n` with a disconnected ladder, the inputs of the witness
/// engine.
pub fn disconnected(n: usize) -> Vec<Partition> {
    Partition::all(n)
        .into_iter()
        .filter(|p| p.has_disconnected_ladder().is_some())
        .collect()
}

/// A fixed set of LR queries `(left, right)` of moderate size.
pub fn lr_pairs() -> Vec<(Partition, Partition)> {
    ["4,2,1", "3,3,1", "5,2", "3,2,1,1"]
        .iter()
        .flat_map(|a| {
            ["3,2,1", "2,2,1", "4,1"]
                .iter()
                .map(move |b| (parse(a), parse(b)))
        })
        .collect()
}

pub fn parse(s: &str) -> Partition {
    s.parse().expect("fixture partition")
}
