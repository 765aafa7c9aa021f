//! Fixtures shared by the benchmarks.

use ekr_core::SchemeParams;

/// Triples small enough to materialize and certify in a benchmark loop.
pub fn dense_triples() -> Vec<SchemeParams> {
    [(7, 3, 2), (8, 3, 1), (9, 4, 2), (10, 4, 3)]
        .into_iter()
        .map(|(n, k, t)| SchemeParams::new(n, k, t).expect("valid triple"))
        .collect()
}
