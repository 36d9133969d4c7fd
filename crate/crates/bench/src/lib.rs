//! Shared fixtures for the criterion benchmarks in `benches/`.

use std::sync::Arc;

use ellimod_core::{ELambdaPoint, Kind, RootSystem};

/// A point with pairwise distinct prime denominators, generic enough that
/// its orbit is the whole Weyl group.
pub fn generic_point(kind: Kind, rank: usize) -> ELambdaPoint {
    let primes = [5i64, 7, 11, 13, 17, 19, 23, 29];
    let sys: Arc<RootSystem> = RootSystem::get(kind, rank).unwrap();
    let text = primes[..rank]
        .iter()
        .map(|p| format!("1/{p},0"))
        .collect::<Vec<_>>()
        .join(";");
    ELambdaPoint::parse(sys, &text).unwrap()
}
