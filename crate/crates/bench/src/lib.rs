//! Shared fixtures for the counting benchmarks.

use eiscensus_core::FactorSieve;

/// A sieve comfortably covering every benchmark workload.
pub fn bench_sieve() -> FactorSieve {
    FactorSieve::new(1_000_000).expect("bench sieve")
}
