//! Shared fixtures for the benchmarks in `benches/`.

use sigperm_core::{enumerate_bn, SignedPermutation};

/// Set to run the n = 7 conjecture bench.
pub const LONG_ENV: &str = "SIGPERM_BENCH_LONG";

pub fn long_runs_enabled() -> bool {
    std::env::var_os(LONG_ENV).is_some_and(|v| v != "0")
}

/// Every `step`-th element of `B_n` in enumeration order.
pub fn sample_bn(n: usize, step: usize) -> Vec<SignedPermutation> {
    enumerate_bn(n).step_by(step.max(1)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sample_sizes() {
        assert_eq!(sample_bn(3, 1).len(), 48);
        assert_eq!(sample_bn(3, 5).len(), 10);
    }
}
