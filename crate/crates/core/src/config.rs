//! Tunable budgets and sampling parameters.

use std::env;

/// Environment variable overriding every enumeration budget.
pub const BUDGET_ENV: &str = "HOMLIE_BUDGET";

/// Lines scanned by exhaustive (hom-)simplicity checks.
pub const LINE_BUDGET: u128 = 5_000_000;
/// Subspaces scanned by the full-quantifier simplicity criterion.
pub const SUBSPACE_BUDGET: u128 = 200_000;
/// `p^(n^2)` candidate maps for brute-force isomorphism search.
pub const ISOMORPHISM_BUDGET: u128 = 43_046_721; // 3^16
/// Elements of HS(A) enumerated when deciding invertibility.
pub const HS_ENUMERATION_BUDGET: u128 = 100_000;
/// Envelope elements tried by the irreducibility test.
pub const ENVELOPE_ATTEMPTS: usize = 32;
/// Random HS samples before reporting "probably-no".
pub const PS_SAMPLES: usize = 200;
/// Random lines spun over Q before the irreducibility test.
pub const RANDOM_LINES: usize = 8;
/// Default seed for every randomized routine.
pub const DEFAULT_SEED: u64 = 0;

/// `default`, unless `HOMLIE_BUDGET` holds a positive integer.
pub fn budget(default: u128) -> u128 {
    env::var(BUDGET_ENV)
        .ok()
        .and_then(|s| s.trim().parse::<u128>().ok())
        .filter(|&b| b > 0)
        .unwrap_or(default)
}
