//! Process-wide cap on exhaustive enumerations.
//!
//! Every loop that walks all subsets of some size (complete designs, zero-set
//! scans, candidate searches) checks its item count against this cap before it
//! starts, so oversized requests fail immediately with [`Error::BudgetExceeded`].

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::OnceLock;

use crate::error::{Error, Result};

pub const DEFAULT_BUDGET: u64 = 20_000_000;
pub const BUDGET_ENV: &str = "DESIGN_IDEALS_BUDGET";

static OVERRIDE: AtomicU64 = AtomicU64::new(0);
static FROM_ENV: OnceLock<u64> = OnceLock::new();

/// Current enumeration budget: an explicit override, else the environment, else the default.
pub fn budget() -> u64 {
    match OVERRIDE.load(Ordering::Relaxed) {
        0 => *FROM_ENV.get_or_init(|| {
            std::env::var(BUDGET_ENV)
                .ok()
                .and_then(|s| s.trim().parse::<u64>().ok())
                .filter(|&b| b > 0)
                .unwrap_or(DEFAULT_BUDGET)
        }),
        b => b,
    }
}

/// Overrides the budget for the whole process. Zero restores the env/default value.
pub fn set_budget(value: u64) {
    OVERRIDE.store(value, Ordering::Relaxed);
}

pub fn check(needed: u128) -> Result<()> {
    let budget = budget();
    if needed > budget as u128 {
        Err(Error::BudgetExceeded { needed, budget })
    } else {
        Ok(())
    }
}
