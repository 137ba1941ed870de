//! Process-wide size caps.
//!
//! Permutation sums grow like `n!`, coloring sums like `m^n`; every enumerating
//! entry point checks the relevant cap before starting. The caps can be raised
//! (e.g. from the `CHROMAQ_MAX_N` environment variable in the CLI).

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{Error, Result};

/// Default largest `n` for raw permutation and poset enumeration.
pub const DEFAULT_MAX_N: usize = 8;
/// Default largest `n` for the full expansion pipeline (all routes, e-basis, reports).
pub const DEFAULT_MAX_REPORT_N: usize = 7;
/// Largest number of colorings `m^n` visited by the brute-force definition.
pub const MAX_COLORINGS: u128 = 1 << 20;
/// Largest edge count accepted by acyclic orientation enumeration.
pub const MAX_ORIENTATION_EDGES: usize = 20;

static MAX_N: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_N);
static MAX_REPORT_N: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_REPORT_N);

pub fn max_n() -> usize {
    MAX_N.load(Ordering::Relaxed)
}

pub fn max_report_n() -> usize {
    MAX_REPORT_N.load(Ordering::Relaxed)
}

/// Overrides both caps with a single value.
pub fn set_max_n(n: usize) {
    MAX_N.store(n, Ordering::Relaxed);
    MAX_REPORT_N.store(n, Ordering::Relaxed);
}

pub fn check_n(n: usize, what: &str) -> Result<()> {
    let cap = max_n();
    if n > cap {
        return Err(Error::Resource(format!("{what}: n = {n} exceeds cap {cap}")));
    }
    Ok(())
}

pub fn check_report_n(n: usize, what: &str) -> Result<()> {
    let cap = max_report_n();
    if n > cap {
        return Err(Error::Resource(format!("{what}: n = {n} exceeds cap {cap}")));
    }
    Ok(())
}
