//! Process-wide size bounds. The CLI overrides them from flags and the
//! `BPSKALC_MAX_VARS` environment variable.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{Error, Result};

pub const DEFAULT_MAX_VARS: usize = 5;
pub const DEFAULT_BWB_MAX_VARS: usize = 4;
pub const DEFAULT_WEIGHT_ENUM_MAX_D: usize = 6;
pub const DEFAULT_PROPBOUNDARY_MAX_D: usize = 3;

static MAX_VARS: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_VARS);
static BWB_MAX_VARS: AtomicUsize = AtomicUsize::new(DEFAULT_BWB_MAX_VARS);
static WEIGHT_ENUM_MAX_D: AtomicUsize = AtomicUsize::new(DEFAULT_WEIGHT_ENUM_MAX_D);
static PROPBOUNDARY_MAX_D: AtomicUsize = AtomicUsize::new(DEFAULT_PROPBOUNDARY_MAX_D);

pub fn max_vars() -> usize {
    MAX_VARS.load(Ordering::Relaxed)
}

pub fn set_max_vars(n: usize) {
    MAX_VARS.store(n, Ordering::Relaxed);
}

pub fn bwb_max_vars() -> usize {
    BWB_MAX_VARS.load(Ordering::Relaxed)
}

pub fn set_bwb_max_vars(n: usize) {
    BWB_MAX_VARS.store(n, Ordering::Relaxed);
}

pub fn weight_enum_max_d() -> usize {
    WEIGHT_ENUM_MAX_D.load(Ordering::Relaxed)
}

pub fn set_weight_enum_max_d(n: usize) {
    WEIGHT_ENUM_MAX_D.store(n, Ordering::Relaxed);
}

pub fn propboundary_max_d() -> usize {
    PROPBOUNDARY_MAX_D.load(Ordering::Relaxed)
}

pub fn set_propboundary_max_d(n: usize) {
    PROPBOUNDARY_MAX_D.store(n, Ordering::Relaxed);
}

pub(crate) fn check(what: &'static str, value: usize, bound: usize) -> Result<()> {
    if value > bound {
        Err(Error::BoundExceeded { what, value, bound })
    } else {
        Ok(())
    }
}
