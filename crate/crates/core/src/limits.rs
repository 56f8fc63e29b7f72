//! Process-wide guard on intermediate generator-set sizes.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{Error, Result};

pub const DEFAULT_GENERATOR_CAP: usize = 100_000;
pub const GENERATOR_CAP_ENV: &str = "MONOFORM_GEN_CAP";

// 0 = not yet initialised from the environment.
static CAP: AtomicUsize = AtomicUsize::new(0);

/// Current cap; read from `MONOFORM_GEN_CAP` on first use.
pub fn generator_cap() -> usize {
    match CAP.load(Ordering::Relaxed) {
        0 => {
            let cap = std::env::var(GENERATOR_CAP_ENV)
                .ok()
                .and_then(|s| s.trim().parse::<usize>().ok())
                .filter(|&c| c > 0)
                .unwrap_or(DEFAULT_GENERATOR_CAP);
            // Idempotent: concurrent initialisers compute the same value.
            let _ = CAP.compare_exchange(0, cap, Ordering::Relaxed, Ordering::Relaxed);
            CAP.load(Ordering::Relaxed)
        }
        cap => cap,
    }
}

pub fn set_generator_cap(cap: usize) {
    CAP.store(cap.max(1), Ordering::Relaxed);
}

pub(crate) fn check_size(op: &str, size: usize) -> Result<()> {
    let cap = generator_cap();
    if size > cap {
        Err(Error::SizeLimit {
            op: op.to_string(),
            size,
            cap,
        })
    } else {
        Ok(())
    }
}
