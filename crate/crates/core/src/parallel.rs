//! Bounded worker pool for sample batches.

use rayon::ThreadPoolBuilder;

/// Worker count from `DELTA_ARITH_THREADS` (unset or invalid: rayon's default).
pub fn thread_limit() -> Option<usize> {
    std::env::var("DELTA_ARITH_THREADS").ok().and_then(|s| s.trim().parse().ok()).filter(|&n| n > 0)
}

/// Runs `f` inside a pool capped by `DELTA_ARITH_THREADS`.
pub fn with_pool<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    let mut b = ThreadPoolBuilder::new();
    if let Some(n) = thread_limit() {
        b = b.num_threads(n);
    }
    match b.build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}
