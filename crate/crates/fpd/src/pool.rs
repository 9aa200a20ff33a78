//! Shared rayon thread pool, sized by the `FPD_THREADS` environment variable.
//! Unset, unparsable, or zero values fall back to the rayon default.

use once_cell::sync::Lazy;
use rayon::{ThreadPool, ThreadPoolBuilder};

static POOL: Lazy<ThreadPool> = Lazy::new(|| {
    let threads = std::env::var("FPD_THREADS")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .unwrap_or(0);
    ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("rayon thread pool")
});

pub(crate) fn pool() -> &'static ThreadPool {
    &POOL
}
