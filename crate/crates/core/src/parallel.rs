//! Deterministic data parallelism.
//!
//! Every parallel map in the crate goes through [`map_indexed`], which always
//! returns results in index order, so reductions over its output are identical
//! whatever the thread count.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use rayon::ThreadPool;

pub const THREADS_ENV: &str = "SCHEME_FORGE_THREADS";

/// Thread cap taken from `SCHEME_FORGE_THREADS` (0 = sequential). Defaults to the
/// available hardware parallelism when the variable is unset or unparsable.
pub fn threads() -> usize {
    static THREADS: OnceLock<usize> = OnceLock::new();
    *THREADS.get_or_init(|| {
        std::env::var(THREADS_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or_else(|| {
                std::thread::available_parallelism()
                    .map(|n| n.get())
                    .unwrap_or(1)
            })
    })
}

fn pool(threads: usize) -> Option<Arc<ThreadPool>> {
    static POOLS: OnceLock<Mutex<BTreeMap<usize, Arc<ThreadPool>>>> = OnceLock::new();
    let pools = POOLS.get_or_init(|| Mutex::new(BTreeMap::new()));
    let mut pools = pools.lock().ok()?;
    if let Some(p) = pools.get(&threads) {
        return Some(Arc::clone(p));
    }
    let p = Arc::new(
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .ok()?,
    );
    pools.insert(threads, Arc::clone(&p));
    Some(p)
}

/// Maps `f` over `0..len`, in parallel when `threads > 1`. Output is in index order.
pub fn map_indexed<T, F>(len: usize, threads: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    if threads <= 1 || len <= 1 {
        return (0..len).map(f).collect();
    }
    match pool(threads) {
        Some(p) => p.install(|| (0..len).into_par_iter().map(&f).collect()),
        None => (0..len).map(f).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_independent_of_thread_count() {
        let seq = map_indexed(100, 0, |i| i * i);
        let par = map_indexed(100, 4, |i| i * i);
        assert_eq!(seq, par);
    }
}
