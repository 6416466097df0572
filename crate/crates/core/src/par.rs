//! Thin data-parallelism layer.
//!
//! Independent work items (per-interval positivity tests, subtree counts in
//! the enumeration oracles) go through [`map_ordered`], which runs on rayon
//! when the `parallel` feature is enabled and the caller asked for it.
//! Results always come back in input order, so output is deterministic
//! regardless of how the work was scheduled. `RAYON_NUM_THREADS` controls
//! the pool size as usual.

#[cfg(feature = "parallel")]
pub fn map_ordered<T, R, F>(items: Vec<T>, parallel: bool, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    if parallel {
        items.into_par_iter().map(f).collect()
    } else {
        items.into_iter().map(f).collect()
    }
}

#[cfg(not(feature = "parallel"))]
pub fn map_ordered<T, R, F>(items: Vec<T>, _parallel: bool, f: F) -> Vec<R>
where
    F: Fn(T) -> R,
{
    items.into_iter().map(f).collect()
}

/// True when this build can actually fan work out to threads.
pub const fn parallel_enabled() -> bool {
    cfg!(feature = "parallel")
}
