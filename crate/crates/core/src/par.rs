//! Index-parallel map helpers.
//!
//! With the `parallel` feature the closures run on the rayon pool, otherwise
//! they run in order on the calling thread. Results are always returned in
//! index order, so callers observe identical values either way.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Below this many items the sequential path is used regardless of features.
#[cfg(feature = "parallel")]
const MIN_PARALLEL_LEN: usize = 4;

pub(crate) fn map_range<T, F>(len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if len >= MIN_PARALLEL_LEN {
        return (0..len).into_par_iter().map(f).collect();
    }
    (0..len).map(f).collect()
}

pub(crate) fn try_map_range<T, E, F>(len: usize, f: F) -> Result<Vec<T>, E>
where
    T: Send,
    E: Send,
    F: Fn(usize) -> Result<T, E> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if len >= MIN_PARALLEL_LEN {
        return (0..len).into_par_iter().map(f).collect();
    }
    (0..len).map(f).collect()
}

/// Whether the rayon-backed path is compiled in.
pub const fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}
