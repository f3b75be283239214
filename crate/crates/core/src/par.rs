//! Data-parallel map helpers.
//!
//! With the `parallel` feature (default) these fan out over rayon; without
//! it they run sequentially with identical output order, so results are
//! bitwise independent of the feature and of thread count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(feature = "parallel")]
pub fn map_collect<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_collect<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

/// Fallible variant; the first error (in input order) wins, matching the
/// sequential build exactly.
#[cfg(feature = "parallel")]
pub fn try_map_collect<T, U, E, F>(items: &[T], f: F) -> Result<Vec<U>, E>
where
    T: Sync,
    U: Send,
    E: Send,
    F: Fn(&T) -> Result<U, E> + Sync + Send,
{
    let results: Vec<Result<U, E>> = items.par_iter().map(f).collect();
    results.into_iter().collect()
}

#[cfg(not(feature = "parallel"))]
pub fn try_map_collect<T, U, E, F>(items: &[T], f: F) -> Result<Vec<U>, E>
where
    F: Fn(&T) -> Result<U, E>,
{
    items.iter().map(f).collect()
}
