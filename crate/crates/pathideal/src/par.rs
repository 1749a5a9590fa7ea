//! Data-parallel map helper. With the `parallel` feature the `parallel`
//! flag picks rayon or plain iteration at runtime (the `_sequential` API
//! variants and the bench suite use the latter); without the feature only
//! the sequential path exists and the flag is ignored. Output order matches
//! input order either way.

#[cfg(feature = "parallel")]
pub(crate) fn map_maybe_parallel<T, U, F>(items: &[T], f: F, parallel: bool) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    if parallel {
        items.par_iter().map(f).collect()
    } else {
        items.iter().map(f).collect()
    }
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_maybe_parallel<T, U, F>(items: &[T], f: F, _parallel: bool) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}
