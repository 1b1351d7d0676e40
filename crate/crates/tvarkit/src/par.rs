//! Data-parallel map helpers with a sequential fallback.
//!
//! The heavy kernels (candidate filtering for Hilbert bases, per-cell
//! properness checks, batched verification) are embarrassingly parallel over
//! independent items. With the default `parallel` feature they fan out via
//! rayon once the input is large enough to amortize scheduling; without it
//! (or below the threshold) they run sequentially. Both code paths are always
//! compiled; the benchmark hooks below select either explicitly so the two
//! can be compared on the same build.

/// Inputs smaller than this are processed sequentially even when the
/// `parallel` feature is enabled: spawn overhead dominates below it.
pub(crate) const PAR_THRESHOLD: usize = 64;

/// Map `f` over `items`, parallel when available and worthwhile.
pub(crate) fn map<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send + Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if items.len() >= PAR_THRESHOLD {
            use rayon::prelude::*;
            return items.par_iter().map(&f).collect();
        }
    }
    map_sequential(items, f)
}

/// Keep the items where `keep` returns true, parallel when worthwhile.
pub(crate) fn filter<T, F>(items: Vec<T>, keep: F) -> Vec<T>
where
    T: Send,
    F: Fn(&T) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if items.len() >= PAR_THRESHOLD {
            use rayon::prelude::*;
            return items.into_par_iter().filter(|t| keep(t)).collect();
        }
    }
    filter_sequential(items, keep)
}

/// Sequential map, always compiled (benchmark baseline).
pub(crate) fn map_sequential<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

/// Sequential filter, always compiled (benchmark baseline).
pub(crate) fn filter_sequential<T, F>(items: Vec<T>, keep: F) -> Vec<T>
where
    F: Fn(&T) -> bool,
{
    items.into_iter().filter(|t| keep(t)).collect()
}

/// Benchmark-only access to both code paths, independent of input size.
///
/// Not part of the public API surface; the criterion suite uses it to compare
/// the rayon fan-out against the sequential baseline on identical inputs.
#[doc(hidden)]
pub mod bench_internals {
    /// Filter through the parallel path (falls back to sequential when the
    /// `parallel` feature is off).
    pub fn filter_parallel<T, F>(items: Vec<T>, keep: F) -> Vec<T>
    where
        T: Send,
        F: Fn(&T) -> bool + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            return items.into_par_iter().filter(|t| keep(t)).collect();
        }
        #[cfg(not(feature = "parallel"))]
        super::filter_sequential(items, keep)
    }

    /// Filter through the sequential path unconditionally.
    pub fn filter_sequential<T, F>(items: Vec<T>, keep: F) -> Vec<T>
    where
        F: Fn(&T) -> bool,
    {
        super::filter_sequential(items, keep)
    }
}
