//! Execution strategy for the data-parallel parts of the crate.
//!
//! Everything that fans out over independent items (catalog expansion,
//! rooting counts, enumeration checks) goes through [`Execution`]. With the
//! `parallel` feature disabled, [`Execution::Parallel`] quietly degrades to
//! the sequential path, so results never depend on the feature set.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How to evaluate a batch of independent jobs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Execution {
    /// Plain iterator on the calling thread.
    Sequential,
    /// Rayon work-stealing pool (sequential if the `parallel` feature is off).
    #[default]
    Parallel,
}

impl Execution {
    /// True when jobs really run on a thread pool.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }

    /// Order-preserving map over a slice.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Execution::Parallel {
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }

    /// Order-preserving flat map over a slice.
    pub fn flat_map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> Vec<R> + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Execution::Parallel {
            return items.par_iter().flat_map_iter(f).collect();
        }
        items.iter().flat_map(f).collect()
    }

    /// Order-preserving map over `0..n`.
    pub fn map_range<R, F>(self, n: usize, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Execution::Parallel {
            return (0..n).into_par_iter().map(f).collect();
        }
        (0..n).map(f).collect()
    }
}
