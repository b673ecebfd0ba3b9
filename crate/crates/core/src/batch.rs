//! Data-parallel batch evaluation with a sequential fallback.
//!
//! The sampled batteries (associativity triples, corpus-wide lemma checks,
//! random orientation diagrams) are independent per item, so they run on
//! rayon when the `parallel` feature is enabled (the default). Items must be
//! self-seeding — see [`crate::rng::stream`] — so results never depend on
//! the schedule. `map_serial` is always available for comparison.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Apply `f` to `0..n`, in parallel when built with the `parallel` feature.
pub fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}

/// Sequential reference path, independent of feature flags.
pub fn map_serial<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n).map(f).collect()
}

/// Apply `f` to each item of a slice, in parallel when enabled.
pub fn map_items<'a, I, T, F>(items: &'a [I], f: F) -> Vec<T>
where
    I: Sync,
    T: Send,
    F: Fn(&'a I) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_and_serial_agree() {
        let f = |i: usize| i * i + 1;
        assert_eq!(map_indexed(100, f), map_serial(100, f));
    }
}
