//! Data-parallel fan-out with a sequential fallback.
//!
//! Batch work (catalog verification, table sweeps) maps independent items to
//! results. With the `parallel` feature (on by default) the parallel mode
//! runs on the rayon pool; without it both modes run sequentially, so the
//! API and result order never change.

/// Execution mode for batch operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parallelism {
    Sequential,
    Parallel,
}

/// Maps `f` over `items`, preserving order.
pub fn maybe_par_map<T, U, F>(mode: Parallelism, items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    match mode {
        Parallelism::Sequential => items.into_iter().map(f).collect(),
        Parallelism::Parallel => parallel_map(items, f),
    }
}

#[cfg(feature = "parallel")]
fn parallel_map<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn parallel_map<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    items.into_iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_modes_agree_and_preserve_order() {
        let items: Vec<u64> = (0..100).collect();
        let seq = maybe_par_map(Parallelism::Sequential, items.clone(), |x| x * x);
        let par = maybe_par_map(Parallelism::Parallel, items, |x| x * x);
        assert_eq!(seq, par);
        assert_eq!(seq[7], 49);
    }
}
