//! Data-parallel helpers. With the `parallel` feature these run on rayon;
//! without it they fall back to plain sequential iteration. Results are
//! always returned in input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Whether the crate was built with the rayon backend.
pub const PARALLEL: bool = cfg!(feature = "parallel");

/// Stack size for worker threads. The block-graph decompositions recurse
/// once per level of the block-cut tree.
pub const WORKER_STACK_BYTES: usize = 256 << 20;

/// Maps `f` over `items`, preserving order.
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    return items.par_iter().map(f).collect();
    #[cfg(not(feature = "parallel"))]
    return items.iter().map(f).collect();
}

/// Maps `f` over `0..len` and folds the results with `combine`, whose
/// operation must be associative and commutative for the answer to be
/// independent of the split.
pub fn map_reduce<R, F, C>(len: usize, identity: R, f: F, combine: C) -> R
where
    R: Send + Sync + Clone,
    F: Fn(usize) -> R + Sync + Send,
    C: Fn(R, R) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    return (0..len)
        .into_par_iter()
        .map(f)
        .reduce(|| identity.clone(), &combine);
    #[cfg(not(feature = "parallel"))]
    return (0..len).map(f).fold(identity, combine);
}

/// Runs `op` with `jobs` workers (0 = one per core). Without the
/// `parallel` feature `op` runs on a single large-stack thread.
pub fn with_workers<R, F>(jobs: usize, op: F) -> R
where
    R: Send,
    F: FnOnce() -> R + Send,
{
    #[cfg(feature = "parallel")]
    {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .stack_size(WORKER_STACK_BYTES)
            .build()
            .expect("failed to build worker pool");
        pool.install(op)
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = jobs;
        std::thread::scope(|scope| {
            std::thread::Builder::new()
                .stack_size(WORKER_STACK_BYTES)
                .spawn_scoped(scope, op)
                .expect("failed to spawn worker")
                .join()
                .expect("worker panicked")
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_preserves_order() {
        let items: Vec<u32> = (0..1000).collect();
        let out = map(&items, |x| x * 2);
        assert_eq!(out, items.iter().map(|x| x * 2).collect::<Vec<_>>());
    }

    #[test]
    fn map_reduce_max() {
        let best = map_reduce(500, 0u64, |i| (i as u64 * 7919) % 503, u64::max);
        assert_eq!(best, 502);
    }

    #[test]
    fn workers_run_the_closure() {
        assert_eq!(with_workers(2, || map(&[1, 2, 3], |x| x + 1)), vec![2, 3, 4]);
    }
}
