//! Scoped-thread helpers. Results always come back in input order, so the
//! degree of parallelism never changes what is computed.

use std::thread;

/// Applies `f` to `jobs` contiguous chunks of `items`.
pub fn map_chunks<T, R, F>(items: &[T], jobs: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&[T]) -> R + Sync,
{
    if items.is_empty() {
        return Vec::new();
    }
    let jobs = jobs.clamp(1, items.len());
    if jobs == 1 {
        return vec![f(items)];
    }
    let size = items.len().div_ceil(jobs);
    thread::scope(|s| {
        let handles: Vec<_> = items.chunks(size).map(|c| s.spawn(|| f(c))).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    })
}

/// Applies `f` to every item.
pub fn map<T, R, F>(items: &[T], jobs: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    map_chunks(items, jobs, |c| c.iter().map(&f).collect::<Vec<_>>())
        .into_iter()
        .flatten()
        .collect()
}
