//! Deterministic data parallelism over index ranges.
//!
//! Work is cut into fixed-size chunks whose results are concatenated in
//! chunk order, so the output never depends on scheduling or worker count.
//! Without the `parallel` feature every call runs sequentially.

/// How a scan is executed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// `Parallel` only when the crate was built with rayon.
    pub fn effective(self) -> Exec {
        if cfg!(feature = "parallel") {
            self
        } else {
            Exec::Sequential
        }
    }
}

const CHUNK: usize = 64;

/// Maps `f` over `0..len`, results in index order.
pub fn map_indices<R, F>(exec: Exec, len: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    match exec.effective() {
        Exec::Sequential => (0..len).map(f).collect(),
        Exec::Parallel => par_map(len, f),
    }
}

/// Maps `f` over consecutive chunks of `0..len` (each chunk a range), results
/// in chunk order. Useful when per-item work is tiny and a chunk-local
/// accumulator pays off.
pub fn map_chunks<R, F>(exec: Exec, len: usize, chunk: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(std::ops::Range<usize>) -> R + Sync + Send,
{
    let chunk = chunk.max(1);
    let n_chunks = len.div_ceil(chunk);
    map_indices(exec, n_chunks, |c| f(c * chunk..((c + 1) * chunk).min(len)))
}

#[cfg(feature = "parallel")]
fn par_map<R, F>(len: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    use rayon::prelude::*;
    (0..len).into_par_iter().with_min_len(CHUNK.min(len.max(1))).map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn par_map<R, F>(len: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    let _ = CHUNK;
    (0..len).map(f).collect()
}

/// Runs `f` inside a pool of `workers` threads (0 = rayon's default).
#[cfg(feature = "parallel")]
pub fn with_workers<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> T {
    if workers == 0 {
        return f();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn with_workers<T: Send>(_workers: usize, f: impl FnOnce() -> T + Send) -> T {
    f()
}
