//! Shared execution switch for the batch operations that offer both a
//! rayon-parallel and a sequential code path. Results are position-stable,
//! so callers get identical output either way.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Exec {
    /// Parallel when the `parallel` feature is on, sequential otherwise.
    Auto,
    Seq,
}

pub(crate) fn map<T, U, F>(items: &[T], exec: Exec, f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync,
{
    #[cfg(feature = "parallel")]
    if exec == Exec::Auto {
        use rayon::prelude::*;
        return items.par_iter().map(&f).collect();
    }
    let _ = exec;
    items.iter().map(|t| f(t)).collect()
}
