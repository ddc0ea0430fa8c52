//! Execution strategy for the exhaustive checks.
//!
//! With the `parallel` feature the index ranges are split across the rayon
//! pool; without it, or with [`Exec::Sequential`], plain iterators are used.
//! Both paths return results in index order so output stays deterministic.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    /// Falls back to sequential when the crate is built without `parallel`.
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }
}

/// First `Some` over `0..n` in index order.
pub(crate) fn find_map_first<T, F>(exec: Exec, n: usize, f: F) -> Option<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return (0..n).into_par_iter().find_map_first(f);
    }
    let _ = exec;
    (0..n).find_map(f)
}

pub(crate) fn map_collect<T, F>(exec: Exec, n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return (0..n).into_par_iter().map(f).collect();
    }
    let _ = exec;
    (0..n).map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_paths_agree() {
        for exec in [Exec::Sequential, Exec::Parallel] {
            assert_eq!(find_map_first(exec, 100, |i| (i % 7 == 3).then_some(i)), Some(3));
            assert_eq!(find_map_first(exec, 5, |_| None::<usize>), None);
            assert_eq!(map_collect(exec, 3, |i| i * i), vec![0, 1, 4]);
        }
    }
}
