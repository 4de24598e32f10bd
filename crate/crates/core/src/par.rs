//! Data-parallel helpers. With the `parallel` feature (on by default) batch
//! work is spread over the rayon thread pool; without it, or when
//! [`Execution::Sequential`] is requested, everything runs on the calling
//! thread. Results are always returned in input order.

/// How a batch of independent queries is executed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// Rayon when the `parallel` feature is enabled, sequential otherwise.
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

/// Maps `f` over `items`, preserving order.
pub fn map<T, R, F>(items: &[T], exec: Execution, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match exec {
        Execution::Sequential => items.iter().map(f).collect(),
        Execution::Parallel => parallel_map(items, f),
    }
}

#[cfg(feature = "parallel")]
fn parallel_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn parallel_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_strategies_agree_and_keep_order() {
        let xs: Vec<u64> = (0..1000).collect();
        let a = map(&xs, Execution::Sequential, |x| x * x);
        let b = map(&xs, Execution::Parallel, |x| x * x);
        assert_eq!(a, b);
        assert_eq!(a[31], 961);
    }
}
