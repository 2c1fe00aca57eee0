//! Data-parallel helpers with a sequential fallback.
//!
//! Every helper returns exactly what its sequential counterpart returns, in
//! the same order, so searches stay bit-identical across execution modes.
//! Without the `parallel` feature, [`Execution::Parallel`] runs sequentially.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Minimum items per rayon task for slice helpers.
#[cfg(feature = "parallel")]
const MIN_SPLIT: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Execution {
    Sequential,
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

impl Execution {
    /// Whether work will actually be spread over threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }

    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return items.par_iter().with_min_len(MIN_SPLIT).map(f).collect();
        }
        items.iter().map(f).collect()
    }

    /// Index of the first item satisfying `pred`.
    pub fn position_first<T, F>(self, items: &[T], pred: F) -> Option<usize>
    where
        T: Sync,
        F: Fn(&T) -> bool + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return items.par_iter().with_min_len(MIN_SPLIT).position_first(pred);
        }
        items.iter().position(pred)
    }

    /// Fold over an integer range. `reduce` must be associative; partial
    /// results are combined in range order.
    pub fn fold_range<A, I, F, R>(self, range: Range<u64>, init: I, fold: F, reduce: R) -> A
    where
        A: Send,
        I: Fn() -> A + Sync + Send,
        F: Fn(A, u64) -> A + Sync + Send,
        R: Fn(A, A) -> A + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return range.into_par_iter().fold(&init, &fold).reduce(&init, &reduce);
        }
        let _ = &reduce;
        range.fold(init(), fold)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let items: Vec<u64> = (0..1000).collect();
        for exec in [Execution::Sequential, Execution::Parallel] {
            assert_eq!(exec.map(&items, |v| v * 3), items.iter().map(|v| v * 3).collect::<Vec<_>>());
            assert_eq!(exec.position_first(&items, |v| v % 97 == 96), Some(96));
            assert_eq!(exec.position_first(&items, |&v| v > 5000), None);
            let picked = exec.fold_range(
                0..1000,
                Vec::new,
                |mut acc, v| {
                    if v % 7 == 0 {
                        acc.push(v)
                    }
                    acc
                },
                |mut a, b| {
                    a.extend(b);
                    a
                },
            );
            assert_eq!(picked, (0..1000).filter(|v| v % 7 == 0).collect::<Vec<_>>());
        }
    }
}
