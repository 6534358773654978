//! Execution strategy for the exhaustive search loops.
//!
//! Every heavy routine in the crate is a reduction over an index range
//! (bitmask enumeration, subset search, factor-pair sweeps). [`Exec`]
//! selects whether that range is split across the rayon pool or walked
//! on the calling thread. Without the `parallel` feature both variants
//! run sequentially, so results never depend on the choice.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    /// Maps `f` over `0..count` and keeps the results in index order.
    pub fn map_indexed<T, F>(self, count: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return (0..count).into_par_iter().map(f).collect();
        }
        (0..count).map(f).collect()
    }

    /// Minimum of `f` over `0..count`, skipping `None`.
    pub fn min_indexed<T, F>(self, count: usize, f: F) -> Option<T>
    where
        T: Ord + Send,
        F: Fn(usize) -> Option<T> + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return (0..count).into_par_iter().filter_map(f).min();
        }
        (0..count).filter_map(f).min()
    }
}

/// Splits `0..total` into roughly equal contiguous chunks.
pub(crate) fn chunk_bounds(total: u64, exec: Exec) -> Vec<(u64, u64)> {
    let chunks: u64 = if exec.is_parallel() && total >= 1 << 12 {
        (total >> 11).min(256)
    } else {
        1
    };
    let step = total.div_ceil(chunks.max(1)).max(1);
    let mut out = Vec::new();
    let mut lo = 0;
    while lo < total {
        let hi = (lo + step).min(total);
        out.push((lo, hi));
        lo = hi;
    }
    out
}
