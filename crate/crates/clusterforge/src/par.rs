//! Data-parallel helpers for sweeps over words and shapes.
//!
//! With the `parallel` feature (on by default) the helpers run on the rayon
//! pool; without it they fall back to plain iterators. The `*_seq` variants
//! are always sequential.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Map `f` over `items`, preserving order.
#[cfg(feature = "parallel")]
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.par_iter().map(f).collect()
}

/// Map `f` over `items`, preserving order.
#[cfg(not(feature = "parallel"))]
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    map_seq(items, f)
}

/// Sequential map, preserving order.
pub fn map_seq<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}

/// Items for which `pred` fails, in input order.
pub fn failures<T, F>(items: &[T], pred: F) -> Vec<T>
where
    T: Clone + Sync + Send,
    F: Fn(&T) -> bool + Sync + Send,
{
    map(items, |t| if pred(t) { None } else { Some(t.clone()) }).into_iter().flatten().collect()
}

/// Sequential form of [`failures`].
pub fn failures_seq<T, F>(items: &[T], pred: F) -> Vec<T>
where
    T: Clone,
    F: Fn(&T) -> bool,
{
    items.iter().filter(|t| !pred(t)).cloned().collect()
}

/// Cap the global pool at `threads` workers. Returns false if the pool was
/// already initialised or the feature is off.
pub fn init_threads(threads: usize) -> bool {
    #[cfg(feature = "parallel")]
    {
        rayon::ThreadPoolBuilder::new().num_threads(threads).build_global().is_ok()
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = threads;
        false
    }
}
