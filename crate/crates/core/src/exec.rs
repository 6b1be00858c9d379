//! Data-parallel helpers. With the `parallel` feature (default) independent
//! work items run on the rayon pool; without it the same code runs on plain
//! iterators. Results always come back in input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(feature = "parallel")]
pub fn map_indexed<T: Send, F: Fn(usize) -> T + Sync + Send>(count: usize, f: F) -> Vec<T> {
    (0..count).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_indexed<T, F: Fn(usize) -> T>(count: usize, f: F) -> Vec<T> {
    (0..count).map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn map_slice<I: Sync, T: Send, F: Fn(&I) -> T + Sync + Send>(items: &[I], f: F) -> Vec<T> {
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_slice<I, T, F: Fn(&I) -> T>(items: &[I], f: F) -> Vec<T> {
    items.iter().map(f).collect()
}
