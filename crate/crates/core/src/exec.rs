//! Execution kernels for the exhaustive scans.
//!
//! Every scan in this crate is a map, an all-quantifier or a least-witness
//! search over a flat index range. The `parallel` feature routes them through
//! rayon; the `_seq` twins are always available so results can be compared
//! and benchmarked against the sequential path.
//!
//! Witness determinism: `find_min` always returns the value produced at the
//! least index for which the closure yields `Some`, regardless of thread
//! scheduling.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub fn map_seq<T, F: Fn(usize) -> T>(n: usize, f: F) -> Vec<T> {
    (0..n).map(f).collect()
}

pub fn all_seq<F: Fn(usize) -> bool>(n: usize, f: F) -> bool {
    (0..n).all(f)
}

pub fn find_min_seq<T, F: Fn(usize) -> Option<T>>(n: usize, f: F) -> Option<T> {
    (0..n).find_map(f)
}

#[cfg(feature = "parallel")]
pub fn map<T: Send, F: Fn(usize) -> T + Sync + Send>(n: usize, f: F) -> Vec<T> {
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map<T, F: Fn(usize) -> T>(n: usize, f: F) -> Vec<T> {
    map_seq(n, f)
}

#[cfg(feature = "parallel")]
pub fn all<F: Fn(usize) -> bool + Sync + Send>(n: usize, f: F) -> bool {
    (0..n).into_par_iter().all(f)
}

#[cfg(not(feature = "parallel"))]
pub fn all<F: Fn(usize) -> bool>(n: usize, f: F) -> bool {
    all_seq(n, f)
}

#[cfg(feature = "parallel")]
pub fn find_min<T: Send, F: Fn(usize) -> Option<T> + Sync + Send>(n: usize, f: F) -> Option<T> {
    (0..n)
        .into_par_iter()
        .filter_map(|i| f(i).map(|t| (i, t)))
        .min_by_key(|(i, _)| *i)
        .map(|(_, t)| t)
}

#[cfg(not(feature = "parallel"))]
pub fn find_min<T, F: Fn(usize) -> Option<T>>(n: usize, f: F) -> Option<T> {
    find_min_seq(n, f)
}

/// Splits a flat index into (row, col) over a `w`-wide grid.
#[inline]
pub fn unpair(i: usize, w: usize) -> (usize, usize) {
    (i / w, i % w)
}

/// Splits a flat index into a triple over a `w × w` inner grid.
#[inline]
pub fn untriple(i: usize, w: usize) -> (usize, usize, usize) {
    (i / (w * w), (i / w) % w, i % w)
}
