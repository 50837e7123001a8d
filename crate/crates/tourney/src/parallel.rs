//! Worker-pool versions of the enumeration and per-class scans. Results are
//! merged in a fixed order, so output never depends on the worker count.

use std::collections::BTreeSet;

use rayon::prelude::*;
use tourney_core::{canonical_children, EnumerationError, Tournament, MAX_ENUMERATION_ORDER};

/// Extends one level of representatives to the next, fanning the per-parent
/// work across the pool. Equal to the sequential extension for any pool size.
pub fn extend_order(reps: &[Tournament]) -> Vec<Tournament> {
    let children: Vec<Vec<Tournament>> = reps.par_iter().map(canonical_children).collect();
    let merged: BTreeSet<Tournament> = children.into_iter().flatten().collect();
    merged.into_iter().collect()
}

/// Every isomorphism class on `n` vertices, enumerated level by level on the
/// worker pool. Same output as the sequential enumeration.
pub fn all_tournaments(n: usize) -> Result<Vec<Tournament>, EnumerationError> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(EnumerationError::BadOrder { n });
    }
    let mut level = vec![Tournament::from_arcs(1, &[]).expect("one vertex is valid")];
    for _ in 1..n {
        level = extend_order(&level);
    }
    Ok(level)
}

/// Applies `f` to every item in parallel and returns results in input order.
pub fn map<T: Sync, U: Send, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U + Sync + Send,
{
    items.par_iter().map(f).collect()
}

/// Applies `flag` to every class in parallel and returns the flags in input
/// order.
pub fn flags<T: Sync, F>(items: &[T], flag: F) -> Vec<bool>
where
    F: Fn(&T) -> bool + Sync + Send,
{
    map(items, flag)
}

/// Keeps the classes whose parallel-computed flag is set, preserving order.
pub fn filter<F>(items: &[Tournament], flag: F) -> Vec<Tournament>
where
    F: Fn(&Tournament) -> bool + Sync + Send,
{
    let keep = flags(items, flag);
    items.iter().zip(keep).filter_map(|(t, k)| k.then_some(*t)).collect()
}
