//! Interval machinery: interval tests and enumeration, indecomposability,
//! criticality, and the searches that grow or shrink an indecomposable
//! tournament one or two vertices at a time.
//!
//! An interval is a vertex set that every outside vertex either beats
//! entirely or loses to entirely. The empty set, the singletons, and the full
//! vertex set are always intervals (the trivial ones); a tournament whose
//! every interval is trivial is indecomposable.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::tournament::{Tournament, VertexSet, MAX_VERTICES};

/// Failures of the interval and extension operations.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DecompositionError {
    /// A vertex or vertex set refers outside the tournament.
    OutOfRange { vertex: usize, order: usize },
    /// Interval closure needs at least two seed vertices.
    SeedTooSmall,
    /// The designated base must have at least three vertices.
    BaseTooSmall,
    /// The designated base must induce an indecomposable subtournament.
    BaseDecomposable,
    /// A stated requirement of the operation does not hold for the input.
    PreconditionViolated { requirement: &'static str },
    /// A search whose success is guaranteed for all valid inputs found
    /// nothing. This cannot happen unless an engine is broken, so it is
    /// reported loudly instead of being folded into an empty result.
    SearchExhausted { context: &'static str },
    /// An outside vertex fit none of the three partition parts. As with
    /// [`SearchExhausted`](Self::SearchExhausted), this indicates a broken
    /// engine and must never be silently swallowed.
    ClassificationFailed { vertex: usize },
}

impl fmt::Display for DecompositionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            DecompositionError::OutOfRange { vertex, order } => {
                write!(f, "vertex {vertex} out of range for order {order}")
            }
            DecompositionError::SeedTooSmall => {
                write!(f, "interval closure needs a seed of at least two vertices")
            }
            DecompositionError::BaseTooSmall => {
                write!(f, "base set needs at least three vertices")
            }
            DecompositionError::BaseDecomposable => {
                write!(f, "base set must induce an indecomposable subtournament")
            }
            DecompositionError::PreconditionViolated { requirement } => {
                write!(f, "precondition violated: {requirement}")
            }
            DecompositionError::SearchExhausted { context } => {
                write!(f, "guaranteed search found nothing: {context}")
            }
            DecompositionError::ClassificationFailed { vertex } => {
                write!(f, "vertex {vertex} fits no partition part")
            }
        }
    }
}

impl core::error::Error for DecompositionError {}

fn check_subset(t: &Tournament, set: VertexSet) -> Result<(), DecompositionError> {
    if set.is_subset_of(t.vertices()) {
        Ok(())
    } else {
        let vertex = set.minus(t.vertices()).iter().next().unwrap_or(MAX_VERTICES);
        Err(DecompositionError::OutOfRange { vertex, order: t.order() })
    }
}

/// Whether every vertex outside `set` beats all of `set` or loses to all of it.
///
/// Trivial sets (empty, singletons, everything) always pass.
pub fn is_interval(t: &Tournament, set: VertexSet) -> Result<bool, DecompositionError> {
    check_subset(t, set)?;
    let out = t.out_table();
    Ok(uniform_outside(&out, t.order(), set.bits()))
}

#[inline]
fn uniform_outside(out: &[u16; MAX_VERTICES], n: usize, m: u16) -> bool {
    for (v, &row) in out.iter().enumerate().take(n) {
        if m >> v & 1 == 1 {
            continue;
        }
        let o = row & m;
        if o != 0 && o != m {
            return false;
        }
    }
    true
}

/// Grows `m` to the smallest interval containing it: any outside vertex with
/// arcs into and out of the current set must join, and repeating that to a
/// fixpoint is exactly the inclusion-minimal interval.
fn close_up(out: &[u16; MAX_VERTICES], n: usize, mut m: u16) -> u16 {
    loop {
        let mut grew = false;
        for (v, &row) in out.iter().enumerate().take(n) {
            if m >> v & 1 == 1 {
                continue;
            }
            let o = row & m;
            if o != 0 && o != m {
                m |= 1 << v;
                grew = true;
            }
        }
        if !grew {
            return m;
        }
    }
}

/// The inclusion-minimal interval of `t` containing `seed` (needs `|seed| >= 2`).
pub fn smallest_interval_containing(
    t: &Tournament,
    seed: VertexSet,
) -> Result<VertexSet, DecompositionError> {
    check_subset(t, seed)?;
    if seed.len() < 2 {
        return Err(DecompositionError::SeedTooSmall);
    }
    let out = t.out_table();
    Ok(VertexSet::from_bits(close_up(&out, t.order(), seed.bits())))
}

/// Every interval `I` with `2 <= |I| <= n-1`, ascending by size then by
/// member bitmask. Empty exactly when the tournament is indecomposable, for
/// orders at least 3.
pub fn nontrivial_intervals(t: &Tournament) -> Vec<VertexSet> {
    let n = t.order();
    let mut found = Vec::new();
    if n < 3 {
        return found;
    }
    let out = t.out_table();
    for size in 2..n {
        // Gosper's hack: next n-bit mask with the same popcount.
        let mut m: u32 = (1 << size) - 1;
        while m < 1 << n {
            if uniform_outside(&out, n, m as u16) {
                found.push(VertexSet::from_bits(m as u16));
            }
            let c = m & m.wrapping_neg();
            let r = m + c;
            m = (((r ^ m) >> 2) / c) | r;
        }
    }
    found
}

/// Whether every interval of `t` is trivial. Orders 0..2 qualify vacuously.
///
/// Runs on pair closures: `t` is decomposable exactly when some two-vertex
/// seed closes up to a proper subset. The subset scan behind
/// [`nontrivial_intervals`] is the slow equivalent.
pub fn is_indecomposable(t: &Tournament) -> bool {
    let n = t.order();
    if n <= 2 {
        return true;
    }
    let out = t.out_table();
    let full = VertexSet::full(n).bits();
    for i in 0..n {
        for j in i + 1..n {
            if close_up(&out, n, 1 << i | 1 << j) != full {
                return false;
            }
        }
    }
    true
}

/// Whether `t` is indecomposable, has more than one vertex, and every
/// single-vertex deletion is decomposable.
pub fn is_critical(t: &Tournament) -> bool {
    let n = t.order();
    n > 1
        && is_indecomposable(t)
        && (0..n).all(|v| !is_indecomposable(&t.drop_vertex(v)))
}

/// How the rest of a tournament sits around an indecomposable base `X`: each
/// outside vertex either sees all of `X` uniformly, or extends `X` to a
/// larger indecomposable subtournament, or pairs up with exactly one base
/// vertex as a two-vertex interval. See [`exterior_partition`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExteriorPartition {
    base: VertexSet,
    ext: VertexSet,
    bracket: VertexSet,
    slots: BTreeMap<usize, VertexSet>,
}

impl ExteriorPartition {
    /// The base set `X` the partition was computed against.
    pub fn base(&self) -> VertexSet {
        self.base
    }

    /// Vertices `v` with `T(X + v)` indecomposable.
    pub fn ext(&self) -> VertexSet {
        self.ext
    }

    /// Vertices beating all of the base or beaten by all of it.
    pub fn bracket(&self) -> VertexSet {
        self.bracket
    }

    /// Vertices `v` for which `{u, v}` is an interval of `T(X + v)`, for the
    /// base vertex `u`. `None` when `u` is not in the base.
    pub fn slot(&self, u: usize) -> Option<VertexSet> {
        self.slots.get(&u).copied()
    }

    /// All `(u, slot)` entries in ascending base-vertex order.
    pub fn slots(&self) -> impl Iterator<Item = (usize, VertexSet)> + '_ {
        self.slots.iter().map(|(&u, &s)| (u, s))
    }

    /// Union of every part; equals the complement of the base when the
    /// partition law holds.
    pub fn covered(&self) -> VertexSet {
        self.slots.values().fold(self.ext.union(self.bracket), |a, &s| a.union(s))
    }
}

/// Classifies every vertex outside `base` into exactly one of the three
/// [`ExteriorPartition`] parts.
///
/// Needs `|base| >= 3` and an indecomposable `T(base)`; under those
/// preconditions the three cases are mutually exclusive and cover everything,
/// so a vertex fitting none is a loud [`ClassificationFailed`]
/// (`DecompositionError::ClassificationFailed`) rather than a quiet skip.
pub fn exterior_partition(
    t: &Tournament,
    base: VertexSet,
) -> Result<ExteriorPartition, DecompositionError> {
    check_subset(t, base)?;
    if base.len() < 3 {
        return Err(DecompositionError::BaseTooSmall);
    }
    if !is_indecomposable(&t.restrict(base)) {
        return Err(DecompositionError::BaseDecomposable);
    }
    let n = t.order();
    let out = t.out_table();
    let bm = base.bits();
    let mut ext = VertexSet::EMPTY;
    let mut bracket = VertexSet::EMPTY;
    let mut slots: BTreeMap<usize, VertexSet> = base.iter().map(|u| (u, VertexSet::EMPTY)).collect();
    for v in 0..n {
        if base.contains(v) {
            continue;
        }
        let o = out[v] & bm;
        if o == 0 || o == bm {
            bracket.insert(v);
        } else if is_indecomposable(&t.restrict(base.with(v))) {
            ext.insert(v);
        } else if let Some(u) = pairing_vertex(&out, base, v) {
            slots.get_mut(&u).expect("u ranges over base").insert(v);
        } else {
            return Err(DecompositionError::ClassificationFailed { vertex: v });
        }
    }
    Ok(ExteriorPartition { base, ext, bracket, slots })
}

/// The base vertex `u` making `{u, v}` an interval of `T(base + v)`, if any:
/// every base vertex other than `u` must see `u` and `v` the same way.
fn pairing_vertex(out: &[u16; MAX_VERTICES], base: VertexSet, v: usize) -> Option<usize> {
    base.iter().find(|&u| {
        base.iter().all(|w| w == u || (out[w] >> u & 1) == (out[w] >> v & 1))
    })
}

/// First pair `x < y` outside `base` (ascending by `x`, then `y`) whose
/// addition keeps the induced subtournament indecomposable.
///
/// Needs `t` indecomposable, `|base| >= 3`, at least two vertices outside
/// the base, and `T(base)` indecomposable; a pair then always exists, so an
/// empty search is reported as [`SearchExhausted`]
/// (`DecompositionError::SearchExhausted`).
pub fn extend_indecomposable_by_two(
    t: &Tournament,
    base: VertexSet,
) -> Result<(usize, usize), DecompositionError> {
    check_subset(t, base)?;
    if !is_indecomposable(t) {
        return Err(DecompositionError::PreconditionViolated {
            requirement: "the host tournament is indecomposable",
        });
    }
    if base.len() < 3 {
        return Err(DecompositionError::PreconditionViolated {
            requirement: "the base has at least three vertices",
        });
    }
    if t.order() - base.len() < 2 {
        return Err(DecompositionError::PreconditionViolated {
            requirement: "at least two vertices lie outside the base",
        });
    }
    if !is_indecomposable(&t.restrict(base)) {
        return Err(DecompositionError::PreconditionViolated {
            requirement: "the base induces an indecomposable subtournament",
        });
    }
    let n = t.order();
    for x in 0..n {
        if base.contains(x) {
            continue;
        }
        for y in x + 1..n {
            if base.contains(y) {
                continue;
            }
            if is_indecomposable(&t.restrict(base.with(x).with(y))) {
                return Ok((x, y));
            }
        }
    }
    Err(DecompositionError::SearchExhausted {
        context: "no two outside vertices keep the base indecomposable",
    })
}

/// First vertex `y != keep` (ascending) whose deletion leaves `t`
/// indecomposable.
///
/// Needs `t` indecomposable of even order at least 6; such a `y` then always
/// exists, so an empty scan is reported as [`SearchExhausted`]
/// (`DecompositionError::SearchExhausted`).
pub fn removable_vertex(t: &Tournament, keep: usize) -> Result<usize, DecompositionError> {
    let n = t.order();
    if keep >= n {
        return Err(DecompositionError::OutOfRange { vertex: keep, order: n });
    }
    if !is_indecomposable(t) {
        return Err(DecompositionError::PreconditionViolated {
            requirement: "the tournament is indecomposable",
        });
    }
    if n < 6 || !n.is_multiple_of(2) {
        return Err(DecompositionError::PreconditionViolated {
            requirement: "the order is even and at least 6",
        });
    }
    for y in 0..n {
        if y != keep && is_indecomposable(&t.drop_vertex(y)) {
            return Ok(y);
        }
    }
    Err(DecompositionError::SearchExhausted {
        context: "every deletion other than the protected vertex decomposes",
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{b6, circular, diamond, transitive, u_family, w_family};
    use alloc::vec::Vec;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn interval_test_matches_the_uniformity_definition() {
        let t4 = transitive(4).unwrap();
        assert_eq!(is_interval(&t4, set(&[1, 2])), Ok(true));
        assert_eq!(is_interval(&t4, set(&[0, 2])), Ok(false));
        // Trivial sets always pass.
        assert_eq!(is_interval(&t4, VertexSet::EMPTY), Ok(true));
        assert_eq!(is_interval(&t4, VertexSet::singleton(2)), Ok(true));
        assert_eq!(is_interval(&t4, VertexSet::full(4)), Ok(true));
        let w5 = w_family(5).unwrap();
        assert_eq!(is_interval(&w5, set(&[0, 1])), Ok(false));
        assert!(matches!(
            is_interval(&t4, set(&[1, 7])),
            Err(DecompositionError::OutOfRange { vertex: 7, order: 4 })
        ));
    }

    #[test]
    fn closure_grows_to_the_minimal_interval() {
        let t5 = circular(5).unwrap();
        assert_eq!(smallest_interval_containing(&t5, set(&[0, 1])), Ok(VertexSet::full(5)));
        let t4 = transitive(4).unwrap();
        assert_eq!(smallest_interval_containing(&t4, set(&[1, 2])), Ok(set(&[1, 2])));
        assert_eq!(smallest_interval_containing(&t4, set(&[0, 3])), Ok(VertexSet::full(4)));
        assert_eq!(
            smallest_interval_containing(&t4, VertexSet::singleton(1)),
            Err(DecompositionError::SeedTooSmall)
        );
        // Deleting 0 from the rotational 5-tournament leaves one nontrivial
        // interval; after the deletion relabeling it is {1,2}.
        let dropped = t5.restriction(set(&[1, 2, 3, 4])).unwrap();
        assert_eq!(smallest_interval_containing(&dropped, set(&[1, 2])), Ok(set(&[1, 2])));
    }

    #[test]
    fn interval_enumeration_is_ordered_and_complete() {
        let t4 = transitive(4).unwrap();
        let got: Vec<VertexSet> = nontrivial_intervals(&t4);
        let want = [set(&[0, 1]), set(&[1, 2]), set(&[2, 3]), set(&[0, 1, 2]), set(&[1, 2, 3])];
        assert_eq!(got, want);
        assert_eq!(nontrivial_intervals(&circular(3).unwrap()), []);
        assert_eq!(nontrivial_intervals(&diamond(false)), [set(&[0, 1, 2])]);
        assert_eq!(nontrivial_intervals(&transitive(2).unwrap()), []);
    }

    #[test]
    fn pair_closure_engine_agrees_with_the_subset_scan_when_small() {
        for n in [3usize, 4, 5] {
            let np = n * (n - 1) / 2;
            for bits in 0..1u32 << np {
                let t = Tournament::from_bits(n, bits as u128).unwrap();
                assert_eq!(
                    is_indecomposable(&t),
                    nontrivial_intervals(&t).is_empty(),
                    "engines disagree on {t}"
                );
            }
        }
    }

    #[test]
    fn known_tournaments_classify_correctly() {
        assert!(is_indecomposable(&circular(3).unwrap()));
        assert!(!is_indecomposable(&transitive(3).unwrap()));
        for t in [circular(5).unwrap(), u_family(5).unwrap(), w_family(5).unwrap(), b6()] {
            assert!(is_indecomposable(&t), "{t}");
        }
        assert!(!is_indecomposable(&diamond(false)));
        // Order 0..2 are vacuously indecomposable.
        assert!(is_indecomposable(&transitive(0).unwrap()));
        assert!(is_indecomposable(&transitive(2).unwrap()));
    }

    #[test]
    fn criticality_requires_every_deletion_to_decompose() {
        for t in [circular(5).unwrap(), u_family(5).unwrap(), w_family(5).unwrap()] {
            assert!(is_critical(&t), "{t}");
        }
        for t in [circular(7).unwrap(), u_family(7).unwrap(), w_family(7).unwrap()] {
            assert!(is_critical(&t), "{t}");
        }
        // Indecomposable but with an indecomposable deletion.
        assert!(!is_critical(&b6()));
        // Too small: deleting from the 3-cycle leaves order 2, which is
        // indecomposable, so the condition fails.
        assert!(!is_critical(&circular(3).unwrap()));
        assert!(!is_critical(&transitive(5).unwrap()));
        assert!(!is_critical(&transitive(1).unwrap()));
    }

    #[test]
    fn partition_classifies_each_outside_vertex_once() {
        // In W5 the base {0,1,4} induces a 3-cycle; vertex 2 splits off
        // nothing (uniform), vertex 3 pairs with base vertex 1.
        let w5 = w_family(5).unwrap();
        let p = exterior_partition(&w5, set(&[0, 1, 4])).unwrap();
        assert_eq!(p.ext(), VertexSet::EMPTY);
        assert_eq!(p.bracket(), VertexSet::singleton(2));
        assert_eq!(p.slot(1), Some(VertexSet::singleton(3)));
        assert_eq!(p.slot(0), Some(VertexSet::EMPTY));
        assert_eq!(p.slot(4), Some(VertexSet::EMPTY));
        assert_eq!(p.slot(2), None);
        assert_eq!(p.covered(), set(&[2, 3]));
    }

    #[test]
    fn partition_with_full_base_is_empty() {
        let t5 = circular(5).unwrap();
        let p = exterior_partition(&t5, VertexSet::full(5)).unwrap();
        assert_eq!(p.covered(), VertexSet::EMPTY);
    }

    #[test]
    fn partition_rejects_bad_bases() {
        let t5 = circular(5).unwrap();
        assert!(matches!(
            exterior_partition(&t5, set(&[0, 1])),
            Err(DecompositionError::BaseTooSmall)
        ));
        assert!(matches!(
            exterior_partition(&transitive(5).unwrap(), set(&[0, 1, 2])),
            Err(DecompositionError::BaseDecomposable)
        ));
    }

    #[test]
    fn two_vertex_extension_finds_the_first_working_pair() {
        // In the rotational 7-tournament, {0,1,2,4,5} induces a copy of the
        // rotational 5-tournament, and the only outside pair is {3,6}.
        let t7 = circular(7).unwrap();
        let base = set(&[0, 1, 2, 4, 5]);
        assert!(is_indecomposable(&t7.restrict(base)));
        assert_eq!(extend_indecomposable_by_two(&t7, base), Ok((3, 6)));
        assert!(is_indecomposable(&t7.restrict(base.with(3).with(6))));

        // A 3-cycle base inside W9.
        let w9 = w_family(9).unwrap();
        let base = set(&[0, 1, 8]);
        let (x, y) = extend_indecomposable_by_two(&w9, base).unwrap();
        assert!(is_indecomposable(&w9.restrict(base.with(x).with(y))));
    }

    #[test]
    fn two_vertex_extension_rejects_bad_inputs() {
        let t7 = circular(7).unwrap();
        // {0,1,2,3,4} induces a decomposable subtournament ({2,3} closes up
        // short), so it is not an eligible base.
        assert!(!is_indecomposable(&t7.restrict(set(&[0, 1, 2, 3, 4]))));
        assert!(matches!(
            extend_indecomposable_by_two(&t7, set(&[0, 1, 2, 3, 4])),
            Err(DecompositionError::PreconditionViolated { .. })
        ));
        assert!(matches!(
            extend_indecomposable_by_two(&transitive(7).unwrap(), set(&[0, 1, 2])),
            Err(DecompositionError::PreconditionViolated { .. })
        ));
        assert!(matches!(
            extend_indecomposable_by_two(&t7, set(&[0, 1])),
            Err(DecompositionError::PreconditionViolated { .. })
        ));
        let t5 = circular(5).unwrap();
        assert!(matches!(
            extend_indecomposable_by_two(&t5, set(&[0, 1, 2, 4])),
            Err(DecompositionError::PreconditionViolated { .. })
        ));
    }

    #[test]
    fn removable_vertex_skips_the_protected_one() {
        // Every single deletion of this 6-vertex tournament stays
        // indecomposable, so the scan returns the first unprotected vertex.
        let b = b6();
        for v in 0..6 {
            assert!(is_indecomposable(&b.drop_vertex(v)), "deletion of {v}");
        }
        assert_eq!(removable_vertex(&b, 0), Ok(1));
        assert_eq!(removable_vertex(&b, 3), Ok(0));
    }

    #[test]
    fn removable_vertex_rejects_bad_inputs() {
        assert!(matches!(
            removable_vertex(&transitive(6).unwrap(), 0),
            Err(DecompositionError::PreconditionViolated { .. })
        ));
        assert!(matches!(
            removable_vertex(&circular(5).unwrap(), 0),
            Err(DecompositionError::PreconditionViolated { .. })
        ));
        assert!(matches!(
            removable_vertex(&b6(), 9),
            Err(DecompositionError::OutOfRange { vertex: 9, order: 6 })
        ));
    }
}
