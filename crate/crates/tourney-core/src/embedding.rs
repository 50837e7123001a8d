//! Induced-subtournament search: embedding tests with witnesses, diamond
//! detection, the three-flag profile against the 5-vertex indecomposable
//! tournaments, and iso-class collections of indecomposable subtournaments.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::canon::{canonical_code, CanonicalCode};
use crate::decomposition::is_indecomposable;
use crate::families::{circular, diamond, u_family, w_family};
use crate::tournament::{Tournament, VertexSet};

/// Failures of the subtournament-collection operations.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EmbeddingError {
    /// Subtournament size outside `3..=order`.
    BadSubsetSize { k: usize, order: usize },
    /// The operation is only defined for indecomposable tournaments.
    NotIndecomposable,
    /// The operation needs a larger tournament.
    OrderTooSmall { order: usize, need: usize },
}

impl fmt::Display for EmbeddingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            EmbeddingError::BadSubsetSize { k, order } => {
                write!(f, "subtournament size {k} outside 3..={order}")
            }
            EmbeddingError::NotIndecomposable => {
                write!(f, "input tournament must be indecomposable")
            }
            EmbeddingError::OrderTooSmall { order, need } => {
                write!(f, "order {order} is below the required {need}")
            }
        }
    }
}

impl core::error::Error for EmbeddingError {}

/// Backtracking search for an induced copy of `pattern` inside `host`.
///
/// Pattern vertices are placed in label order; candidates for each one are
/// tried nearest-score first (ties by label), which makes the returned
/// witness deterministic. The only pruning is arc agreement against already
/// placed vertices: induced embeddings admit no sound degree-based filter,
/// since a pattern vertex may map to a host vertex of any score.
fn find_embedding(pattern: &Tournament, host: &Tournament) -> Option<VertexSet> {
    let k = pattern.order();
    let n = host.order();
    if k > n {
        return None;
    }
    if k == 0 {
        return Some(VertexSet::EMPTY);
    }
    let candidates: Vec<Vec<usize>> = (0..k)
        .map(|p| {
            let ps = pattern.score(p).expect("vertex in range");
            let mut c: Vec<usize> = (0..n).collect();
            c.sort_by_key(|&h| (host.score(h).expect("vertex in range").abs_diff(ps), h));
            c
        })
        .collect();
    let mut assign = alloc::vec![0usize; k];
    if place(pattern, host, &candidates, &mut assign, 0, 0) {
        Some(assign.iter().copied().collect())
    } else {
        None
    }
}

fn place(
    pattern: &Tournament,
    host: &Tournament,
    candidates: &[Vec<usize>],
    assign: &mut [usize],
    p: usize,
    used: u16,
) -> bool {
    if p == pattern.order() {
        return true;
    }
    for &h in &candidates[p] {
        if used >> h & 1 == 1 {
            continue;
        }
        if (0..p).all(|q| pattern.arc(q, p) == host.arc(assign[q], h)) {
            assign[p] = h;
            if place(pattern, host, candidates, assign, p + 1, used | 1 << h) {
                return true;
            }
        }
    }
    false
}

/// Whether some induced subtournament of `host` is isomorphic to `pattern`.
pub fn embeds(pattern: &Tournament, host: &Tournament) -> bool {
    find_embedding(pattern, host).is_some()
}

/// Like [`embeds`], returning the vertex set of one induced copy.
pub fn embedding_witness(pattern: &Tournament, host: &Tournament) -> Option<VertexSet> {
    find_embedding(pattern, host)
}

/// Whether `host` contains a diamond: a 4-vertex subtournament with exactly
/// one interval of cardinality 3. There are two diamonds up to isomorphism,
/// one the dual of the other, and this checks for both.
pub fn contains_diamond(host: &Tournament) -> bool {
    embeds(&diamond(false), host) || embeds(&diamond(true), host)
}

/// Which of the three 5-vertex indecomposable tournaments embed in a host.
///
/// The flags are raw embedding tests, defined for any input. The structural
/// guarantees (at least one flag set; never exactly {t5,u5} or {t5,w5}) hold
/// for indecomposable hosts on at least 5 vertices, and the claim checkers
/// confirm them exhaustively at desk scale.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct I5Profile {
    pub t5: bool,
    pub u5: bool,
    pub w5: bool,
}

impl I5Profile {
    pub fn any(self) -> bool {
        self.t5 || self.u5 || self.w5
    }
}

impl fmt::Display for I5Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        write!(f, "{{")?;
        for (flag, name) in [(self.t5, "t5"), (self.u5, "u5"), (self.w5, "w5")] {
            if flag {
                if !first {
                    write!(f, ",")?;
                }
                write!(f, "{name}")?;
                first = false;
            }
        }
        write!(f, "}}")
    }
}

/// The embedding flags of `host` against the three 5-vertex indecomposable
/// tournaments.
pub fn i5_profile(host: &Tournament) -> I5Profile {
    I5Profile {
        t5: embeds(&circular(5).expect("size 5 is valid"), host),
        u5: embeds(&u_family(5).expect("size 5 is valid"), host),
        w5: embeds(&w_family(5).expect("size 5 is valid"), host),
    }
}

/// Tournaments deduplicated by canonical code, with a count of how many
/// inserts landed in each class.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct IsoClassSet {
    classes: BTreeMap<CanonicalCode, (Tournament, usize)>,
}

impl IsoClassSet {
    pub fn new() -> IsoClassSet {
        IsoClassSet::default()
    }

    /// Files `t` under its canonical code; the stored representative is the
    /// canonical relabeling, so it reproduces the key.
    pub fn insert(&mut self, t: &Tournament) {
        let code = canonical_code(t);
        self.classes.entry(code).or_insert_with(|| (code.representative(), 0)).1 += 1;
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn contains(&self, code: &CanonicalCode) -> bool {
        self.classes.contains_key(code)
    }

    /// How many inserts landed in this class; 0 for absent classes.
    pub fn multiplicity(&self, code: &CanonicalCode) -> usize {
        self.classes.get(code).map_or(0, |&(_, m)| m)
    }

    /// Classes in ascending code order.
    pub fn iter(&self) -> impl Iterator<Item = (&CanonicalCode, &Tournament, usize)> {
        self.classes.iter().map(|(c, &(ref t, m))| (c, t, m))
    }

    pub fn codes(&self) -> impl Iterator<Item = &CanonicalCode> {
        self.classes.keys()
    }
}

/// Iso classes of the indecomposable `k`-vertex induced subtournaments of
/// `host`, with multiplicity counting vertex subsets. Needs `3 <= k <= order`.
pub fn indecomposable_subtournaments(
    host: &Tournament,
    k: usize,
) -> Result<IsoClassSet, EmbeddingError> {
    let n = host.order();
    if k < 3 || k > n {
        return Err(EmbeddingError::BadSubsetSize { k, order: n });
    }
    let mut classes = IsoClassSet::new();
    for_each_k_subset(n, k, |subset| {
        let sub = host.restrict(VertexSet::from_bits(subset));
        if is_indecomposable(&sub) {
            classes.insert(&sub);
        }
        true
    });
    Ok(classes)
}

/// Calls `visit` on every `k`-subset of `0..n` in ascending bitmask order
/// until it returns false.
fn for_each_k_subset(n: usize, k: usize, mut visit: impl FnMut(u16) -> bool) -> bool {
    debug_assert!(k >= 1 && k <= n);
    let mut m: u32 = (1 << k) - 1;
    while m < 1 << n {
        if !visit(m as u16) {
            return false;
        }
        let c = m & m.wrapping_neg();
        let r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
    true
}

/// Whether the indecomposable 7-vertex subtournaments of `host` form a
/// single iso class equal to one of the three critical 7-vertex tournaments.
///
/// For indecomposable hosts on at least 7 vertices this is an alternative
/// criticality test, and the claim checkers confirm the agreement.
pub fn criticality_by_seven(host: &Tournament) -> Result<bool, EmbeddingError> {
    let n = host.order();
    if n < 7 {
        return Err(EmbeddingError::OrderTooSmall { order: n, need: 7 });
    }
    if !is_indecomposable(host) {
        return Err(EmbeddingError::NotIndecomposable);
    }
    let targets = [
        canonical_code(&circular(7).expect("size 7 is valid")),
        canonical_code(&u_family(7).expect("size 7 is valid")),
        canonical_code(&w_family(7).expect("size 7 is valid")),
    ];
    let mut found: Option<CanonicalCode> = None;
    let clean = for_each_k_subset(n, 7, |subset| {
        let sub = host.restrict(VertexSet::from_bits(subset));
        if !is_indecomposable(&sub) {
            return true;
        }
        let code = canonical_code(&sub);
        if !targets.contains(&code) {
            return false;
        }
        match found {
            None => {
                found = Some(code);
                true
            }
            Some(c) => c == code,
        }
    });
    Ok(clean && found.is_some())
}
