//! The packed tournament value type and its text code.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

/// Hard cap on vertex count; all pair bits of a tournament this size fit in a `u128`.
pub const MAX_VERTICES: usize = 16;

#[inline]
pub(crate) fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Index of the pair `(i, j)`, `i < j`, in row-major upper-triangle order.
#[inline]
pub(crate) fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// Iterates pairs `(i, j)` with `i < j` in row-major order, matching bit indices.
pub(crate) fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

/// A set of vertices out of `0..16`, stored as one bit per vertex.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(u16);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{0, 1, .., n-1}`.
    #[inline]
    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= MAX_VERTICES);
        VertexSet(((1u32 << n) - 1) as u16)
    }

    #[inline]
    pub fn singleton(v: usize) -> VertexSet {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1 << v)
    }

    #[inline]
    pub(crate) fn from_bits(bits: u16) -> VertexSet {
        VertexSet(bits)
    }

    #[inline]
    pub(crate) fn bits(self) -> u16 {
        self.0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 |= 1 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    /// Copy of `self` with `v` added.
    #[inline]
    pub fn with(self, v: usize) -> VertexSet {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(self.0 | 1 << v)
    }

    /// Copy of `self` with `v` removed.
    #[inline]
    pub fn without(self, v: usize) -> VertexSet {
        VertexSet(self.0 & !(1 << v))
    }

    #[inline]
    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersect(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn minus(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..MAX_VERTICES).filter(move |&v| self.contains(v))
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            assert!(v < MAX_VERTICES, "vertex {v} beyond set capacity");
            s.insert(v);
        }
        s
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexSet({self})")
    }
}

/// Construction and query errors for [`Tournament`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TournamentError {
    TooManyVertices { n: usize },
    OutOfRange { vertex: usize, order: usize },
    SelfLoop { vertex: usize },
    MissingPair { x: usize, y: usize },
    ConflictingArc { x: usize, y: usize },
    BadPermutation,
}

impl fmt::Display for TournamentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            TournamentError::TooManyVertices { n } => {
                write!(f, "{n} vertices exceeds the supported maximum of {MAX_VERTICES}")
            }
            TournamentError::OutOfRange { vertex, order } => {
                write!(f, "vertex {vertex} out of range for order {order}")
            }
            TournamentError::SelfLoop { vertex } => {
                write!(f, "pair ({vertex},{vertex}) relates a vertex to itself")
            }
            TournamentError::MissingPair { x, y } => {
                write!(f, "no orientation given for pair ({x},{y})")
            }
            TournamentError::ConflictingArc { x, y } => {
                write!(f, "pair ({x},{y}) oriented both ways")
            }
            TournamentError::BadPermutation => write!(f, "relabeling is not a permutation"),
        }
    }
}

impl core::error::Error for TournamentError {}

/// Failures parsing the `n:bits` text code.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ParseTournamentError {
    MissingSeparator,
    BadOrder,
    WrongLength { expected: usize, found: usize },
    BadCharacter { position: usize, found: char },
}

impl fmt::Display for ParseTournamentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ParseTournamentError::MissingSeparator => write!(f, "expected `order:bits`"),
            ParseTournamentError::BadOrder => {
                write!(f, "order must be an integer between 0 and {MAX_VERTICES}")
            }
            ParseTournamentError::WrongLength { expected, found } => {
                write!(f, "expected {expected} pair bits, found {found}")
            }
            ParseTournamentError::BadCharacter { position, found } => {
                write!(f, "bit {position} is {found:?}, expected '0' or '1'")
            }
        }
    }
}

impl core::error::Error for ParseTournamentError {}

/// A tournament: one orientation chosen for every pair of distinct vertices.
///
/// Stored as a single upper-triangle bitmask; bit `pair_index(n, i, j)` is 1
/// exactly when `i` beats `j` (for `i < j`). Values are immutable: every
/// operation returns a fresh tournament, and copies are cheap.
///
/// The text code is `n:bits` with the bits in row-major pair order, for
/// example `3:101` for the 3-cycle with arcs 0->1, 1->2, 2->0.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Tournament {
    n: u8,
    bits: u128,
}

impl Tournament {
    /// Builds a tournament on `0..n` from an explicit arc list `(winner, loser)`.
    ///
    /// Every unordered pair must appear exactly once (repeats of the same
    /// orientation are tolerated, opposite orientations are not).
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Tournament, TournamentError> {
        if n > MAX_VERTICES {
            return Err(TournamentError::TooManyVertices { n });
        }
        let mut seen = 0u128;
        let mut bits = 0u128;
        for &(x, y) in arcs {
            if x >= n {
                return Err(TournamentError::OutOfRange { vertex: x, order: n });
            }
            if y >= n {
                return Err(TournamentError::OutOfRange { vertex: y, order: n });
            }
            if x == y {
                return Err(TournamentError::SelfLoop { vertex: x });
            }
            let (i, j) = if x < y { (x, y) } else { (y, x) };
            let k = pair_index(n, i, j);
            let forward = (x < y) as u128;
            if seen >> k & 1 == 1 {
                if bits >> k & 1 != forward {
                    return Err(TournamentError::ConflictingArc { x, y });
                }
            } else {
                seen |= 1 << k;
                bits |= forward << k;
            }
        }
        let want = pair_mask(n);
        if seen != want {
            let k = (!seen & want).trailing_zeros() as usize;
            let (x, y) = pairs(n).nth(k).expect("missing bit indexes a pair");
            return Err(TournamentError::MissingPair { x, y });
        }
        Ok(Tournament { n: n as u8, bits })
    }

    /// Builds a tournament directly from packed pair bits.
    pub fn from_bits(n: usize, bits: u128) -> Result<Tournament, TournamentError> {
        if n > MAX_VERTICES {
            return Err(TournamentError::TooManyVertices { n });
        }
        if bits & !pair_mask(n) != 0 {
            return Err(TournamentError::OutOfRange { vertex: n, order: n });
        }
        Ok(Tournament { n: n as u8, bits })
    }

    /// Builds from a total orientation rule; `rule(i, j)` with `i < j` decides `i -> j`.
    pub(crate) fn from_rule(n: usize, mut rule: impl FnMut(usize, usize) -> bool) -> Tournament {
        debug_assert!(n <= MAX_VERTICES);
        let mut bits = 0u128;
        for (i, j) in pairs(n) {
            if rule(i, j) {
                bits |= 1 << pair_index(n, i, j);
            }
        }
        Tournament { n: n as u8, bits }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// All vertices of the tournament.
    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    /// Unchecked arc test; both ends must be in range and distinct.
    #[inline]
    pub(crate) fn arc(&self, x: usize, y: usize) -> bool {
        debug_assert!(x != y && x < self.order() && y < self.order());
        if x < y {
            self.bits >> pair_index(self.order(), x, y) & 1 == 1
        } else {
            self.bits >> pair_index(self.order(), y, x) & 1 == 0
        }
    }

    /// Whether `x` beats `y`.
    pub fn has_arc(&self, x: usize, y: usize) -> Result<bool, TournamentError> {
        let n = self.order();
        if x >= n {
            return Err(TournamentError::OutOfRange { vertex: x, order: n });
        }
        if y >= n {
            return Err(TournamentError::OutOfRange { vertex: y, order: n });
        }
        if x == y {
            return Err(TournamentError::SelfLoop { vertex: x });
        }
        Ok(self.arc(x, y))
    }

    /// The tournament with every arc reversed.
    pub fn dual(&self) -> Tournament {
        Tournament { n: self.n, bits: !self.bits & pair_mask(self.order()) }
    }

    /// Out-neighbor mask per vertex; slots at and beyond `order` are zero.
    pub(crate) fn out_table(&self) -> [u16; MAX_VERTICES] {
        let n = self.order();
        let mut out = [0u16; MAX_VERTICES];
        for (i, j) in pairs(n) {
            if self.bits >> pair_index(n, i, j) & 1 == 1 {
                out[i] |= 1 << j;
            } else {
                out[j] |= 1 << i;
            }
        }
        out
    }

    /// Induced subtournament on `set`, keeping relative vertex order.
    pub(crate) fn restrict(&self, set: VertexSet) -> Tournament {
        debug_assert!(set.is_subset_of(self.vertices()));
        let mut members = [0usize; MAX_VERTICES];
        let mut k = 0;
        for v in set.iter() {
            members[k] = v;
            k += 1;
        }
        Tournament::from_rule(k, |a, b| self.arc(members[a], members[b]))
    }

    /// Induced subtournament on `set`; vertices are renamed to `0..set.len()`
    /// preserving order.
    pub fn restriction(&self, set: VertexSet) -> Result<Tournament, TournamentError> {
        if !set.is_subset_of(self.vertices()) {
            let vertex = set.minus(self.vertices()).iter().next().unwrap_or(0);
            return Err(TournamentError::OutOfRange { vertex, order: self.order() });
        }
        Ok(self.restrict(set))
    }

    /// Like [`restriction`](Self::restriction), also returning the map from
    /// new labels back to the original vertices.
    pub fn subtournament(
        &self,
        set: VertexSet,
    ) -> Result<(Tournament, Vec<usize>), TournamentError> {
        let sub = self.restriction(set)?;
        Ok((sub, set.iter().collect()))
    }

    /// Copy with one vertex deleted (labels above it shift down).
    pub(crate) fn drop_vertex(&self, v: usize) -> Tournament {
        self.restrict(self.vertices().without(v))
    }

    /// Number of vertices beaten by `x`.
    pub fn score(&self, x: usize) -> Result<usize, TournamentError> {
        let n = self.order();
        if x >= n {
            return Err(TournamentError::OutOfRange { vertex: x, order: n });
        }
        Ok((0..n).filter(|&y| y != x && self.arc(x, y)).count())
    }

    /// All scores in ascending order.
    pub fn score_sequence(&self) -> Vec<usize> {
        let mut s: Vec<usize> =
            (0..self.order()).map(|x| self.score(x).expect("vertex in range")).collect();
        s.sort_unstable();
        s
    }

    /// Applies a permutation: vertex `v` of `self` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Tournament, TournamentError> {
        let n = self.order();
        if perm.len() != n {
            return Err(TournamentError::BadPermutation);
        }
        let mut seen = 0u32;
        for &p in perm {
            if p >= n {
                return Err(TournamentError::OutOfRange { vertex: p, order: n });
            }
            seen |= 1 << p;
        }
        if seen.count_ones() as usize != n {
            return Err(TournamentError::BadPermutation);
        }
        let mut inv = [0usize; MAX_VERTICES];
        for (v, &p) in perm.iter().enumerate() {
            inv[p] = v;
        }
        Ok(Tournament::from_rule(n, |a, b| self.arc(inv[a], inv[b])))
    }

    /// The pair bits read as a text-order integer; equal-order tournaments
    /// compare by code exactly in this key's order.
    #[inline]
    pub(crate) fn lex_key(&self) -> u128 {
        lex_key(self.order(), self.bits)
    }
}

#[inline]
pub(crate) fn pair_mask(n: usize) -> u128 {
    let np = pair_count(n);
    if np == 0 {
        0
    } else {
        (!0u128) >> (128 - np)
    }
}

/// Reverses pair bits so that integer order matches text (lexicographic) order.
#[inline]
pub(crate) fn lex_key(n: usize, bits: u128) -> u128 {
    let np = pair_count(n);
    if np == 0 {
        0
    } else {
        bits.reverse_bits() >> (128 - np)
    }
}

impl Ord for Tournament {
    /// Orders by vertex count, then by text code.
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.n.cmp(&other.n).then_with(|| self.lex_key().cmp(&other.lex_key()))
    }
}

impl PartialOrd for Tournament {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.order())?;
        for k in 0..pair_count(self.order()) {
            write!(f, "{}", self.bits >> k & 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tournament({self})")
    }
}

impl FromStr for Tournament {
    type Err = ParseTournamentError;

    fn from_str(s: &str) -> Result<Tournament, ParseTournamentError> {
        let (head, tail) = s.split_once(':').ok_or(ParseTournamentError::MissingSeparator)?;
        let n: usize = head.parse().map_err(|_| ParseTournamentError::BadOrder)?;
        if n > MAX_VERTICES {
            return Err(ParseTournamentError::BadOrder);
        }
        let expected = pair_count(n);
        let found = tail.chars().count();
        if found != expected {
            return Err(ParseTournamentError::WrongLength { expected, found });
        }
        let mut bits = 0u128;
        for (k, c) in tail.chars().enumerate() {
            match c {
                '0' => {}
                '1' => bits |= 1 << k,
                _ => return Err(ParseTournamentError::BadCharacter { position: k, found: c }),
            }
        }
        Ok(Tournament { n: n as u8, bits })
    }
}

/// Round-trip helper: the code of `t` as an owned string.
pub fn code_string(t: &Tournament) -> String {
    use alloc::string::ToString;
    t.to_string()
}
