//! Canonical codes: isomorphism, automorphism counting, canonical relabeling.
//!
//! The canonical code of a tournament is the lexicographically smallest text
//! code over all relabelings. Two tournaments are isomorphic exactly when
//! their canonical codes are equal.

use alloc::vec::Vec;
use core::fmt;

use crate::tournament::{lex_key, pair_count, Tournament, MAX_VERTICES};

/// The minimal code of an isomorphism class; total order, cheap to compare.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct CanonicalCode {
    n: u8,
    bits: u128,
}

impl CanonicalCode {
    #[inline]
    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// The canonically relabeled tournament whose code equals this code.
    pub fn representative(&self) -> Tournament {
        Tournament::from_bits(self.order(), self.bits).expect("canonical bits are in range")
    }
}

impl Ord for CanonicalCode {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| lex_key(self.order(), self.bits).cmp(&lex_key(other.order(), other.bits)))
    }
}

impl PartialOrd for CanonicalCode {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.representative())
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({self})")
    }
}

/// Branch-and-bound over placements. Positions are filled left to right from
/// an ordered partition of the unplaced vertices; placing a vertex splits
/// every cell into (beats it, beaten by it), in that order, which fixes one
/// more row of the code. Only candidates whose row ties the minimum survive,
/// so leaves are exactly the relabelings that can still reach the minimal
/// code, and the leaves equal to it count the automorphisms.
struct Search {
    out: [u16; MAX_VERTICES],
    n: usize,
    npairs: u32,
    /// Best full code so far, packed with the first text bit highest.
    best: u128,
    count: u64,
    assign: [u8; MAX_VERTICES],
    best_assign: [u8; MAX_VERTICES],
}

#[derive(Clone, Copy)]
struct Cells {
    mask: [u16; MAX_VERTICES],
    len: u8,
}

impl Search {
    fn run(t: &Tournament) -> Search {
        let n = t.order();
        let mut s = Search {
            out: t.out_table(),
            n,
            npairs: pair_count(n) as u32,
            best: u128::MAX,
            count: 0,
            assign: [0; MAX_VERTICES],
            best_assign: [0; MAX_VERTICES],
        };
        if n == 0 {
            s.best = 0;
            s.count = 1;
            return s;
        }
        let root = Cells { mask: {
            let mut m = [0u16; MAX_VERTICES];
            m[0] = ((1u32 << n) - 1) as u16;
            m
        }, len: 1 };
        s.explore(&root, 0, 0, 0);
        s
    }

    fn explore(&mut self, cells: &Cells, depth: usize, prefix: u128, len: u32) {
        if depth == self.n {
            if prefix < self.best {
                self.best = prefix;
                self.count = 1;
                self.best_assign = self.assign;
            } else if prefix == self.best {
                self.count += 1;
            }
            return;
        }
        let first = cells.mask[0];
        let rowlen = (self.n - 1 - depth) as u32;

        // Row bits contributed by one candidate, as an integer with the
        // leftmost position highest: per cell, losses (0s) then wins (1s).
        let mut cand = [(0u16, 0u32); MAX_VERTICES];
        let mut ncand = 0;
        let mut min_row = u32::MAX;
        let mut rest = first;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let ou = self.out[u];
            let mut row = 0u32;
            for c in 0..cells.len as usize {
                let m = if c == 0 { first & !(1 << u) } else { cells.mask[c] };
                let wins = (m & ou).count_ones();
                row = (row << m.count_ones()) | ((1u32 << wins) - 1);
            }
            if row < min_row {
                min_row = row;
            }
            cand[ncand] = (u as u16, row);
            ncand += 1;
        }

        let new_len = len + rowlen;
        let val = (prefix << rowlen) | min_row as u128;
        // A prefix already above the incumbent cannot reach a smaller leaf.
        if val > self.best >> (self.npairs - new_len) {
            return;
        }

        for &(u, row) in cand.iter().take(ncand) {
            if row != min_row {
                continue;
            }
            let u = u as usize;
            self.assign[depth] = u as u8;
            let mut next = Cells { mask: [0; MAX_VERTICES], len: 0 };
            for c in 0..cells.len as usize {
                let m = if c == 0 { first & !(1 << u) } else { cells.mask[c] };
                for part in [m & !self.out[u], m & self.out[u]] {
                    if part != 0 {
                        next.mask[next.len as usize] = part;
                        next.len += 1;
                    }
                }
            }
            self.explore(&next, depth + 1, val, new_len);
        }
    }

    /// Converts the packed best value to storage order (pair index k at bit k).
    fn best_bits(&self) -> u128 {
        if self.npairs == 0 {
            0
        } else {
            self.best.reverse_bits() >> (128 - self.npairs)
        }
    }
}

/// The canonical code of `t`.
pub fn canonical_code(t: &Tournament) -> CanonicalCode {
    let s = Search::run(t);
    CanonicalCode { n: t.order() as u8, bits: s.best_bits() }
}

/// The canonically relabeled copy of `t`.
pub fn canonical_form(t: &Tournament) -> Tournament {
    canonical_code(t).representative()
}

/// A permutation `p` with `t.relabel(&p)` equal to the canonical form.
pub fn canonical_relabeling(t: &Tournament) -> Vec<usize> {
    let s = Search::run(t);
    let mut perm = alloc::vec![0usize; t.order()];
    for pos in 0..t.order() {
        perm[s.best_assign[pos] as usize] = pos;
    }
    perm
}

/// Order of the automorphism group of `t`.
pub fn automorphism_count(t: &Tournament) -> u64 {
    Search::run(t).count
}

/// Whether `a` and `b` are isomorphic.
pub fn are_isomorphic(a: &Tournament, b: &Tournament) -> bool {
    a.order() == b.order() && canonical_code(a) == canonical_code(b)
}

/// An isomorphism from `a` onto `b` as a map vertex of `a` -> vertex of `b`,
/// if one exists. Costs an extra search per call; use [`are_isomorphic`] when
/// the witness is not needed.
pub fn isomorphism(a: &Tournament, b: &Tournament) -> Option<Vec<usize>> {
    if a.order() != b.order() {
        return None;
    }
    let sa = Search::run(a);
    let sb = Search::run(b);
    if sa.best != sb.best {
        return None;
    }
    // a -> positions -> b composes the two canonical relabelings.
    let n = a.order();
    let mut pos_of_a = [0usize; MAX_VERTICES];
    for pos in 0..n {
        pos_of_a[sa.best_assign[pos] as usize] = pos;
    }
    Some((0..n).map(|x| sb.best_assign[pos_of_a[x]] as usize).collect())
}
