//! Isomorph-free exhaustive generation: one canonical representative per
//! isomorphism class, produced by growing each smaller representative one
//! vertex at a time and deduplicating canonical forms.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::canon::canonical_form;
use crate::decomposition::{is_critical, is_indecomposable};
use crate::tournament::Tournament;

/// Largest order [`all_tournaments`] will enumerate. One step beyond the
/// comfortable default; the class count roughly cubes with each added vertex.
pub const MAX_ENUMERATION_ORDER: usize = 10;

/// Order guard failures for the enumeration entry points.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EnumerationError {
    BadOrder { n: usize },
}

impl fmt::Display for EnumerationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            EnumerationError::BadOrder { n } => {
                write!(f, "order {n} outside the enumerable range 1..={MAX_ENUMERATION_ORDER}")
            }
        }
    }
}

impl core::error::Error for EnumerationError {}

/// Canonical forms of every one-vertex extension of `parent`, sorted and
/// locally deduplicated.
///
/// The appended vertex gets the highest label and each of the `2^m` possible
/// orientation patterns toward the existing vertices. Every class one order
/// up is reachable this way from the canonical representative of some class:
/// deleting the last vertex of any tournament and canonically relabeling the
/// rest turns it into one of these children.
pub fn canonical_children(parent: &Tournament) -> Vec<Tournament> {
    let m = parent.order();
    let mut children: Vec<Tournament> = (0..1u32 << m)
        .map(|pattern| {
            let child = Tournament::from_rule(m + 1, |i, j| {
                if j < m {
                    parent.arc(i, j)
                } else {
                    pattern >> i & 1 == 1
                }
            });
            canonical_form(&child)
        })
        .collect();
    children.sort_unstable();
    children.dedup();
    children
}

/// All class representatives one order above `reps`, which must be the full
/// set of representatives at a common order. Output is ascending by code.
pub fn extend_order(reps: &[Tournament]) -> Vec<Tournament> {
    let mut next: BTreeSet<Tournament> = BTreeSet::new();
    for parent in reps {
        debug_assert_eq!(parent.order(), reps[0].order());
        next.extend(canonical_children(parent));
    }
    next.into_iter().collect()
}

/// One canonical representative per isomorphism class on `n` vertices,
/// ascending by code. Two calls yield identical sequences.
pub fn all_tournaments(n: usize) -> Result<Vec<Tournament>, EnumerationError> {
    if !(1..=MAX_ENUMERATION_ORDER).contains(&n) {
        return Err(EnumerationError::BadOrder { n });
    }
    let mut level = alloc::vec![Tournament::from_bits(1, 0).expect("order 1 is valid")];
    for _ in 1..n {
        level = extend_order(&level);
    }
    Ok(level)
}

/// The representatives on `n` vertices whose every interval is trivial.
pub fn indecomposable_tournaments(n: usize) -> Result<Vec<Tournament>, EnumerationError> {
    Ok(all_tournaments(n)?.into_iter().filter(is_indecomposable).collect())
}

/// The representatives on `n` vertices that are critical.
pub fn critical_tournaments(n: usize) -> Result<Vec<Tournament>, EnumerationError> {
    Ok(all_tournaments(n)?.into_iter().filter(is_critical).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::{are_isomorphic, canonical_code};
    use crate::families::{circular, u_family, w_family};
    use crate::tournament::code_string;
    use alloc::string::ToString;
    use alloc::vec::Vec;

    #[test]
    fn class_counts_match_known_values() {
        for (n, count) in [(1, 1), (2, 1), (3, 2), (4, 4), (5, 12), (6, 56)] {
            assert_eq!(all_tournaments(n).unwrap().len(), count, "order {n}");
        }
    }

    #[test]
    fn order_three_representatives_are_the_two_expected_codes() {
        let reps: Vec<_> = all_tournaments(3).unwrap().iter().map(code_string).collect();
        assert_eq!(reps, ["3:000", "3:010"]);
    }

    #[test]
    fn emitted_representatives_are_canonical_and_sorted() {
        for n in 1..=6 {
            let reps = all_tournaments(n).unwrap();
            for t in &reps {
                assert_eq!(canonical_form(t), *t, "non-canonical emission {t}");
            }
            for pair in reps.windows(2) {
                assert!(pair[0] < pair[1], "order broken at {} {}", pair[0], pair[1]);
            }
        }
    }

    #[test]
    fn every_labeled_tournament_is_covered_exactly_once() {
        let reps = all_tournaments(4).unwrap();
        let mut hit = [false; 4];
        for bits in 0..1u64 << 6 {
            let t = Tournament::from_bits(4, bits as u128).unwrap();
            let c = canonical_form(&t);
            let k = reps.binary_search(&c).expect("canonical form must be emitted");
            hit[k] = true;
        }
        assert!(hit.iter().all(|&h| h));
    }

    #[test]
    fn indecomposable_and_critical_filters_match_known_sets() {
        assert_eq!(indecomposable_tournaments(3).unwrap().len(), 1);
        assert_eq!(indecomposable_tournaments(4).unwrap().len(), 0);

        let inde5 = indecomposable_tournaments(5).unwrap();
        let mut expected: Vec<_> = [circular(5), u_family(5), w_family(5)]
            .map(|t| canonical_code(&t.unwrap()).representative())
            .to_vec();
        expected.sort_unstable();
        assert_eq!(inde5, expected);

        // At order 5 every indecomposable class is critical and vice versa.
        assert_eq!(critical_tournaments(5).unwrap(), inde5);
        assert_eq!(critical_tournaments(4).unwrap(), []);
        assert_eq!(critical_tournaments(6).unwrap(), []);
    }

    #[test]
    fn enumeration_is_reproducible() {
        assert_eq!(all_tournaments(5).unwrap(), all_tournaments(5).unwrap());
    }

    #[test]
    fn order_guard_rejects_out_of_range_requests() {
        assert_eq!(all_tournaments(0), Err(EnumerationError::BadOrder { n: 0 }));
        assert_eq!(all_tournaments(11), Err(EnumerationError::BadOrder { n: 11 }));
        assert_eq!(
            EnumerationError::BadOrder { n: 11 }.to_string(),
            "order 11 outside the enumerable range 1..=10"
        );
    }

    #[test]
    fn children_of_the_single_vertex_are_both_two_vertex_labelings() {
        let one = Tournament::from_bits(1, 0).unwrap();
        let kids = canonical_children(&one);
        assert_eq!(kids.len(), 1); // both orientations are isomorphic
        assert_eq!(kids[0].order(), 2);
        let t2 = Tournament::from_bits(2, 1).unwrap();
        assert!(are_isomorphic(&kids[0], &t2));
    }
}
