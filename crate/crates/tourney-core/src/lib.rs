//! Bit-packed finite tournaments and the combinatorics around them:
//! canonical forms and isomorphism, interval decomposition, induced
//! subtournament embedding, named constructions, and isomorph-free
//! exhaustive enumeration.
//!
//! Everything here is a pure function over immutable values; the crate has
//! no system dependencies and builds without the standard library. Vertex
//! counts are capped at [`MAX_VERTICES`] so a tournament's whole arc
//! relation fits in one machine word pair, which keeps enumeration over
//! millions of instances cheap.
//!
//! ```
//! use tourney_core::{circular, is_indecomposable, embeds, all_tournaments};
//!
//! let t7 = circular(7).unwrap();
//! assert!(is_indecomposable(&t7));
//! assert!(embeds(&circular(5).unwrap(), &t7));
//! assert_eq!(all_tournaments(5).unwrap().len(), 12);
//! ```
#![cfg_attr(not(test), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod canon;
pub mod decomposition;
pub mod embedding;
pub mod enumerate;
pub mod families;
pub mod tournament;

pub use canon::{
    are_isomorphic, automorphism_count, canonical_code, canonical_form, canonical_relabeling,
    isomorphism, CanonicalCode,
};
pub use decomposition::{
    exterior_partition, extend_indecomposable_by_two, is_critical, is_indecomposable, is_interval,
    nontrivial_intervals, removable_vertex, smallest_interval_containing, DecompositionError,
    ExteriorPartition,
};
pub use embedding::{
    contains_diamond, criticality_by_seven, embedding_witness, embeds, i5_profile,
    indecomposable_subtournaments, EmbeddingError, I5Profile, IsoClassSet,
};
pub use enumerate::{
    all_tournaments, canonical_children, critical_tournaments, extend_order,
    indecomposable_tournaments, EnumerationError, MAX_ENUMERATION_ORDER,
};
pub use families::{
    b6, circular, diamond, e_family, f_family, g_family, paley7, transitive, u_family, w_family,
    FamilyError,
};
pub use tournament::{
    code_string, ParseTournamentError, Tournament, TournamentError, VertexSet, MAX_VERTICES,
};
