//! Named tournament constructors.
//!
//! Every constructor emits its construction labeling verbatim; nothing is
//! canonicalized on the way out.

use core::fmt;

use crate::tournament::{Tournament, MAX_VERTICES};

/// Size constraint failures for the family constructors.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FamilyError {
    BadSize { family: &'static str, size: usize, need: &'static str },
    TooLarge { family: &'static str, size: usize },
}

impl fmt::Display for FamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilyError::BadSize { family, size, need } => {
                write!(f, "{family} is undefined at size {size}; need {need}")
            }
            FamilyError::TooLarge { family, size } => {
                write!(f, "{family} at size {size} exceeds the {MAX_VERTICES}-vertex cap")
            }
        }
    }
}

impl core::error::Error for FamilyError {}

fn check(family: &'static str, size: usize, min: usize, odd: bool) -> Result<(), FamilyError> {
    if size < min || (odd && size.is_multiple_of(2)) {
        let need = match (min, odd) {
            (3, true) => "an odd size of at least 3",
            (5, true) => "an odd size of at least 5",
            (6, false) => "a size of at least 6",
            _ => "a larger size",
        };
        return Err(FamilyError::BadSize { family, size, need });
    }
    if size > MAX_VERTICES {
        return Err(FamilyError::TooLarge { family, size });
    }
    Ok(())
}

/// Rotational tournament on `Z/size`: `i` beats the next `size/2` residues.
///
/// Size 3 gives the 3-cycle; size 5 is the unique regular 5-vertex tournament.
pub fn circular(size: usize) -> Result<Tournament, FamilyError> {
    check("circular", size, 3, true)?;
    let half = size / 2;
    Ok(Tournament::from_rule(size, |i, j| j - i <= half))
}

/// The circular tournament with all arcs inside its upper half block
/// `{size/2+1, .., size-1}` reversed.
pub fn u_family(size: usize) -> Result<Tournament, FamilyError> {
    check("u_family", size, 5, true)?;
    let half = size / 2;
    Ok(Tournament::from_rule(size, |i, j| {
        if i > half {
            false // inside the reversed block, the larger label wins
        } else {
            j - i <= half
        }
    }))
}

/// Total order `0 < 1 < .. < size-2` plus a top vertex beaten by the odd
/// labels and beating the even ones.
pub fn w_family(size: usize) -> Result<Tournament, FamilyError> {
    check("w_family", size, 5, true)?;
    let top = size - 1;
    Ok(Tournament::from_rule(size, |i, j| if j == top { i % 2 == 1 } else { true }))
}

/// Quadratic-residue tournament on `Z/7`: `i` beats `i + {1, 2, 4}`.
pub fn paley7() -> Tournament {
    Tournament::from_rule(7, |i, j| matches!(j - i, 1 | 2 | 4))
}

/// The 6-vertex restriction of [`paley7`] to `{0, .., 5}`.
pub fn b6() -> Tournament {
    paley7().restriction([0, 1, 2, 3, 4, 5].into_iter().collect()).expect("subset in range")
}

/// The diamond: a 3-cycle on `{0, 1, 2}` dominated by vertex 3, or its dual
/// when `dualized` is set. The two are not isomorphic.
pub fn diamond(dualized: bool) -> Tournament {
    let d = Tournament::from_arcs(4, &[(0, 1), (1, 2), (2, 0), (3, 0), (3, 1), (3, 2)])
        .expect("fixed arc list is total");
    if dualized {
        d.dual()
    } else {
        d
    }
}

/// The transitive order `0 < 1 < .. < size-1`.
pub fn transitive(size: usize) -> Result<Tournament, FamilyError> {
    if size > MAX_VERTICES {
        return Err(FamilyError::TooLarge { family: "transitive", size });
    }
    Ok(Tournament::from_rule(size, |_, _| true))
}

/// Rotational 5-vertex base `{0..4}`; each later vertex `k` beats exactly `k-1`.
pub fn e_family(size: usize) -> Result<Tournament, FamilyError> {
    check("e_family", size, 6, false)?;
    Ok(Tournament::from_rule(size, |i, j| {
        if j <= 4 {
            j - i <= 2
        } else {
            i != j - 1
        }
    }))
}

/// Arcs `i -> j` exactly when `i + 1 < j` or `i = j + 1`: the transitive
/// order with every consecutive pair reversed.
pub fn f_family(size: usize) -> Result<Tournament, FamilyError> {
    check("f_family", size, 6, false)?;
    Ok(Tournament::from_rule(size, |i, j| j > i + 1))
}

/// The previous family one size down, plus a last vertex beating exactly
/// vertex 0.
pub fn g_family(size: usize) -> Result<Tournament, FamilyError> {
    check("g_family", size, 6, false)?;
    let last = size - 1;
    Ok(Tournament::from_rule(size, |i, j| if j == last { i != 0 } else { j > i + 1 }))
}
