//! Ground-truth combinatorics of the simple types: ranks, positive-root
//! counts, dimensions, Borel dimensions, and canonicalization of the
//! low-rank coincidences (B_1 = C_1 = A_1, D_2 = A_1 A_1, D_3 = A_3,
//! C_2 = B_2).

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Largest accepted rank. All formulas are closed-form exact integers;
/// the cap only guards against u64 overflow in derived quantities.
pub const MAX_RANK: u32 = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        match c.to_ascii_uppercase() {
            'A' => Some(Family::A),
            'B' => Some(Family::B),
            'C' => Some(Family::C),
            'D' => Some(Family::D),
            'E' => Some(Family::E),
            'F' => Some(Family::F),
            'G' => Some(Family::G),
            _ => None,
        }
    }
}

/// A simple algebraic group type in canonical form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimpleType {
    family: Family,
    rank: u32,
}

impl SimpleType {
    /// Builds a canonical simple type; rejects non-canonical input such as
    /// `C_1` or `D_3` (use [`canonicalize`] to resolve aliases).
    pub fn new(family: Family, rank: u32) -> Result<SimpleType> {
        if rank as u64 > MAX_RANK as u64 {
            return Err(Error::RankTooLarge(rank as u64));
        }
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3, // C_2 canonicalizes to B_2
            Family::D => rank >= 4, // D_2, D_3 canonicalize away
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(SimpleType { family, rank })
        } else {
            Err(Error::UnknownType {
                family: family.letter(),
                rank: rank as u64,
            })
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> u32 {
        self.rank
    }

    /// Number of positive roots N(t).
    pub fn num_positive_roots(self) -> u64 {
        let r = self.rank as u64;
        match self.family {
            Family::A => r * (r + 1) / 2,
            Family::B | Family::C => r * r,
            Family::D => r * (r - 1),
            Family::G => 6,
            Family::F => 24,
            Family::E => match self.rank {
                6 => 36,
                7 => 63,
                _ => 120,
            },
        }
    }

    /// dim G = rank + 2 N.
    pub fn dim(self) -> u64 {
        self.rank as u64 + 2 * self.num_positive_roots()
    }

    /// dim B = N + rank for a Borel subgroup B.
    pub fn borel_dim(self) -> u64 {
        self.num_positive_roots() + self.rank as u64
    }

    pub fn is_classical(self) -> bool {
        matches!(self.family, Family::A | Family::B | Family::C | Family::D)
    }

    pub fn is_exceptional(self) -> bool {
        !self.is_classical()
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// Resolves low-rank coincidences to canonical types. Invariants are
/// isogeny-insensitive, so each isogeny class gets exactly one key:
/// B_1, C_1 -> A_1; D_2 -> A_1 A_1; D_3 -> A_3; C_2 -> B_2.
pub fn canonicalize(family: Family, rank: u32) -> Result<Vec<SimpleType>> {
    if rank as u64 > MAX_RANK as u64 {
        return Err(Error::RankTooLarge(rank as u64));
    }
    let err = || Error::UnknownType {
        family: family.letter(),
        rank: rank as u64,
    };
    match (family, rank) {
        (_, 0) => Err(err()),
        (Family::B, 1) | (Family::C, 1) => Ok(vec![SimpleType::new(Family::A, 1)?]),
        (Family::C, 2) => Ok(vec![SimpleType::new(Family::B, 2)?]),
        (Family::D, 1) => Err(err()),
        (Family::D, 2) => Ok(vec![SimpleType::new(Family::A, 1)?; 2]),
        (Family::D, 3) => Ok(vec![SimpleType::new(Family::A, 3)?]),
        _ => Ok(vec![SimpleType::new(family, rank)?]),
    }
}
