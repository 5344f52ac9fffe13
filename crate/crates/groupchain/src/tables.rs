//! Exact depth values for simple types where they are known in closed
//! form: all types in characteristic zero, exceptional types in any
//! characteristic, and classical types of rank at most 4.
//!
//! Positive-characteristic values are stored as breakpoint lists
//! (p_min, value): the value attached to the largest p_min not exceeding
//! p. Every listed type has a breakpoint at p = 2, so lookup is total
//! over the listed types.

use crate::descriptor::Characteristic;
use crate::rootdata::{Family, SimpleType};

/// Breakpoint rows for positive characteristic, one per curated type.
/// Sources: the rank <= 4 classical analysis and the exceptional-group
/// case analysis over the Liebeck-Seitz maximal subgroup classification.
pub const DEPTH_BREAKPOINTS: &[(Family, u32, &[(u64, u64)])] = &[
    (Family::A, 1, &[(2, 3)]),
    (Family::A, 2, &[(2, 6), (3, 4)]),
    (Family::B, 2, &[(2, 5), (5, 4)]),
    (Family::G, 2, &[(2, 5), (7, 4)]),
    (Family::A, 3, &[(2, 6), (3, 5)]),
    (Family::B, 3, &[(2, 6), (7, 5)]),
    (Family::C, 3, &[(2, 6), (3, 5), (7, 4)]),
    (Family::A, 4, &[(2, 9), (3, 6), (5, 5)]),
    (Family::B, 4, &[(2, 7), (3, 5), (11, 4)]),
    (Family::C, 4, &[(2, 7), (3, 6), (11, 4)]),
    (Family::D, 4, &[(2, 7), (5, 5)]),
    (Family::F, 4, &[(2, 8), (3, 6), (7, 5), (13, 4)]),
    (Family::E, 6, &[(2, 6), (5, 5)]),
    (Family::E, 7, &[(2, 8), (3, 7), (5, 5), (17, 4)]),
    (Family::E, 8, &[(2, 9), (3, 7), (5, 5), (23, 4)]),
];

/// Exact depth in positive characteristic p, if the type is curated
/// (exceptional, or classical of rank <= 4). `None` for classical types
/// of rank >= 5, whose exact depth is open in general.
pub fn depth_table_p(t: SimpleType, p: u64) -> Option<u64> {
    debug_assert!(p >= 2);
    let row = DEPTH_BREAKPOINTS
        .iter()
        .find(|&&(f, r, _)| f == t.family() && r == t.rank())?;
    let mut value = None;
    for &(p_min, v) in row.2 {
        if p >= p_min {
            value = Some(v);
        }
    }
    value
}

/// Exact depth in characteristic zero, for every simple type.
pub fn depth_char0(t: SimpleType) -> u64 {
    match (t.family(), t.rank()) {
        (Family::A, 1) => 3,
        (Family::A, 6) => 6,
        (Family::A, r) if r >= 3 => 5,
        (Family::B, 3) => 5,
        (Family::D, _) => 5,
        (Family::E, 6) => 5,
        _ => 4,
    }
}

/// Exact depth when known in closed form, across both characteristics.
pub fn depth_exact(t: SimpleType, c: Characteristic) -> Option<u64> {
    match c {
        Characteristic::Zero => Some(depth_char0(t)),
        Characteristic::Prime(p) => depth_table_p(t, p),
    }
}

/// The prime rows displayed in the low-rank depth table, for
/// reproduction. Cells are (p, type, value); each type appears at every
/// prime down its displayed column.
pub fn lowrank_table_cells() -> Vec<(u64, SimpleType, u64)> {
    let order: &[(Family, u32, u64)] = &[
        // (family, rank, last displayed prime row for this column)
        (Family::A, 1, 2),
        (Family::A, 2, 3),
        (Family::B, 2, 5),
        (Family::G, 2, 7),
        (Family::A, 3, 3),
        (Family::B, 3, 7),
        (Family::C, 3, 7),
        (Family::A, 4, 5),
        (Family::B, 4, 11),
        (Family::C, 4, 11),
        (Family::D, 4, 5),
        (Family::F, 4, 13),
    ];
    let primes = [2u64, 3, 5, 7, 11, 13];
    let mut cells = Vec::new();
    for &p in &primes {
        for &(f, r, last) in order {
            if p <= last {
                let t = SimpleType::new(f, r).unwrap();
                cells.push((p, t, depth_table_p(t, p).unwrap()));
            }
        }
    }
    cells
}

/// Same for the exceptional depth table, displayed primes up to 23.
pub fn exceptional_table_cells() -> Vec<(u64, SimpleType, u64)> {
    let order: &[(Family, u32, u64)] = &[
        (Family::G, 2, 7),
        (Family::F, 4, 13),
        (Family::E, 6, 5),
        (Family::E, 7, 17),
        (Family::E, 8, 23),
    ];
    let primes = [2u64, 3, 5, 7, 11, 13, 17, 19, 23];
    let mut cells = Vec::new();
    for &p in &primes {
        for &(f, r, last) in order {
            if p <= last {
                let t = SimpleType::new(f, r).unwrap();
                cells.push((p, t, depth_table_p(t, p).unwrap()));
            }
        }
    }
    cells
}
