//! Group descriptors: a connected algebraic group abstracted to the
//! data its invariants depend on — the dimension of the unipotent
//! radical, the dimension of the central torus of the reductive
//! quotient, and the multiset of simple factors. Two non-isomorphic
//! groups may share a descriptor; the engines only ever report what the
//! descriptor determines.

use crate::error::{Error, Result};
use crate::rootdata::{canonicalize, Family, SimpleType};
use serde::{Deserialize, Serialize};
use std::cmp::Reverse;
use std::fmt;

/// Characteristic of the ground field: zero or a prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Characteristic {
    Zero,
    Prime(u64),
}

impl Characteristic {
    pub fn new(value: u64) -> Result<Characteristic> {
        if value == 0 {
            Ok(Characteristic::Zero)
        } else if is_prime(value) {
            Ok(Characteristic::Prime(value))
        } else {
            Err(Error::BadCharacteristic(value))
        }
    }

    pub fn prime(self) -> Option<u64> {
        match self {
            Characteristic::Zero => None,
            Characteristic::Prime(p) => Some(p),
        }
    }
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Characteristic::Zero => write!(f, "0"),
            Characteristic::Prime(p) => write!(f, "{p}"),
        }
    }
}

/// Deterministic Miller-Rabin, exact for all u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        b %= n;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, b);
            }
            b = mul(b, b);
            e >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A connected group up to the abstraction described in the module docs.
/// `factors` is kept sorted by (family, rank) descending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupDescriptor {
    u: u64,
    z: u64,
    factors: Vec<SimpleType>,
}

impl GroupDescriptor {
    pub fn trivial() -> GroupDescriptor {
        GroupDescriptor {
            u: 0,
            z: 0,
            factors: Vec::new(),
        }
    }

    pub fn new(u: u64, z: u64, mut factors: Vec<SimpleType>) -> GroupDescriptor {
        factors.sort_by_key(|t| Reverse((t.family(), t.rank())));
        GroupDescriptor { u, z, factors }
    }

    pub fn simple(t: SimpleType) -> GroupDescriptor {
        GroupDescriptor::new(0, 0, vec![t])
    }

    pub fn unipotent_dim(&self) -> u64 {
        self.u
    }

    pub fn central_torus_dim(&self) -> u64 {
        self.z
    }

    pub fn factors(&self) -> &[SimpleType] {
        &self.factors
    }

    pub fn is_trivial(&self) -> bool {
        self.u == 0 && self.z == 0 && self.factors.is_empty()
    }

    /// True iff there are no simple factors.
    pub fn is_soluble(&self) -> bool {
        self.factors.is_empty()
    }

    /// The unique simple factor, if the descriptor is exactly one simple
    /// group (u = z = 0, one factor).
    pub fn as_simple(&self) -> Option<SimpleType> {
        if self.u == 0 && self.z == 0 && self.factors.len() == 1 {
            Some(self.factors[0])
        } else {
            None
        }
    }

    pub fn dim(&self) -> u64 {
        self.u + self.z + self.factors.iter().map(|t| t.dim()).sum::<u64>()
    }

    /// dim R(G) = u + z under this abstraction.
    pub fn radical_dim(&self) -> u64 {
        self.u + self.z
    }

    pub fn semisimple_part(&self) -> &[SimpleType] {
        &self.factors
    }

    /// Direct-product composition of descriptors.
    pub fn concat(&self, other: &GroupDescriptor) -> GroupDescriptor {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        GroupDescriptor::new(self.u + other.u, self.z + other.z, factors)
    }

    /// Isotypic decomposition of the semisimple part: (type, multiplicity)
    /// pairs in canonical order.
    pub fn isotypic_parts(&self) -> Vec<(SimpleType, u64)> {
        let mut out: Vec<(SimpleType, u64)> = Vec::new();
        for &t in &self.factors {
            match out.last_mut() {
                Some((s, k)) if *s == t => *k += 1,
                _ => out.push((t, 1)),
            }
        }
        out
    }

    pub fn render(&self) -> String {
        if self.is_trivial() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        if self.u > 0 {
            parts.push(format!("U{}", self.u));
        }
        for (t, k) in self.isotypic_parts() {
            if k == 1 {
                parts.push(t.to_string());
            } else {
                parts.push(format!("{t}^{k}"));
            }
        }
        if self.z > 0 {
            parts.push(format!("T{}", self.z));
        }
        parts.join(" ")
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Parses the descriptor grammar: whitespace- or `*`-separated terms
/// `U<n>`, `T<n>`, `<family><rank>` with optional `^<k>` repetition on
/// simple terms; the literal `1` denotes the trivial group.
pub fn parse(text: &str) -> Result<GroupDescriptor> {
    let trimmed_len = text.trim_start().len();
    if trimmed_len == 0 {
        return Err(Error::Parse {
            pos: 0,
            msg: "empty input; the trivial group must be written as `1`".into(),
        });
    }
    let mut u = 0u64;
    let mut z = 0u64;
    let mut factors: Vec<SimpleType> = Vec::new();
    let mut saw_one = false;
    let mut saw_term = false;

    let bytes = text.as_bytes();
    let mut i = 0usize;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() || c == '*' {
            i += 1;
            continue;
        }
        saw_term = true;
        let start = i;
        if c == '1' {
            i += 1;
            if i < bytes.len() && (bytes[i] as char).is_ascii_alphanumeric() {
                return Err(Error::Parse {
                    pos: start,
                    msg: "unexpected characters after `1`".into(),
                });
            }
            saw_one = true;
            continue;
        }
        if c == 'U' || c == 'T' {
            i += 1;
            let (n, ni) = read_number(bytes, i, start)?;
            i = ni;
            if c == 'U' {
                u += n; // U0 is a no-op
            } else {
                z += n;
            }
            continue;
        }
        if let Some(family) = Family::from_letter(c) {
            i += 1;
            let (rank, ni) = read_number(bytes, i, start)?;
            i = ni;
            if rank == 0 || rank > u32::MAX as u64 {
                return Err(Error::UnknownType {
                    family: c,
                    rank,
                });
            }
            let canon = canonicalize(family, rank as u32)?;
            let mut reps = 1u64;
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let (k, ni) = read_number(bytes, i, start)?;
                i = ni;
                if k == 0 {
                    return Err(Error::Parse {
                        pos: start,
                        msg: "repetition count must be positive".into(),
                    });
                }
                reps = k;
            }
            for _ in 0..reps {
                factors.extend_from_slice(&canon);
            }
            continue;
        }
        return Err(Error::Parse {
            pos: start,
            msg: format!("unexpected character `{c}`"),
        });
    }
    if !saw_term {
        return Err(Error::Parse {
            pos: 0,
            msg: "empty input; the trivial group must be written as `1`".into(),
        });
    }
    if saw_one && (u > 0 || z > 0 || !factors.is_empty()) {
        return Err(Error::Parse {
            pos: 0,
            msg: "`1` cannot be combined with other terms".into(),
        });
    }
    Ok(GroupDescriptor::new(u, z, factors))
}

fn read_number(bytes: &[u8], mut i: usize, term_start: usize) -> Result<(u64, usize)> {
    let digits_start = i;
    while i < bytes.len() && bytes[i].is_ascii_digit() {
        i += 1;
    }
    if i == digits_start {
        return Err(Error::Parse {
            pos: term_start,
            msg: "expected a number".into(),
        });
    }
    let s = std::str::from_utf8(&bytes[digits_start..i]).unwrap();
    let n: u64 = s.parse().map_err(|_| Error::Parse {
        pos: term_start,
        msg: "number too large".into(),
    })?;
    Ok((n, i))
}
