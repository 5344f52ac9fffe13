//! Curated database of maximal-connected-subgroup facts, the parametric
//! step patterns used by the shipped chains, and a brute-force depth
//! oracle over the fragment where the classification is complete.
//!
//! Absence of a witness means "not certifiable from curated data", never
//! "not maximal".

use crate::descriptor::{Characteristic, GroupDescriptor};
use crate::error::{Error, Result};
use crate::rootdata::{canonicalize, Family, SimpleType};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

const BUILTIN_DATA: &str = include_str!("../assets/maxsub.dat");

/// Environment variable naming an alternate database file.
pub const DB_ENV_VAR: &str = "GROUPCHAIN_MAXSUB_DB";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StepKind {
    Parabolic,
    LeviDrop,
    SubspaceStabilizer,
    TensorOrDiagonal,
    TableCited,
    BorelDescent,
}

impl fmt::Display for StepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            StepKind::Parabolic => "Parabolic",
            StepKind::LeviDrop => "LeviDrop",
            StepKind::SubspaceStabilizer => "SubspaceStabilizer",
            StepKind::TensorOrDiagonal => "TensorOrDiagonal",
            StepKind::TableCited => "TableCited",
            StepKind::BorelDescent => "BorelDescent",
        };
        f.write_str(s)
    }
}

impl StepKind {
    pub fn parse(s: &str) -> Option<StepKind> {
        match s {
            "Parabolic" => Some(StepKind::Parabolic),
            "LeviDrop" => Some(StepKind::LeviDrop),
            "SubspaceStabilizer" => Some(StepKind::SubspaceStabilizer),
            "TensorOrDiagonal" => Some(StepKind::TensorOrDiagonal),
            "TableCited" => Some(StepKind::TableCited),
            "BorelDescent" => Some(StepKind::BorelDescent),
            _ => None,
        }
    }
}

/// One disjunct of a characteristic condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharAtom {
    Any,
    Zero,
    Positive,
    Eq(u64),
    Ge(u64),
}

/// Disjunction of characteristic atoms, e.g. `p=0,p>=5`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharCond(Vec<CharAtom>);

impl CharCond {
    pub fn any() -> CharCond {
        CharCond(vec![CharAtom::Any])
    }

    pub fn matches(&self, c: Characteristic) -> bool {
        self.0.iter().any(|a| match (a, c) {
            (CharAtom::Any, _) => true,
            (CharAtom::Zero, Characteristic::Zero) => true,
            (CharAtom::Positive, Characteristic::Prime(_)) => true,
            (CharAtom::Eq(n), Characteristic::Prime(p)) => p == *n,
            (CharAtom::Ge(n), Characteristic::Prime(p)) => p >= *n,
            _ => false,
        })
    }

    pub fn parse(s: &str) -> Result<CharCond> {
        let mut atoms = Vec::new();
        for part in s.split(',') {
            let part = part.trim();
            let atom = if part == "any" {
                CharAtom::Any
            } else if part == "p=0" {
                CharAtom::Zero
            } else if part == "p>0" {
                CharAtom::Positive
            } else if let Some(n) = part.strip_prefix("p>=") {
                CharAtom::Ge(n.parse().map_err(|_| bad_cond(s))?)
            } else if let Some(n) = part.strip_prefix("p=") {
                CharAtom::Eq(n.parse().map_err(|_| bad_cond(s))?)
            } else {
                return Err(bad_cond(s));
            };
            atoms.push(atom);
        }
        if atoms.is_empty() {
            return Err(bad_cond(s));
        }
        Ok(CharCond(atoms))
    }
}

fn bad_cond(s: &str) -> Error {
    Error::Domain(format!("bad characteristic condition `{s}`"))
}

impl fmt::Display for CharCond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|a| match a {
                CharAtom::Any => "any".to_string(),
                CharAtom::Zero => "p=0".to_string(),
                CharAtom::Positive => "p>0".to_string(),
                CharAtom::Eq(n) => format!("p={n}"),
                CharAtom::Ge(n) => format!("p>={n}"),
            })
            .collect();
        f.write_str(&parts.join(","))
    }
}

/// A record justifying one maximal inclusion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaxStepWitness {
    pub parent: GroupDescriptor,
    pub child: GroupDescriptor,
    pub kind: StepKind,
    pub citation: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CompletenessStatus {
    Complete,
    WitnessesOnly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompletenessTag {
    pub group: SimpleType,
    pub status: CompletenessStatus,
    pub citation: String,
}

#[derive(Debug, Clone)]
struct DbRow {
    parent: GroupDescriptor,
    child: GroupDescriptor,
    cond: CharCond,
    kind: StepKind,
    citation: String,
}

#[derive(Debug, Clone)]
struct CompleteRow {
    group: SimpleType,
    cond: CharCond,
    note: String,
}

/// The loaded database: immutable after construction.
pub struct MaxSubDb {
    rows: Vec<DbRow>,
    completes: Vec<CompleteRow>,
    by_parent: HashMap<GroupDescriptor, Vec<usize>>,
}

static BUILTIN: OnceLock<MaxSubDb> = OnceLock::new();

impl MaxSubDb {
    /// The compiled-in database (or the file named by `GROUPCHAIN_MAXSUB_DB`
    /// if set at first use).
    pub fn builtin() -> &'static MaxSubDb {
        BUILTIN.get_or_init(|| {
            if let Ok(path) = std::env::var(DB_ENV_VAR) {
                match std::fs::read_to_string(&path) {
                    Ok(text) => return MaxSubDb::from_str(&text)
                        .unwrap_or_else(|e| panic!("bad database file {path}: {e}")),
                    Err(e) => panic!("cannot read {DB_ENV_VAR}={path}: {e}"),
                }
            }
            MaxSubDb::from_str(BUILTIN_DATA).expect("builtin database must parse")
        })
    }

    pub fn from_str(text: &str) -> Result<MaxSubDb> {
        let mut rows = Vec::new();
        let mut completes = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = match raw.find('#') {
                Some(i) => &raw[..i],
                None => raw,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: &str| Error::Domain(format!("maxsub.dat line {}: {msg}", lineno + 1));
            if let Some(rest) = line.strip_prefix("max:") {
                let fields: Vec<&str> = rest.split('|').map(str::trim).collect();
                if fields.len() != 5 {
                    return Err(err("expected 5 fields"));
                }
                let parent = crate::descriptor::parse(fields[0])?;
                let child = crate::descriptor::parse(fields[1])?;
                if child.dim() >= parent.dim() {
                    return Err(err("child must have smaller dimension than parent"));
                }
                let cond = CharCond::parse(fields[2])?;
                let kind =
                    StepKind::parse(fields[3]).ok_or_else(|| err("unknown step kind"))?;
                rows.push(DbRow {
                    parent,
                    child,
                    cond,
                    kind,
                    citation: fields[4].to_string(),
                });
            } else if let Some(rest) = line.strip_prefix("complete:") {
                let fields: Vec<&str> = rest.split('|').map(str::trim).collect();
                if fields.len() != 3 {
                    return Err(err("expected 3 fields"));
                }
                let desc = crate::descriptor::parse(fields[0])?;
                let group = desc
                    .as_simple()
                    .ok_or_else(|| err("complete records need a simple type"))?;
                completes.push(CompleteRow {
                    group,
                    cond: CharCond::parse(fields[1])?,
                    note: fields[2].to_string(),
                });
            } else {
                return Err(err("unknown record kind"));
            }
        }
        let mut by_parent: HashMap<GroupDescriptor, Vec<usize>> = HashMap::new();
        for (i, row) in rows.iter().enumerate() {
            by_parent.entry(row.parent.clone()).or_default().push(i);
        }
        Ok(MaxSubDb {
            rows,
            completes,
            by_parent,
        })
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// Iterates all (parent, child, kind) facts, for auditing.
    pub fn facts(&self) -> impl Iterator<Item = (&GroupDescriptor, &GroupDescriptor, StepKind)> {
        self.rows.iter().map(|r| (&r.parent, &r.child, r.kind))
    }

    fn stored_children(
        &self,
        parent: &GroupDescriptor,
        c: Characteristic,
    ) -> impl Iterator<Item = &DbRow> {
        self.by_parent
            .get(parent)
            .into_iter()
            .flatten()
            .map(move |&i| &self.rows[i])
            .filter(move |r| r.cond.matches(c))
    }

    fn complete_note(&self, t: SimpleType, c: Characteristic) -> Option<&str> {
        self.completes
            .iter()
            .find(|row| row.group == t && row.cond.matches(c))
            .map(|row| row.note.as_str())
    }

    /// Looks up or pattern-matches a maximal-step witness for
    /// `parent > child` in characteristic `c`. `None` means the step is
    /// not certifiable from curated data; it may still be a valid step.
    pub fn is_maximal_step(
        &self,
        parent: &GroupDescriptor,
        child: &GroupDescriptor,
        c: Characteristic,
    ) -> Option<MaxStepWitness> {
        if child.dim() >= parent.dim() {
            return None;
        }
        // Concrete curated rows first: they carry the sharpest citations.
        if let Some(row) = self
            .stored_children(parent, c)
            .find(|r| &r.child == child)
        {
            return Some(MaxStepWitness {
                parent: parent.clone(),
                child: child.clone(),
                kind: row.kind,
                citation: row.citation.clone(),
            });
        }
        let witness = |kind: StepKind, citation: &str| {
            Some(MaxStepWitness {
                parent: parent.clone(),
                child: child.clone(),
                kind,
                citation: citation.to_string(),
            })
        };
        let (u, z) = (parent.unipotent_dim(), parent.central_torus_dim());
        let (cu, cz) = (child.unipotent_dim(), child.central_torus_dim());

        if parent.factors() == child.factors() {
            if parent.is_soluble() {
                // Every maximal connected subgroup of a soluble group has
                // codimension one; the descriptor cannot distinguish which
                // codimension-1 subgroups occur, so any single drop passes.
                if (cu == u && z > 0 && cz == z - 1) || (cz == z && u > 0 && cu == u - 1) {
                    return witness(
                        StepKind::BorelDescent,
                        "codimension-1 descent inside a soluble group",
                    );
                }
                return None;
            }
            if cu == u && z > 0 && cz == z - 1 {
                return witness(StepKind::LeviDrop, "central torus codimension-1 drop");
            }
            if cz == z && u > 0 && cu == u - 1 {
                return witness(
                    StepKind::BorelDescent,
                    "codimension-1 descent in a soluble direct factor",
                );
            }
            if u > 0 && cu == 0 && cz == z {
                return witness(
                    StepKind::LeviDrop,
                    "Levi factor is maximal when the unipotent radical is an irreducible module",
                );
            }
            return None;
        }

        // Remaining patterns replace exactly one simple factor (or merge a
        // diagonal pair), possibly adding unipotent/torus dimensions.
        if cu < u || cz < z {
            return None;
        }
        let (removed, added) = multiset_diff(parent.factors(), child.factors());
        if removed.len() != 1 {
            return None;
        }
        let s = removed[0];
        let du = cu - u;
        let dz = cz - z;
        if du == 0 && dz == 0 && added.is_empty() {
            // Diagonal merge of two equal factors.
            if parent.factors().iter().filter(|&&t| t == s).count() >= 2 {
                return witness(
                    StepKind::TensorOrDiagonal,
                    "diagonal subgroup of an S x S pair is maximal",
                );
            }
            return None;
        }
        let step = GroupDescriptor::new(du, dz, added);
        self.simple_step(s, &step, c)
            .map(|(kind, citation)| MaxStepWitness {
                parent: parent.clone(),
                child: child.clone(),
                kind,
                citation,
            })
    }

    /// Certifies `step` as a maximal connected subgroup of the simple
    /// group `s`, from stored rows and the parametric families.
    fn simple_step(
        &self,
        s: SimpleType,
        step: &GroupDescriptor,
        c: Characteristic,
    ) -> Option<(StepKind, String)> {
        let parent = GroupDescriptor::simple(s);
        if let Some(row) = self.stored_children(&parent, c).find(|r| &r.child == step) {
            return Some((row.kind, row.citation.clone()));
        }
        let r = s.rank();
        let p_not_2 = !matches!(c, Characteristic::Prime(2));

        if step.unipotent_dim() == 0 && step.central_torus_dim() == 0 {
            let added = step.factors();
            match s.family() {
                Family::C => {
                    // C_r > C_a C_{r-a}, any characteristic.
                    if let Some((a, b)) = split_ranks(added, c_rank) {
                        if a + b == r as u64 {
                            return Some((
                                StepKind::SubspaceStabilizer,
                                "stabilizer of a nondegenerate subspace of the symplectic module"
                                    .into(),
                            ));
                        }
                    }
                    if c == Characteristic::Zero && added == [a1()] {
                        return Some((
                            StepKind::TableCited,
                            "irreducible A1 in C_r, characteristic zero (Dynkin)".into(),
                        ));
                    }
                }
                Family::D => {
                    // D_r > D_a D_{r-a} (a, r-a >= 2) for p != 2.
                    if p_not_2 {
                        if let Some((a, b)) = split_ranks(added, d_rank_part)
                            .or_else(|| d_pair_split(added))
                        {
                            if a + b == r as u64 && a >= 2 && b >= 2 {
                                return Some((
                                    StepKind::SubspaceStabilizer,
                                    "stabilizer of a nondegenerate subspace of the orthogonal module"
                                        .into(),
                                ));
                            }
                        }
                    }
                    // D_r > B_{r-1}, any characteristic.
                    if step_is_b(added, r as u64 - 1) {
                        return Some((
                            StepKind::SubspaceStabilizer,
                            "stabilizer of a nondegenerate (p != 2) or nonsingular (p = 2) 1-space"
                                .into(),
                        ));
                    }
                }
                Family::B => {
                    // B_r > D_r, any characteristic.
                    if added == canon(Family::D, r) {
                        return Some((
                            StepKind::SubspaceStabilizer,
                            "stabilizer of a nondegenerate hyperplane: D_r in B_r".into(),
                        ));
                    }
                    // B-splits at p = 2, mirroring the symplectic splits
                    // under the depth identification of B_r and C_r.
                    if c == Characteristic::Prime(2) {
                        if let Some((a, b)) = split_ranks(added, b_rank) {
                            if a + b == r as u64 {
                                return Some((
                                    StepKind::SubspaceStabilizer,
                                    "orthogonal subspace split at p = 2 (B_r and C_r have equal depth)"
                                        .into(),
                                ));
                            }
                        }
                    }
                    if c == Characteristic::Zero && r >= 4 && added == [a1()] {
                        return Some((
                            StepKind::TableCited,
                            "irreducible A1 in B_r (r != 3), characteristic zero (Dynkin)".into(),
                        ));
                    }
                }
                Family::A => {
                    if r >= 3 && r % 2 == 1 && added == canon(Family::C, (r + 1) / 2) {
                        return Some((
                            StepKind::TableCited,
                            "symplectic form stabilizer C_{(r+1)/2} in A_r, r odd".into(),
                        ));
                    }
                    if c == Characteristic::Zero && r >= 4 && r % 2 == 0 && added == canon(Family::B, r / 2)
                    {
                        return Some((
                            StepKind::TableCited,
                            "orthogonal form stabilizer B_{r/2} in A_r, r even, characteristic zero"
                                .into(),
                        ));
                    }
                }
                _ => {}
            }
        }

        // Maximal parabolic shapes.
        if step.central_torus_dim() == 1 && step.unipotent_dim() > 0 {
            for shape in maximal_parabolics(s) {
                if &shape == step {
                    return Some((
                        StepKind::Parabolic,
                        "maximal parabolic subgroup (Dynkin node deletion)".into(),
                    ));
                }
            }
        }
        None
    }

    /// The curated list of maximal connected subgroups of `g` in
    /// characteristic `c`, with its completeness status. Parabolic shapes
    /// are generated; reductive members come from stored rows.
    pub fn maximal_connected(
        &self,
        g: SimpleType,
        c: Characteristic,
    ) -> Result<(Vec<GroupDescriptor>, CompletenessTag)> {
        let parent = GroupDescriptor::simple(g);
        let reductive: Vec<GroupDescriptor> = self
            .stored_children(&parent, c)
            .map(|r| r.child.clone())
            .collect();
        if let Some(note) = self.complete_note(g, c) {
            let mut list = reductive;
            for shape in maximal_parabolics(g) {
                if !list.contains(&shape) {
                    list.push(shape);
                }
            }
            return Ok((
                list,
                CompletenessTag {
                    group: g,
                    status: CompletenessStatus::Complete,
                    citation: note.to_string(),
                },
            ));
        }
        if reductive.is_empty() {
            return Err(Error::NotCurated(g.to_string(), c.to_string()));
        }
        Ok((
            reductive,
            CompletenessTag {
                group: g,
                status: CompletenessStatus::WitnessesOnly,
                citation: "stored witnesses only; the full classification is not curated".into(),
            },
        ))
    }

    /// Shortest-path depth oracle over the complete fragment. Mixed
    /// descriptors are traversed with the same reductions the curated
    /// case analyses use: one maximal step per normal soluble layer, the
    /// product/diagonal classification for semisimple products, and
    /// dimension-counting for soluble groups.
    pub fn depth_bruteforce(&self, g: SimpleType, c: Characteristic) -> Result<u64> {
        let mut memo: HashMap<GroupDescriptor, u64> = HashMap::new();
        self.bruteforce_rec(&GroupDescriptor::simple(g), c, &mut memo)
    }

    fn bruteforce_rec(
        &self,
        d: &GroupDescriptor,
        c: Characteristic,
        memo: &mut HashMap<GroupDescriptor, u64>,
    ) -> Result<u64> {
        if let Some(&v) = memo.get(d) {
            return Ok(v);
        }
        let value = if d.is_trivial() {
            0
        } else if d.is_soluble() {
            d.dim()
        } else if d.unipotent_dim() > 0 || d.central_torus_dim() > 0 {
            let layers = (d.unipotent_dim() > 0) as u64 + (d.central_torus_dim() > 0) as u64;
            let ss = GroupDescriptor::new(0, 0, d.factors().to_vec());
            layers + self.bruteforce_rec(&ss, c, memo)?
        } else if let Some(s) = d.as_simple() {
            let (list, tag) = self
                .maximal_connected(s, c)
                .map_err(|_| Error::Incomplete(s.to_string(), c.to_string()))?;
            if tag.status != CompletenessStatus::Complete {
                return Err(Error::Incomplete(s.to_string(), c.to_string()));
            }
            let mut best = u64::MAX;
            for child in &list {
                best = best.min(self.bruteforce_rec(child, c, memo)?);
            }
            1 + best
        } else {
            // Semisimple product: maximal connected subgroups replace one
            // factor by one of its maximal subgroups or merge a diagonal
            // pair of equal factors.
            let factors = d.factors().to_vec();
            let mut best = u64::MAX;
            let mut seen: Vec<SimpleType> = Vec::new();
            for (i, &s) in factors.iter().enumerate() {
                if seen.contains(&s) {
                    continue;
                }
                seen.push(s);
                let (list, tag) = self
                    .maximal_connected(s, c)
                    .map_err(|_| Error::Incomplete(s.to_string(), c.to_string()))?;
                if tag.status != CompletenessStatus::Complete {
                    return Err(Error::Incomplete(s.to_string(), c.to_string()));
                }
                let mut rest = factors.clone();
                rest.remove(i);
                if factors.iter().filter(|&&t| t == s).count() >= 2 {
                    let merged = GroupDescriptor::new(0, 0, rest.clone());
                    best = best.min(self.bruteforce_rec(&merged, c, memo)?);
                }
                let rest_desc = GroupDescriptor::new(0, 0, rest);
                for child in &list {
                    let repl = child.concat(&rest_desc);
                    best = best.min(self.bruteforce_rec(&repl, c, memo)?);
                }
            }
            1 + best
        };
        memo.insert(d.clone(), value);
        Ok(value)
    }

    /// Stored (row-level) children of `parent` under `c`; used by the
    /// verifier's refutation search.
    pub fn stored_steps(
        &self,
        parent: &GroupDescriptor,
        c: Characteristic,
    ) -> Vec<MaxStepWitness> {
        self.stored_children(parent, c)
            .map(|r| MaxStepWitness {
                parent: r.parent.clone(),
                child: r.child.clone(),
                kind: r.kind,
                citation: r.citation.clone(),
            })
            .collect()
    }
}

fn a1() -> SimpleType {
    SimpleType::new(Family::A, 1).unwrap()
}

fn canon(family: Family, rank: u32) -> Vec<SimpleType> {
    canonicalize(family, rank).expect("in-range rank")
}

/// Interprets a canonical factor as a symplectic part: C_k, B_2 (= C_2),
/// A_1 (= C_1).
fn c_rank(t: SimpleType) -> Option<u64> {
    match (t.family(), t.rank()) {
        (Family::C, k) => Some(k as u64),
        (Family::B, 2) => Some(2),
        (Family::A, 1) => Some(1),
        _ => None,
    }
}

/// Interprets a single canonical factor as an even-orthogonal part:
/// D_k (k >= 4) or A_3 (= D_3).
fn d_rank_part(t: SimpleType) -> Option<u64> {
    match (t.family(), t.rank()) {
        (Family::D, k) => Some(k as u64),
        (Family::A, 3) => Some(3),
        _ => None,
    }
}

/// Interprets a canonical factor as an odd-orthogonal part: B_k or A_1 (= B_1).
fn b_rank(t: SimpleType) -> Option<u64> {
    match (t.family(), t.rank()) {
        (Family::B, k) => Some(k as u64),
        (Family::A, 1) => Some(1),
        _ => None,
    }
}

/// Two-part split where each part is a single factor.
fn split_ranks(added: &[SimpleType], f: fn(SimpleType) -> Option<u64>) -> Option<(u64, u64)> {
    if added.len() != 2 {
        return None;
    }
    Some((f(added[0])?, f(added[1])?))
}

/// D-splits where one part may be D_2 = A_1 A_1 (so up to 4 factors).
fn d_pair_split(added: &[SimpleType]) -> Option<(u64, u64)> {
    let a1s = added.iter().filter(|&&t| t == a1()).count();
    let others: Vec<SimpleType> = added.iter().copied().filter(|&t| t != a1()).collect();
    match (a1s, others.len()) {
        (2, 1) => Some((2, d_rank_part(others[0])?)),
        (4, 0) => Some((2, 2)),
        _ => None,
    }
}

fn step_is_b(added: &[SimpleType], rank: u64) -> bool {
    if rank < 1 || rank > u32::MAX as u64 {
        return false;
    }
    added == canon(Family::B, rank as u32).as_slice()
}

/// Semisimple Levi components after deleting node `i` (1-based, Bourbaki
/// numbering) from the Dynkin diagram of `t`.
pub fn levi_components(t: SimpleType, i: u32) -> Vec<SimpleType> {
    let r = t.rank();
    assert!((1..=r).contains(&i), "node out of range");
    let mut parts: Vec<SimpleType> = Vec::new();
    let mut push = |family: Family, rank: u32| {
        if rank >= 1 {
            parts.extend(canon(family, rank));
        }
    };
    match t.family() {
        Family::A => {
            push(Family::A, i - 1);
            push(Family::A, r - i);
        }
        Family::B => {
            if i < r {
                push(Family::A, i - 1);
                push(Family::B, r - i);
            } else {
                push(Family::A, r - 1);
            }
        }
        Family::C => {
            if i < r {
                push(Family::A, i - 1);
                push(Family::C, r - i);
            } else {
                push(Family::A, r - 1);
            }
        }
        Family::D => {
            if i <= r - 2 {
                push(Family::A, i - 1);
                push(Family::D, r - i);
            } else {
                push(Family::A, r - 1);
            }
        }
        Family::G => push(Family::A, 1),
        Family::F => match i {
            1 => push(Family::C, 3),
            2 => {
                push(Family::A, 1);
                push(Family::A, 2);
            }
            3 => {
                push(Family::A, 2);
                push(Family::A, 1);
            }
            _ => push(Family::B, 3),
        },
        Family::E => {
            let lists: &[&[(Family, u32)]] = match r {
                6 => &[
                    &[(Family::D, 5)],
                    &[(Family::A, 5)],
                    &[(Family::A, 1), (Family::A, 4)],
                    &[(Family::A, 2), (Family::A, 2), (Family::A, 1)],
                    &[(Family::A, 4), (Family::A, 1)],
                    &[(Family::D, 5)],
                ],
                7 => &[
                    &[(Family::D, 6)],
                    &[(Family::A, 6)],
                    &[(Family::A, 1), (Family::A, 5)],
                    &[(Family::A, 3), (Family::A, 2), (Family::A, 1)],
                    &[(Family::A, 4), (Family::A, 2)],
                    &[(Family::D, 5), (Family::A, 1)],
                    &[(Family::E, 6)],
                ],
                _ => &[
                    &[(Family::D, 7)],
                    &[(Family::A, 7)],
                    &[(Family::A, 1), (Family::A, 6)],
                    &[(Family::A, 4), (Family::A, 2), (Family::A, 1)],
                    &[(Family::A, 4), (Family::A, 3)],
                    &[(Family::D, 5), (Family::A, 2)],
                    &[(Family::E, 6), (Family::A, 1)],
                    &[(Family::E, 7)],
                ],
            };
            for &(f, k) in lists[(i - 1) as usize] {
                push(f, k);
            }
        }
    }
    parts
}

/// The maximal parabolic shapes U_k L T_1 of a simple type, deduplicated.
pub fn maximal_parabolics(t: SimpleType) -> Vec<GroupDescriptor> {
    let n = t.num_positive_roots();
    let mut shapes = Vec::new();
    for i in 1..=t.rank() {
        let levi = levi_components(t, i);
        let levi_roots: u64 = levi.iter().map(|s| s.num_positive_roots()).sum();
        let shape = GroupDescriptor::new(n - levi_roots, 1, levi);
        if !shapes.contains(&shape) {
            shapes.push(shape);
        }
    }
    shapes
}

/// Multiset difference: (parent \ child, child \ parent). Inputs are
/// canonically sorted factor lists.
fn multiset_diff(
    parent: &[SimpleType],
    child: &[SimpleType],
) -> (Vec<SimpleType>, Vec<SimpleType>) {
    let mut counts: HashMap<SimpleType, i64> = HashMap::new();
    for &t in parent {
        *counts.entry(t).or_insert(0) += 1;
    }
    for &t in child {
        *counts.entry(t).or_insert(0) -= 1;
    }
    let mut removed = Vec::new();
    let mut added = Vec::new();
    for (t, n) in counts {
        for _ in 0..n.abs() {
            if n > 0 {
                removed.push(t);
            } else {
                added.push(t);
            }
        }
    }
    (removed, added)
}
