//! Minimal unrefinable chain length (depth) computations: exact values
//! where tables exist, certified upper bounds from explicit chain
//! constructions, iterated-logarithm lower bounds, and the slow-growth
//! tower of odd orthogonal groups embedded via Steinberg modules.

use crate::chaincert::ChainCertificate;
use crate::descriptor::{Characteristic, GroupDescriptor};
use crate::error::{Error, Result};
use crate::rootdata::{canonicalize, Family, SimpleType};
use crate::tables;
use num_bigint::BigUint;
use num_integer::Roots;
use num_traits::{One, ToPrimitive};

/// Depth bounds; `lower == upper` means the value is exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DepthBounds {
    pub lower: u64,
    pub upper: u64,
}

impl DepthBounds {
    pub fn exact(v: u64) -> DepthBounds {
        DepthBounds { lower: v, upper: v }
    }

    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }
}

// ---------------------------------------------------------------------------
// Iterated-logarithm lower bound.
// ---------------------------------------------------------------------------

/// Smallest m with p^m >= x.
fn ceil_log(p: u64, x: u64) -> u64 {
    let mut m = 0;
    let mut v: u128 = 1;
    while v < x as u128 {
        v *= p as u128;
        m += 1;
    }
    m
}

/// Smallest s with s^2 >= n.
fn ceil_sqrt(n: u64) -> u64 {
    let s = n.sqrt();
    if s * s < n {
        s + 1
    } else {
        s
    }
}

/// psi_p(x): the least l such that e_l(p) >= x, where e_1 = p and
/// e_{l+1} = p^(e_l^2). Uses the recursion
/// psi_p(x) = 1 + psi_p(sqrt(log_p x)) for x > p, with ceilings; this is
/// exact because the e_l are integers.
pub fn psi(p: u64, mut x: u64) -> Result<u64> {
    if p < 2 {
        return Err(Error::Domain(format!("psi needs p >= 2, got {p}")));
    }
    let mut count = 1;
    while x > p {
        x = ceil_sqrt(ceil_log(p, x));
        count += 1;
    }
    Ok(count)
}

/// psi_p over arbitrary-precision input; one round of the recursion
/// brings the argument into u64 range.
pub fn psi_big(p: u64, x: &BigUint) -> Result<u64> {
    if p < 2 {
        return Err(Error::Domain(format!("psi needs p >= 2, got {p}")));
    }
    if let Some(small) = x.to_u64() {
        return psi(p, small);
    }
    // x > u64::MAX >= p, so recurse: ceil(log_p x) <= bits(x) for p >= 2,
    // and bits fits in u64.
    let big_p = BigUint::from(p);
    let mut m: u64 = 0;
    let mut v = BigUint::one();
    while &v < x {
        v *= &big_p;
        m += 1;
    }
    Ok(1 + psi(p, ceil_sqrt(m))?)
}

// ---------------------------------------------------------------------------
// Minimal-chain constructions (upper bounds, exact for curated types).
// ---------------------------------------------------------------------------

fn g(s: &str) -> GroupDescriptor {
    crate::descriptor::parse(s).expect("builder descriptor literals are well formed")
}

fn chain(names: &[&str]) -> Vec<GroupDescriptor> {
    names.iter().map(|s| g(s)).collect()
}

fn a1_tail() -> Vec<GroupDescriptor> {
    chain(&["A1", "U1 T1", "T1", "1"])
}

fn a1a1_tail() -> Vec<GroupDescriptor> {
    let mut v = chain(&["A1 A1"]);
    v.extend(a1_tail());
    v
}

fn prepend(head: &[&str], tail: Vec<GroupDescriptor>) -> Vec<GroupDescriptor> {
    let mut v = chain(head);
    v.extend(tail);
    v
}

fn simple_name(f: Family, r: u32) -> String {
    format!("{}{}", f.letter(), r)
}

/// Chain for the direct product X x Y from chains for X and Y: descend
/// through X with Y carried along, then descend through Y.
fn product_chain(
    x: &[GroupDescriptor],
    y: &[GroupDescriptor],
) -> Vec<GroupDescriptor> {
    let mut out: Vec<GroupDescriptor> = x.iter().map(|d| d.concat(&y[0])).collect();
    out.extend(y[1..].iter().cloned());
    out
}

fn is_p(c: Characteristic, p: u64) -> bool {
    c == Characteristic::Prime(p)
}

fn p_in(c: Characteristic, set: &[u64]) -> bool {
    matches!(c, Characteristic::Prime(p) if set.contains(&p))
}

fn a2_chain(c: Characteristic) -> Vec<GroupDescriptor> {
    if is_p(c, 2) {
        prepend(&["A2", "U2 A1 T1", "A1 T1"], a1_tail())
    } else {
        prepend(&["A2"], a1_tail())
    }
}

fn b2_chain(c: Characteristic) -> Vec<GroupDescriptor> {
    if p_in(c, &[2, 3]) {
        prepend(&["B2"], a1a1_tail())
    } else {
        prepend(&["B2"], a1_tail())
    }
}

fn g2_chain(c: Characteristic) -> Vec<GroupDescriptor> {
    if p_in(c, &[2, 3, 5]) {
        prepend(&["G2"], a1a1_tail())
    } else {
        prepend(&["G2"], a1_tail())
    }
}

fn a3_chain(c: Characteristic) -> Vec<GroupDescriptor> {
    if is_p(c, 2) {
        prepend(&["A3"], b2_chain(c))
    } else {
        prepend(&["A3"], a1a1_tail())
    }
}

fn b3_chain(c: Characteristic) -> Vec<GroupDescriptor> {
    prepend(&["B3"], g2_chain(c))
}

fn c3_chain(c: Characteristic) -> Vec<GroupDescriptor> {
    if is_p(c, 2) {
        prepend(&["C3"], g2_chain(c))
    } else if p_in(c, &[3, 5]) {
        prepend(&["C3"], a1a1_tail())
    } else {
        prepend(&["C3"], a1_tail())
    }
}

fn a4_chain(c: Characteristic) -> Vec<GroupDescriptor> {
    if is_p(c, 2) {
        prepend(&["A4", "U4 A3 T1", "A3 T1"], a3_chain(c))
    } else {
        prepend(&["A4"], b2_chain(c))
    }
}

fn b4_chain(c: Characteristic) -> Vec<GroupDescriptor> {
    if is_p(c, 2) {
        prepend(&["B4", "B2 B2"], b2_chain(c))
    } else if p_in(c, &[3, 5, 7]) {
        prepend(&["B4"], a1a1_tail())
    } else {
        prepend(&["B4"], a1_tail())
    }
}

fn c4_chain(c: Characteristic) -> Vec<GroupDescriptor> {
    if is_p(c, 2) {
        prepend(&["C4", "B2 B2"], b2_chain(c))
    } else if p_in(c, &[3, 5, 7]) {
        let mut v = chain(&["C4", "A1 A1 A1"]);
        v.extend(a1a1_tail());
        v
    } else {
        prepend(&["C4"], a1_tail())
    }
}

fn d4_chain(c: Characteristic) -> Vec<GroupDescriptor> {
    if p_in(c, &[2, 3]) {
        prepend(&["D4"], b3_chain(c))
    } else {
        prepend(&["D4"], a2_chain(c))
    }
}

fn f4_chain(c: Characteristic) -> Vec<GroupDescriptor> {
    if is_p(c, 2) {
        prepend(&["F4"], c4_chain(c))
    } else if p_in(c, &[3, 5]) {
        prepend(&["F4", "A2 A2"], a2_chain(c))
    } else if is_p(c, 7) {
        prepend(&["F4"], g2_chain(c))
    } else if is_p(c, 11) {
        prepend(&["F4"], b4_chain(c))
    } else {
        prepend(&["F4"], a1_tail())
    }
}

fn e6_chain(c: Characteristic) -> Vec<GroupDescriptor> {
    if p_in(c, &[2, 3]) {
        prepend(&["E6"], g2_chain(c))
    } else {
        prepend(&["E6"], a2_chain(c))
    }
}

fn e7_chain(c: Characteristic) -> Vec<GroupDescriptor> {
    if is_p(c, 2) {
        prepend(&["E7", "G2 C3", "G2 G2"], g2_chain(c))
    } else if is_p(c, 3) {
        prepend(&["E7", "A1 G2", "A1 A2"], a1a1_tail())
    } else if p_in(c, &[5, 7, 11, 13]) {
        prepend(&["E7"], a1a1_tail())
    } else {
        prepend(&["E7"], a1_tail())
    }
}

fn e8_chain(c: Characteristic) -> Vec<GroupDescriptor> {
    if is_p(c, 2) {
        prepend(&["E8", "D8", "B4", "B2 B2"], b2_chain(c))
    } else if is_p(c, 3) {
        prepend(&["E8", "A8", "A2 A2"], a2_chain(c))
    } else if p_in(c, &[5, 7, 11, 13, 17, 19]) {
        prepend(&["E8", "B2"], a1_tail())
    } else {
        prepend(&["E8"], a1_tail())
    }
}

/// Chain for the canonical form of C_r (handles r = 1, 2 aliases).
fn c_chain(r: u32, c: Characteristic) -> Vec<GroupDescriptor> {
    match r {
        1 => a1_tail(),
        2 => b2_chain(c),
        3 => c3_chain(c),
        4 => c4_chain(c),
        _ => {
            if c == Characteristic::Zero {
                return prepend(&[&simple_name(Family::C, r)], a1_tail());
            }
            let h = largest_power_of_two_below(r);
            let top = g(&simple_name(Family::C, r));
            if 2 * h == r {
                // C_r > C_h C_h > C_h (diagonal) > ...
                let sub = c_chain(h, c);
                let mut v = vec![top, sub[0].concat(&sub[0])];
                v.extend(sub);
                v
            } else {
                let mut v = vec![top];
                v.extend(product_chain(&c_chain(h, c), &c_chain(r - h, c)));
                v
            }
        }
    }
}

fn largest_power_of_two_below(r: u32) -> u32 {
    let mut h = 1;
    while h * 2 <= r {
        h *= 2;
    }
    if h == r {
        h / 2
    } else {
        h
    }
}

/// Chain for B_r. At p = 2, mirrors the symplectic construction via the
/// orthogonal subspace splits; otherwise descends to D_r first.
fn b_chain(r: u32, c: Characteristic) -> Vec<GroupDescriptor> {
    match r {
        1 => a1_tail(),
        2 => b2_chain(c),
        3 => b3_chain(c),
        4 => b4_chain(c),
        _ => {
            if c == Characteristic::Zero {
                return prepend(&[&simple_name(Family::B, r)], a1_tail());
            }
            let top = g(&simple_name(Family::B, r));
            if is_p(c, 2) {
                let h = largest_power_of_two_below(r);
                if 2 * h == r {
                    let sub = b_chain(h, c);
                    let mut v = vec![top, sub[0].concat(&sub[0])];
                    v.extend(sub);
                    v
                } else {
                    let mut v = vec![top];
                    v.extend(product_chain(&b_chain(h, c), &b_chain(r - h, c)));
                    v
                }
            } else {
                let mut v = vec![top];
                v.extend(d_chain(r, c));
                v
            }
        }
    }
}

/// Chain for the canonical form of D_r (r >= 2; D_2 and D_3 resolve to
/// their aliases).
fn d_chain(r: u32, c: Characteristic) -> Vec<GroupDescriptor> {
    match r {
        2 => a1a1_tail(),
        3 => a3_chain(c),
        4 => d4_chain(c),
        _ => {
            if c == Characteristic::Zero {
                let mut v = vec![g(&simple_name(Family::D, r))];
                v.extend(b_chain(r - 1, c));
                return v;
            }
            let top = g(&simple_name(Family::D, r));
            if is_p(c, 2) {
                // D_r > B_{r-1}, then the p = 2 orthogonal splits.
                let mut v = vec![top];
                v.extend(b_chain(r - 1, c));
                v
            } else if r % 2 == 0 {
                let h = r / 2;
                let sub = d_chain(h, c);
                let mut v = vec![top, sub[0].concat(&sub[0])];
                v.extend(sub);
                v
            } else if r == 5 {
                prepend(&["D5"], b2_chain(c))
            } else {
                // r odd >= 7: D_r > D_3 D_{r-3} with both parts even-sized
                // or aliased.
                let mut v = vec![top];
                v.extend(product_chain(&d_chain(3, c), &d_chain(r - 3, c)));
                v
            }
        }
    }
}

fn a_chain(r: u32, c: Characteristic) -> Vec<GroupDescriptor> {
    match r {
        1 => a1_tail(),
        2 => a2_chain(c),
        3 => a3_chain(c),
        4 => a4_chain(c),
        6 if c == Characteristic::Zero => prepend(&["A6", "B3"], g2_chain(c)),
        _ => {
            let name = simple_name(Family::A, r);
            if r % 2 == 1 {
                // A_r > C_{(r+1)/2}.
                let mut v = vec![g(&name)];
                v.extend(c_chain((r + 1) / 2, c));
                v
            } else if c == Characteristic::Zero {
                // A_r > B_{r/2} at p = 0.
                let mut v = vec![g(&name)];
                v.extend(b_chain(r / 2, c));
                v
            } else {
                // Descend through the end-node parabolic to A_{r-1}.
                let levi = simple_name(Family::A, r - 1);
                let mut v = chain(&[
                    &name,
                    &format!("U{} {} T1", r, levi),
                    &format!("{} T1", levi),
                ]);
                v.extend(a_chain(r - 1, c));
                v
            }
        }
    }
}

/// Explicit descending chain from the simple group `t`, realizing the
/// best curated upper bound on its depth (exact where tables apply).
pub fn min_chain_simple(t: SimpleType, c: Characteristic) -> Result<ChainCertificate> {
    let groups = simple_chain(t, c);
    ChainCertificate::new(c, groups)
}

fn simple_chain(t: SimpleType, c: Characteristic) -> Vec<GroupDescriptor> {
    let r = t.rank();
    match t.family() {
        Family::A => a_chain(r, c),
        Family::B => b_chain(r, c),
        Family::C => c_chain(r, c),
        Family::D => d_chain(r, c),
        Family::G => g2_chain(c),
        Family::F => f4_chain(c),
        Family::E => match r {
            6 => e6_chain(c),
            7 => e7_chain(c),
            _ => e8_chain(c),
        },
    }
}

// ---------------------------------------------------------------------------
// Depth bounds.
// ---------------------------------------------------------------------------

/// Depth bounds for a simple group. Exact for every type in
/// characteristic zero and for curated types (exceptional, classical of
/// rank <= 4) in positive characteristic; otherwise an interval
/// [max(psi_p(r), 4), constructed chain length].
pub fn depth_simple(t: SimpleType, c: Characteristic) -> Result<DepthBounds> {
    if let Some(v) = tables::depth_exact(t, c) {
        return Ok(DepthBounds::exact(v));
    }
    let p = match c {
        Characteristic::Prime(p) => p,
        Characteristic::Zero => unreachable!("char 0 depth is always tabulated"),
    };
    // A maximal soluble connected subgroup is a Borel, whose depth is its
    // dimension (> 3 here); an insoluble maximal subgroup has depth >= 3.
    // Either way the depth is at least 4 for rank >= 2.
    let lower = psi(p, t.rank() as u64)?.max(4);
    let upper = (simple_chain(t, c).len() - 1) as u64;
    if lower > upper {
        return Err(Error::Domain(format!(
            "internal invariant breach: depth bounds inverted for {t} at {c} ({lower} > {upper})"
        )));
    }
    Ok(DepthBounds { lower, upper })
}

/// Upper-bound chain length for a simple type without materializing the
/// chain (used by large sweeps; agrees with `min_chain_simple`).
pub fn depth_upper_len(t: SimpleType, c: Characteristic) -> u64 {
    let r = t.rank();
    if c == Characteristic::Zero || tables::depth_exact(t, c).is_some() {
        return depth_simple(t, c).map(|b| b.upper).unwrap_or(0);
    }
    match t.family() {
        Family::C => c_len(r, c),
        Family::B => b_len(r, c),
        Family::D => d_len(r, c),
        Family::A => a_len(r, c),
        _ => unreachable!("exceptional depth is always tabulated"),
    }
}

fn base_len(f: Family, r: u32, c: Characteristic) -> Option<u64> {
    if r <= 4 || c == Characteristic::Zero {
        let t = canonicalize(f, r).ok()?;
        if t.len() == 1 {
            return depth_simple(t[0], c).ok().map(|b| b.upper);
        }
        // D_2 alias: A1 A1.
        return Some(4);
    }
    None
}

fn c_len(r: u32, c: Characteristic) -> u64 {
    if let Some(v) = base_len(Family::C, r, c) {
        return v;
    }
    let h = largest_power_of_two_below(r);
    if 2 * h == r {
        2 + c_len(h, c)
    } else {
        1 + c_len(h, c) + c_len(r - h, c)
    }
}

fn b_len(r: u32, c: Characteristic) -> u64 {
    if let Some(v) = base_len(Family::B, r, c) {
        return v;
    }
    if is_p(c, 2) {
        let h = largest_power_of_two_below(r);
        if 2 * h == r {
            2 + b_len(h, c)
        } else {
            1 + b_len(h, c) + b_len(r - h, c)
        }
    } else {
        1 + d_len(r, c)
    }
}

fn d_len(r: u32, c: Characteristic) -> u64 {
    if let Some(v) = base_len(Family::D, r, c) {
        return v;
    }
    if is_p(c, 2) {
        1 + b_len(r - 1, c)
    } else if r % 2 == 0 {
        2 + d_len(r / 2, c)
    } else if r == 5 {
        1 + b_len(2, c)
    } else {
        1 + d_len(3, c) + d_len(r - 3, c)
    }
}

fn a_len(r: u32, c: Characteristic) -> u64 {
    if let Some(v) = base_len(Family::A, r, c) {
        return v;
    }
    if r % 2 == 1 {
        1 + c_len((r + 1) / 2, c)
    } else {
        3 + a_len(r - 1, c)
    }
}

/// Upper-bound chain lengths for all four classical families up to
/// `max_r`, computed bottom-up with the same recurrences as
/// [`depth_upper_len`]. Index by rank; entries below the canonical
/// minimum rank of a family are 0. Intended for large sweeps.
pub struct ClassicalUpperTable {
    pub a: Vec<u64>,
    pub b: Vec<u64>,
    pub c: Vec<u64>,
    pub d: Vec<u64>,
}

pub fn classical_upper_table(max_r: u32, ch: Characteristic) -> ClassicalUpperTable {
    let n = max_r as usize + 1;
    let mut t = ClassicalUpperTable {
        a: vec![0; n],
        b: vec![0; n],
        c: vec![0; n],
        d: vec![0; n],
    };
    let small = |f: Family, r: u32| depth_upper_len(SimpleType::new(f, r).unwrap(), ch);
    for r in 1..=max_r {
        let ru = r as usize;
        // C family (canonical r >= 3; slots 1, 2 hold the alias values
        // used by the recurrences: C_1 = A_1, C_2 = B_2).
        t.c[ru] = match r {
            1 => 3,
            2 => small(Family::B, 2),
            3 | 4 => small(Family::C, r),
            _ if ch == Characteristic::Zero => 4,
            _ => {
                let h = largest_power_of_two_below(r);
                if 2 * h == r {
                    2 + t.c[h as usize]
                } else {
                    1 + t.c[h as usize] + t.c[ru - h as usize]
                }
            }
        };
        if r == 1 {
            t.c[1] = 3;
            t.a[1] = 3;
            t.b[1] = 3;
            continue;
        }
        // D family (canonical r >= 4; slots 2 and 3 hold alias values).
        if r >= 2 {
            t.d[ru] = match r {
                2 => 4,
                3 => small(Family::A, 3),
                4 => small(Family::D, 4),
                _ if ch == Characteristic::Zero => 5,
                _ if is_p(ch, 2) => 1 + t.b[ru - 1],
                _ if r % 2 == 0 => 2 + t.d[ru / 2],
                5 => 1 + t.c[2],
                _ => 1 + t.d[3] + t.d[ru - 3],
            };
        }
        // B family (canonical r >= 2).
        t.b[ru] = match r {
            2..=4 => small(Family::B, r),
            _ if ch == Characteristic::Zero => 4,
            _ if is_p(ch, 2) => {
                let h = largest_power_of_two_below(r);
                if 2 * h == r {
                    2 + t.b[h as usize]
                } else {
                    1 + t.b[h as usize] + t.b[ru - h as usize]
                }
            }
            _ => 1 + t.d[ru],
        };
        // A family.
        t.a[ru] = match r {
            2..=4 => small(Family::A, r),
            6 if ch == Characteristic::Zero => 6,
            _ if r % 2 == 1 => 1 + t.c[(ru + 1) / 2],
            _ if ch == Characteristic::Zero => 4 + 1, // via B_{r/2} > A_1
            _ => 3 + t.a[ru - 1],
        };
    }
    t
}

/// Depth bounds for an arbitrary descriptor shape. The interval is valid
/// for every connected group of this shape:
/// - soluble groups have depth equal to dimension, exactly;
/// - each nontrivial radical layer forces at least one extra step and
///   costs at most its dimension;
/// - a semisimple product with n factors has depth at least n + 2 and at
///   most the sum over isotypic parts of (multiplicity - 1) + depth of
///   the factor.
pub fn depth(d: &GroupDescriptor, c: Characteristic) -> Result<DepthBounds> {
    if d.is_trivial() {
        return Ok(DepthBounds::exact(0));
    }
    if d.is_soluble() {
        return Ok(DepthBounds::exact(d.dim()));
    }
    let layers = (d.unipotent_dim() > 0) as u64 + (d.central_torus_dim() > 0) as u64;
    let radical = d.radical_dim();

    let mut lower_ss: u64 = 0;
    let mut upper_ss: u64 = 0;
    let n = d.factors().len() as u64;
    for (t, k) in d.isotypic_parts() {
        let b = depth_simple(t, c)?;
        lower_ss = lower_ss.max(k - 1 + b.lower);
        upper_ss += k - 1 + b.upper;
    }
    if n >= 2 {
        lower_ss = lower_ss.max(n + 2);
    }
    let bounds = DepthBounds {
        lower: layers + lower_ss,
        upper: radical + upper_ss,
    };
    if bounds.lower > bounds.upper {
        return Err(Error::Domain(format!(
            "internal invariant breach: depth bounds inverted for {} at {c}",
            d.render()
        )));
    }
    Ok(bounds)
}

/// Explicit chain realizing the upper bound of [`depth`]: strip the
/// unipotent part and torus one dimension at a time, then descend the
/// semisimple product with diagonal merges and per-factor minimal chains.
pub fn min_chain(d: &GroupDescriptor, c: Characteristic) -> Result<ChainCertificate> {
    let mut groups = vec![d.clone()];
    let mut u = d.unipotent_dim();
    let z = d.central_torus_dim();
    while u > 0 {
        u -= 1;
        groups.push(GroupDescriptor::new(u, z, d.factors().to_vec()));
    }
    for zz in (0..z).rev() {
        groups.push(GroupDescriptor::new(0, zz, d.factors().to_vec()));
    }
    // Semisimple descent, largest factor first.
    let mut parts = d.isotypic_parts();
    while let Some((t, k)) = parts.first().cloned() {
        let rest: Vec<SimpleType> = parts
            .iter()
            .skip(1)
            .flat_map(|&(s, m)| std::iter::repeat(s).take(m as usize))
            .collect();
        let rest_desc = GroupDescriptor::new(0, 0, rest);
        for j in (1..k).rev() {
            let mut f: Vec<SimpleType> = std::iter::repeat(t).take(j as usize).collect();
            f.extend(rest_desc.factors().iter().copied());
            groups.push(GroupDescriptor::new(0, 0, f));
        }
        for step in simple_chain(t, c).into_iter().skip(1) {
            groups.push(step.concat(&rest_desc));
        }
        parts.remove(0);
    }
    if groups.len() == 1 {
        // Trivial input: no chain exists.
        return Err(Error::TrivialGroup("descending chain"));
    }
    ChainCertificate::new(c, groups)
}

// ---------------------------------------------------------------------------
// Steinberg-module tower.
// ---------------------------------------------------------------------------

/// One rank in the tower of odd orthogonal groups B_{r_0} < B_{r_1} < ...
/// embedded via Steinberg modules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TowerRank {
    Exact(BigUint),
    /// (p^e - 1) / 2 with the exponent e given exactly; the value itself
    /// is too large to materialize.
    LogForm { exponent: BigUint },
}

#[derive(Debug, Clone)]
pub struct SteinbergTower {
    pub p: u64,
    pub ranks: Vec<TowerRank>,
    /// depth(B_{r_k}) <= k + 3 for the last exact-or-symbolic index k.
    pub depth_upper: u64,
}

/// Exponent cap for materializing p^e exactly (about 300 KB of digits
/// at p = 5).
const TOWER_EXP_CAP: u64 = 1_000_000;

/// Builds the tower r_0 = 1, r_1 = (p-1)/2, r_{l+1} = (p^(r_l^2) - 1)/2
/// up to k steps. Requires p >= 5 so that r_1 >= 2. Ranks are exact
/// until the exponent exceeds the cap; one further level is kept in
/// logarithmic form; asking beyond that is an error.
pub fn steinberg_tower(p: u64, k: u64) -> Result<SteinbergTower> {
    if !Characteristic::new(p).map(|c| c != Characteristic::Zero).unwrap_or(false) {
        return Err(Error::BadCharacteristic(p));
    }
    if p < 5 {
        return Err(Error::Domain(format!(
            "the Steinberg tower needs p >= 5 (got p = {p}): r_1 = (p-1)/2 must exceed 1"
        )));
    }
    let mut ranks = vec![TowerRank::Exact(BigUint::one())];
    let mut prev = BigUint::one();
    let big_p = BigUint::from(p);
    for l in 1..=k {
        if l == 1 {
            prev = BigUint::from((p - 1) / 2);
            ranks.push(TowerRank::Exact(prev.clone()));
            continue;
        }
        let exponent = &prev * &prev;
        match exponent.to_u64() {
            Some(e) if e <= TOWER_EXP_CAP => {
                prev = (big_p.pow(e as u32) - BigUint::one()) / BigUint::from(2u32);
                ranks.push(TowerRank::Exact(prev.clone()));
            }
            _ => {
                ranks.push(TowerRank::LogForm { exponent });
                if l < k {
                    return Err(Error::Domain(format!(
                        "tower rank r_{} is astronomically large; at most one symbolic level is supported",
                        l + 1
                    )));
                }
                break;
            }
        }
    }
    let reached = (ranks.len() - 1) as u64;
    Ok(SteinbergTower {
        p,
        ranks,
        depth_upper: reached + 3,
    })
}
