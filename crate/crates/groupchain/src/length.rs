//! Maximal unrefinable chain length l(G) and the canonical longest chain.
//!
//! For connected G, l(G) = dim R_u(G) + dim B + r where B is a Borel
//! subgroup of the reductive quotient and r its semisimple rank. The
//! builder realizes the bound with an explicit chain that descends
//! through end-node parabolic subgroups.

use crate::chaincert::ChainCertificate;
use crate::descriptor::{Characteristic, GroupDescriptor};
use crate::error::Result;
use crate::rootdata::{canonicalize, Family, SimpleType};

/// Exact maximal chain length.
pub fn length(g: &GroupDescriptor) -> u64 {
    let ss: u64 = g
        .factors()
        .iter()
        .map(|s| s.borel_dim() + s.rank() as u64)
        .sum();
    g.unipotent_dim() + g.central_torus_dim() + ss
}

/// Whether l(G) > dim(G) / 2, exactly (no floating point).
pub fn length_exceeds_half_dim(g: &GroupDescriptor) -> bool {
    2 * length(g) > g.dim()
}

/// Whether l(G) = dim(G). Holds exactly when every simple factor is A1
/// (soluble groups included): the per-factor deficit is N - r, which
/// vanishes only for A1.
pub fn length_equals_dim(g: &GroupDescriptor) -> bool {
    length(g) == g.dim()
}

/// For a simple type, the end-node maximal parabolic used by the longest
/// chain: returns (Levi components, unipotent dimension gained).
fn descent_parabolic(t: SimpleType) -> (Vec<SimpleType>, u64) {
    let r = t.rank();
    let (family, levi_rank) = match t.family() {
        // A_r: delete an end node, Levi A_{r-1}, u = r.
        Family::A => (Family::A, r - 1),
        // B_r, C_r: delete node 1, u = 2r - 1.
        Family::B => (Family::B, r - 1),
        Family::C => (Family::C, r - 1),
        // D_r: delete node 1, Levi D_{r-1}, u = 2(r - 1).
        Family::D => (Family::D, r - 1),
        Family::G => (Family::A, 1),
        Family::F => (Family::B, 3),
        Family::E => {
            return match r {
                6 => (vec![SimpleType::new(Family::D, 5).unwrap()], 16),
                7 => (vec![SimpleType::new(Family::E, 6).unwrap()], 27),
                _ => (vec![SimpleType::new(Family::E, 7).unwrap()], 57),
            }
        }
    };
    let levi = if levi_rank == 0 {
        vec![]
    } else {
        canonicalize(family, levi_rank).expect("rank below cap")
    };
    let levi_roots: u64 = levi.iter().map(|s| s.num_positive_roots()).sum();
    (levi, t.num_positive_roots() - levi_roots)
}

/// Builds an explicit unrefinable chain of length l(G), top to bottom.
///
/// Strategy: repeatedly push the largest simple factor into an end-node
/// maximal parabolic, absorbing its unipotent radical and central torus
/// into the soluble part; once no simple factors remain, strip the
/// unipotent part one dimension at a time, then the torus.
pub fn max_length_chain(g: &GroupDescriptor, c: Characteristic) -> Result<ChainCertificate> {
    let mut chain = vec![g.clone()];
    let mut cur = g.clone();
    while !cur.factors().is_empty() {
        let mut factors = cur.factors().to_vec();
        let t = factors.remove(0); // largest factor first in canonical order
        let (levi, du) = descent_parabolic(t);
        factors.extend(levi);
        cur = GroupDescriptor::new(
            cur.unipotent_dim() + du,
            cur.central_torus_dim() + 1,
            factors,
        );
        chain.push(cur.clone());
    }
    while cur.unipotent_dim() > 0 {
        cur = GroupDescriptor::new(cur.unipotent_dim() - 1, cur.central_torus_dim(), vec![]);
        chain.push(cur.clone());
    }
    while cur.central_torus_dim() > 0 {
        cur = GroupDescriptor::new(0, cur.central_torus_dim() - 1, vec![]);
        chain.push(cur.clone());
    }
    ChainCertificate::new(c, chain)
}
