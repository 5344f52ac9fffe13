//! Chain difference cd = l - depth, chain ratio cr = l / depth, and
//! exact-arithmetic checks of the global inequalities relating these
//! invariants to dimension. All comparisons are integer or rational;
//! square roots are eliminated by comparing squared forms.

use crate::depth;
use crate::descriptor::{Characteristic, GroupDescriptor};
use crate::error::{Error, Result};
use crate::length::length;
use crate::rootdata::SimpleType;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

/// Closed interval of integers; `lo == hi` means exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntInterval {
    pub lo: u64,
    pub hi: u64,
}

/// Closed interval of rationals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatioInterval {
    pub lo: Ratio<u64>,
    pub hi: Ratio<u64>,
}

/// Verdict of a bound check. `Violated` carries the margin by which the
/// bound failed so a breach is auditable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum CheckReport {
    Holds,
    Violated { detail: String },
    Inconclusive { detail: String },
}

impl CheckReport {
    pub fn holds(&self) -> bool {
        matches!(self, CheckReport::Holds)
    }
}

/// cd(G) = l(G) - depth(G) as an interval; exact when depth is exact.
pub fn chain_difference(g: &GroupDescriptor, c: Characteristic) -> Result<IntInterval> {
    let l = length(g);
    let d = depth::depth(g, c)?;
    Ok(IntInterval {
        lo: l - d.upper.min(l),
        hi: l - d.lower.min(l),
    })
}

/// cr(G) = l(G) / depth(G) as an interval of exact rationals.
pub fn chain_ratio(g: &GroupDescriptor, c: Characteristic) -> Result<RatioInterval> {
    if g.is_trivial() {
        return Err(Error::TrivialGroup("chain ratio"));
    }
    let l = length(g);
    let d = depth::depth(g, c)?;
    Ok(RatioInterval {
        lo: Ratio::new(l, d.upper),
        hi: Ratio::new(l, d.lower),
    })
}

/// Checks dim(G/R(G)) <= 2 cd + 40 sqrt(400 + 2 cd) + 800.
///
/// In squared form: with x = dim - 2 cd - 800, the bound holds iff
/// x <= 0 or x^2 <= 1600 (400 + 2 cd). The bound is monotone increasing
/// in cd, so an interval is decided against its favorable endpoint when
/// possible.
pub fn check_cd_bound(g: &GroupDescriptor, c: Characteristic) -> Result<CheckReport> {
    let cd = chain_difference(g, c)?;
    let dim_ss: u64 = g.semisimple_part().iter().map(|t| t.dim()).sum();
    let holds_at = |cd: u64| -> bool {
        let rhs_linear = 2 * cd + 800;
        if dim_ss <= rhs_linear {
            return true;
        }
        let x = (dim_ss - rhs_linear) as u128;
        x * x <= 1600 * (400 + 2 * cd as u128)
    };
    Ok(report_monotone(cd, holds_at))
}

/// Checks Prop-style bounds dim G <= 2 cd + a for a simple type with
/// exact depth: a = 3 at p = 0, a = 40 in general.
pub fn check_simple_cd_bound(t: SimpleType, c: Characteristic) -> Result<CheckReport> {
    let g = GroupDescriptor::simple(t);
    let cd = chain_difference(&g, c)?;
    let a = if c == Characteristic::Zero { 3 } else { 40 };
    let dim = g.dim();
    Ok(report_monotone(cd, |cd| dim <= 2 * cd + a))
}

/// Checks dim S^k <= 2 cd + a for k >= 2 copies of a simple type:
/// a = 2 at p = 0, a = 28 in general.
pub fn check_ss_cd_bound(t: SimpleType, k: u64, c: Characteristic) -> Result<CheckReport> {
    if k < 2 {
        return Err(Error::Domain(format!("k must be at least 2, got {k}")));
    }
    let g = GroupDescriptor::new(0, 0, vec![t; k as usize]);
    let cd = chain_difference(&g, c)?;
    let a = if c == Characteristic::Zero { 2 } else { 28 };
    let dim = g.dim();
    Ok(report_monotone(cd, |cd| dim <= 2 * cd + a))
}

/// Checks dim G < 12 cr(G) at p = 0 for a simple type, i.e.
/// dim * depth < 12 * l in integers.
pub fn check_cr_bound(t: SimpleType, c: Characteristic) -> Result<CheckReport> {
    if c != Characteristic::Zero {
        return Ok(CheckReport::Inconclusive {
            detail: "the 12 cr bound is stated for characteristic zero only".into(),
        });
    }
    let g = GroupDescriptor::simple(t);
    let l = length(&g);
    let d = depth::depth(&g, c)?;
    let dim = g.dim();
    // dim < 12 l / depth, monotone against larger depth.
    let holds_at = |lam: u64| dim * lam < 12 * l;
    Ok(if holds_at(d.upper) {
        CheckReport::Holds
    } else if !holds_at(d.lower) {
        CheckReport::Violated {
            detail: format!("dim {dim} * depth >= 12 * l {l}"),
        }
    } else {
        CheckReport::Inconclusive {
            detail: format!("depth interval [{}, {}] straddles the bound", d.lower, d.upper),
        }
    })
}

fn report_monotone(cd: IntInterval, holds_at: impl Fn(u64) -> bool) -> CheckReport {
    if holds_at(cd.lo) {
        CheckReport::Holds
    } else if !holds_at(cd.hi) {
        CheckReport::Violated {
            detail: format!("bound fails even at cd = {}", cd.hi),
        }
    } else {
        CheckReport::Inconclusive {
            detail: format!("cd interval [{}, {}] straddles the bound", cd.lo, cd.hi),
        }
    }
}

/// Checks the dimension floor for n pairwise distinct simple types:
/// the sum of their dimensions is at least n^2.
pub fn sum_dims_floor(types: &[SimpleType]) -> Result<CheckReport> {
    for (i, a) in types.iter().enumerate() {
        for b in &types[..i] {
            if a == b {
                return Err(Error::Domain(format!("duplicate type {a} in sum_dims_floor")));
            }
        }
    }
    let n = types.len() as u64;
    let total: u64 = types.iter().map(|t| t.dim()).sum();
    Ok(if total >= n * n {
        CheckReport::Holds
    } else {
        CheckReport::Violated {
            detail: format!("sum of dims {total} < n^2 = {}", n * n),
        }
    })
}

/// Classification of whether depth(G) = l(G) can hold for a group of
/// this shape. Necessary condition: the semisimple part is trivial
/// (soluble, equality always holds) or a single A_1 (both outcomes occur,
/// depending on the actual extension, so only candidacy is asserted).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DepthLengthClass {
    Soluble,
    QuotientA1Candidate,
    Impossible,
}

pub fn depth_equals_length_classifier(g: &GroupDescriptor) -> DepthLengthClass {
    let factors = g.factors();
    if factors.is_empty() {
        DepthLengthClass::Soluble
    } else if factors.len() == 1 && factors[0].rank() == 1 {
        DepthLengthClass::QuotientA1Candidate
    } else {
        DepthLengthClass::Impossible
    }
}
