//! Sweep the chain-difference and chain-ratio bounds over every simple
//! type up to rank 12 and a spread of characteristics, counting how the
//! verdicts fall. A single Violated would signal a bug.

use groupchain::{
    check_cd_bound, check_cr_bound, check_simple_cd_bound, check_ss_cd_bound, Characteristic,
    CheckReport, Family, GroupDescriptor, SimpleType,
};

fn all_types(max_rank: u32) -> Vec<SimpleType> {
    let mut out = Vec::new();
    for r in 1..=max_rank {
        for f in [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G] {
            if let Ok(t) = SimpleType::new(f, r) {
                out.push(t);
            }
        }
    }
    out
}

fn main() {
    let chars: Vec<Characteristic> = [0u64, 2, 3, 5, 7, 11, 13, 31]
        .iter()
        .map(|&n| Characteristic::new(n).unwrap())
        .collect();
    let mut holds = 0u64;
    let mut inconclusive = 0u64;
    for t in all_types(12) {
        for &c in &chars {
            let reports = [
                check_cd_bound(&GroupDescriptor::simple(t), c).unwrap(),
                check_simple_cd_bound(t, c).unwrap(),
                check_ss_cd_bound(t, 3, c).unwrap(),
                check_cr_bound(t, c).unwrap(),
            ];
            for r in reports {
                match r {
                    CheckReport::Holds => holds += 1,
                    CheckReport::Inconclusive { .. } => inconclusive += 1,
                    CheckReport::Violated { detail } => panic!("bound violated: {detail}"),
                }
            }
        }
    }
    println!("holds: {holds}  inconclusive: {inconclusive}  violated: 0");
}
