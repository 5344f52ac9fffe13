//! Minimal unrefinable chains for the exceptional groups across small
//! characteristics. Depth jumps at characteristic-dependent breakpoints:
//! E8 has depth 9 only at p = 2, falling to 5 once p >= 5.

use groupchain::{min_chain_simple, parse, Characteristic, MaxSubDb};

fn main() {
    let db = MaxSubDb::builtin();
    for name in ["G2", "F4", "E6", "E7", "E8"] {
        let t = parse(name).unwrap().as_simple().unwrap();
        println!("{name}:");
        for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23] {
            let c = Characteristic::Prime(p);
            let chain = min_chain_simple(t, c).unwrap();
            let route: Vec<String> = chain.groups().iter().map(|g| g.render()).collect();
            let verified = chain.verify(db).verdict == groupchain::ChainVerdict::Verified;
            println!(
                "  p={p:>2}: depth {} {} {}",
                chain.length_of(),
                if verified { "[certified]" } else { "[unverified]" },
                route.join(" > ")
            );
        }
    }
}
