//! The iterated-logarithm lower bound psi_p and the matching tower of
//! odd orthogonal groups whose depth stays bounded while rank explodes.

use groupchain::{psi, psi_big, steinberg_tower, TowerRank};
use num_bigint::BigUint;

fn main() {
    // psi_p grows absurdly slowly: psi_2(x) <= 4 for all x < 2^256.
    for (p, xs) in [(2u64, vec![1u64, 2, 16, 17, 65536]), (3, vec![19683, 19684]), (5, vec![1_000_000])] {
        for x in xs {
            println!("psi_{p}({x}) = {}", psi(p, x).unwrap());
        }
    }
    let huge = BigUint::from(2u32).pow(260);
    println!("psi_2(2^260) = {}", psi_big(2, &huge).unwrap());

    // Steinberg tower at p = 5: depth(B_r) <= k + 3 along r_0, r_1, ...
    let tower = steinberg_tower(5, 3).unwrap();
    println!("\ntower at p = {}:", tower.p);
    for (k, r) in tower.ranks.iter().enumerate() {
        match r {
            TowerRank::Exact(v) => {
                let s = v.to_string();
                if s.len() <= 40 {
                    println!("  r_{k} = {s}");
                } else {
                    println!("  r_{k} = {}... ({} digits)", &s[..20], s.len());
                }
            }
            TowerRank::LogForm { exponent } => {
                println!("  r_{k} = (5^{exponent} - 1)/2  (symbolic)");
            }
        }
    }
    println!("  depth(B_(r_{})) <= {}", tower.ranks.len() - 1, tower.depth_upper);
}
