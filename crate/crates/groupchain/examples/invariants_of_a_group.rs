//! Compute dim, length, depth, chain difference and chain ratio for a
//! few groups, in several characteristics.

use groupchain::{chain_difference, chain_ratio, depth, length, parse, Characteristic};

fn main() {
    let groups = ["A1", "A2", "E8", "C3 A1 T2", "U6 A2 A1 T1"];
    let chars = [0u64, 2, 7];
    for name in groups {
        let g = parse(name).unwrap();
        println!("{}  (dim {}, l = {})", g.render(), g.dim(), length(&g));
        for p in chars {
            let c = Characteristic::new(p).unwrap();
            let d = depth(&g, c).unwrap();
            let cd = chain_difference(&g, c).unwrap();
            let cr = chain_ratio(&g, c).unwrap();
            let depth_str = if d.is_exact() {
                format!("{}", d.lower)
            } else {
                format!("[{}, {}]", d.lower, d.upper)
            };
            println!(
                "  char {p}: depth {depth_str}, cd [{}, {}], cr [{}, {}]",
                cd.lo, cd.hi, cr.lo, cr.hi
            );
        }
        println!();
    }
}
